#include "gradedcover/algebra.hpp"

#include <algorithm>

#include "gradedcover/errors.hpp"

namespace gcover {

SparseRow& add_scaled(SparseRow& acc, const SparseRow& row, const Rational& c) {
  if (c == 0) return acc;
  SparseRow merged;
  merged.reserve(acc.size() + row.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < row.size()) {
    if (j == row.size() || (i < acc.size() && acc[i].first < row[j].first)) {
      merged.push_back(acc[i++]);
    } else if (i == acc.size() || row[j].first < acc[i].first) {
      merged.emplace_back(row[j].first, c * row[j].second);
      ++j;
    } else {
      Rational v = acc[i].second + c * row[j].second;
      if (v != 0) merged.emplace_back(acc[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  acc = std::move(merged);
  return acc;
}

SparseRow normalized(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [idx, c] : row) {
    if (!out.empty() && out.back().first == idx)
      out.back().second += c;
    else
      out.emplace_back(idx, c);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second == 0; }),
            out.end());
  return out;
}

std::string format_row(const SparseRow& row, const std::vector<std::string>& names) {
  if (row.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : row) {
    if (!s.empty()) s += " + ";
    s += format_rational(c) + " " + names.at(idx);
  }
  return s;
}

GradedLieSuperalgebra::Builder& GradedLieSuperalgebra::Builder::weight_generators(
    std::vector<std::string> gens) {
  gens_ = std::move(gens);
  return *this;
}

GradedLieSuperalgebra::Builder& GradedLieSuperalgebra::Builder::attach_system(WeightSystem sys) {
  if (auto msg = sys.validate()) throw DomainError("invalid weight system: " + *msg);
  if (!gens_.empty() && gens_ != sys.gens)
    throw DomainError("weight system generators disagree with algebra generators");
  gens_ = sys.gens;
  system_ = std::move(sys);
  return *this;
}

int GradedLieSuperalgebra::Builder::add_basis(const std::string& name, Weight w,
                                              std::optional<Parity> parity) {
  if (w.gens != gens_) throw DomainError("basis element '" + name + "': wrong weight group");
  Parity p;
  if (system_) {
    Parity derived = system_->parity_of_weight(w);
    if (parity && *parity != derived)
      throw DomainError("basis element '" + name + "': declared parity conflicts with chi(weight)");
    p = derived;
  } else {
    if (!parity) throw DomainError("basis element '" + name + "': parity required (no chi attached)");
    p = *parity;
  }
  basis_.push_back(BasisElement{name, std::move(w), p});
  return static_cast<int>(basis_.size()) - 1;
}

int GradedLieSuperalgebra::Builder::add_basis(const std::string& name, Parity parity) {
  return add_basis(name, Weight::zero(gens_), parity);
}

namespace {

// c^k_{ji} = -(-1)^{|e_i||e_j|} c^k_{ij}
SparseRow skew_partner(const SparseRow& row, Parity pi, Parity pj) {
  Rational sign = (pi == Parity::odd && pj == Parity::odd) ? 1 : -1;
  SparseRow out = row;
  for (auto& [idx, c] : out) c *= sign;
  return out;
}

}  // namespace

void GradedLieSuperalgebra::Builder::set_bracket(int i, int j, SparseRow row) {
  if (i < 0 || j < 0 || i >= static_cast<int>(basis_.size()) || j >= static_cast<int>(basis_.size()))
    throw DomainError("set_bracket: basis index out of range");
  row = normalized(std::move(row));
  if (i > j) {
    row = skew_partner(row, basis_[i].parity, basis_[j].parity);
    std::swap(i, j);
  }
  if (row.empty())
    stored_.erase({i, j});
  else
    stored_[{i, j}] = std::move(row);
}

void GradedLieSuperalgebra::Builder::set_bracket_raw(int i, int j, SparseRow row) {
  if (i < 0 || j < 0 || i >= static_cast<int>(basis_.size()) || j >= static_cast<int>(basis_.size()))
    throw DomainError("set_bracket_raw: basis index out of range");
  stored_[{i, j}] = normalized(std::move(row));
}

GradedLieSuperalgebra GradedLieSuperalgebra::Builder::build() {
  GradedLieSuperalgebra a;
  a.name_ = name_;
  a.gens_ = gens_;
  a.system_ = system_;
  a.basis_ = basis_;
  a.stored_ = stored_;
  for (int i = 0; i < static_cast<int>(a.basis_.size()); ++i) {
    if (a.basis_[i].name.empty()) throw DomainError("basis element with empty name");
    if (!a.index_.emplace(a.basis_[i].name, i).second)
      throw DomainError("duplicate basis name '" + a.basis_[i].name + "'");
  }
  for (const auto& [key, row] : a.stored_)
    for (const auto& [idx, c] : row) {
      (void)c;
      if (idx < 0 || idx >= a.dim()) throw DomainError("structure constant targets unknown basis index");
    }
  return a;
}

GradedLieSuperalgebra::Builder GradedLieSuperalgebra::Builder::from(const GradedLieSuperalgebra& a) {
  Builder b(a.name_);
  b.gens_ = a.gens_;
  b.system_ = a.system_;
  b.basis_ = a.basis_;
  b.stored_ = a.stored_;
  return b;
}

int GradedLieSuperalgebra::index_of(const std::string& basis_name) const {
  auto it = index_.find(basis_name);
  return it == index_.end() ? -1 : it->second;
}

SparseRow GradedLieSuperalgebra::bracket_row(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim() || j >= dim())
    throw DomainError("bracket_row: basis index out of range");
  auto it = stored_.find({i, j});
  if (it != stored_.end()) return it->second;
  it = stored_.find({j, i});
  if (it != stored_.end()) return skew_partner(it->second, basis_[i].parity, basis_[j].parity);
  return {};
}

std::vector<Weight> GradedLieSuperalgebra::support() const {
  std::vector<Weight> out;
  for (const auto& b : basis_)
    if (std::find(out.begin(), out.end(), b.weight) == out.end()) out.push_back(b.weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> GradedLieSuperalgebra::homogeneous_component(const Weight& w) const {
  if (w.gens != gens_)
    throw DomainError("homogeneous_component: weight over foreign generator list");
  std::vector<int> idx;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].weight == w) idx.push_back(i);
  return idx;
}

std::vector<int> GradedLieSuperalgebra::parity_component(Parity p) const {
  std::vector<int> idx;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].parity == p) idx.push_back(i);
  return idx;
}

std::vector<Parity> GradedLieSuperalgebra::parity_support() const {
  std::vector<Parity> out;
  for (Parity p : {Parity::even, Parity::odd})
    if (!parity_component(p).empty()) out.push_back(p);
  return out;
}

bool GradedLieSuperalgebra::operator==(const GradedLieSuperalgebra& o) const {
  if (name_ != o.name_ || gens_ != o.gens_ || basis_.size() != o.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name != o.basis_[i].name || basis_[i].weight != o.basis_[i].weight ||
        basis_[i].parity != o.basis_[i].parity)
      return false;
  }
  // Compare effective brackets, not raw storage: the same algebra may carry
  // its table in either half.
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (bracket_row(i, j) != o.bracket_row(i, j)) return false;
  return true;
}

Element Element::basis_vector(const GradedLieSuperalgebra& a, int i) {
  Element e(&a);
  e.add(i, 1);
  return e;
}

Rational Element::coefficient(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Element& Element::add(int i, const Rational& c) {
  if (!parent_) throw DomainError("element without parent algebra");
  if (i < 0 || i >= parent_->dim()) throw DomainError("element coefficient index out of range");
  auto it = coeffs_.find(i);
  if (it == coeffs_.end()) {
    if (c != 0) coeffs_.emplace(i, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
  return *this;
}

namespace {
void require_same_parent(const Element& x, const Element& y, const char* op) {
  const auto *a = x.parent(), *b = y.parent();
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw DomainError(std::string(op) + ": elements of different algebras");
}
}  // namespace

Element Element::operator+(const Element& o) const {
  require_same_parent(*this, o, "+");
  Element r = *this;
  for (const auto& [i, c] : o.coeffs_) r.add(i, c);
  return r;
}

Element Element::operator-(const Element& o) const {
  require_same_parent(*this, o, "-");
  Element r = *this;
  for (const auto& [i, c] : o.coeffs_) r.add(i, -c);
  return r;
}

Element Element::operator*(const Rational& c) const {
  Element r(parent_);
  if (c == 0) return r;
  for (const auto& [i, v] : coeffs_) r.coeffs_.emplace(i, v * c);
  return r;
}

bool Element::operator==(const Element& o) const { return coeffs_ == o.coeffs_; }

std::string Element::str() const {
  if (!parent_) return "0";
  SparseRow row(coeffs_.begin(), coeffs_.end());
  std::vector<std::string> names;
  names.reserve(parent_->dim());
  for (const auto& b : parent_->basis()) names.push_back(b.name);
  return format_row(row, names);
}

Element bracket(const Element& x, const Element& y) {
  require_same_parent(x, y, "bracket");
  const GradedLieSuperalgebra* a = x.parent() ? x.parent() : y.parent();
  Element r(a);
  if (!a) return r;
  for (const auto& [i, ci] : x.coefficients())
    for (const auto& [j, cj] : y.coefficients()) {
      Rational f = ci * cj;
      for (const auto& [k, c] : a->bracket_row(i, j)) r.add(k, f * c);
    }
  return r;
}

}  // namespace gcover
