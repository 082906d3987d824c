#include "gradedcover/morphism.hpp"

#include <algorithm>

#include "gradedcover/errors.hpp"

namespace gcover {

GradingMap GradingMap::identity(std::vector<std::string> gens) {
  GradingMap m;
  m.kind = Kind::linear;
  m.source_gens = gens;
  m.target_gens = gens;
  m.matrix.assign(gens.size(), std::vector<int>(gens.size(), 0));
  for (std::size_t i = 0; i < gens.size(); ++i) m.matrix[i][i] = 1;
  return m;
}

GradingMap GradingMap::linear(std::vector<std::string> source, std::vector<std::string> target,
                              std::vector<std::vector<int>> mm) {
  GradingMap m;
  m.kind = Kind::linear;
  m.source_gens = std::move(source);
  m.target_gens = std::move(target);
  m.matrix = std::move(mm);
  if (m.matrix.size() != m.target_gens.size())
    throw DomainError("grading map: row count must match target generators");
  for (const auto& row : m.matrix)
    if (row.size() != m.source_gens.size())
      throw DomainError("grading map: column count must match source generators");
  return m;
}

GradingMap GradingMap::parity_reduction(std::vector<std::string> source_gens) {
  GradingMap m;
  m.kind = Kind::parity;
  m.source_gens = std::move(source_gens);
  m.parity_coeffs.assign(m.source_gens.size(), 1);
  return m;
}

Weight GradingMap::apply(const Weight& w) const {
  if (kind != Kind::linear) throw DomainError("grading map is not weight-valued");
  if (w.gens != source_gens) throw DomainError("grading map applied to foreign weight");
  std::vector<int> out(target_gens.size(), 0);
  for (std::size_t r = 0; r < target_gens.size(); ++r)
    for (std::size_t c = 0; c < source_gens.size(); ++c) out[r] += matrix[r][c] * w.comps[c];
  return Weight(target_gens, out);
}

Parity GradingMap::apply_parity(const Weight& w) const {
  if (kind != Kind::parity) throw DomainError("grading map is not parity-valued");
  if (w.gens != source_gens) throw DomainError("grading map applied to foreign weight");
  int bit = 0;
  for (std::size_t c = 0; c < source_gens.size(); ++c) bit ^= (parity_coeffs[c] * w.comps[c]) & 1;
  return static_cast<Parity>(bit);
}

bool GradingMap::operator==(const GradingMap& o) const {
  return kind == o.kind && source_gens == o.source_gens && target_gens == o.target_gens &&
         matrix == o.matrix && parity_coeffs == o.parity_coeffs;
}

Element GradedMorphism::apply(const Element& x) const {
  if (!x.parent() || !(x.parent() == source.get() || *x.parent() == *source))
    throw DomainError("morphism applied to element of a different algebra");
  Element y(target.get());
  for (const auto& [j, c] : x.coefficients())
    for (int i = 0; i < target->dim(); ++i)
      if (mat.at(i, j) != 0) y.add(i, c * mat.at(i, j));
  return y;
}

SparseRow GradedMorphism::apply_basis(int j) const {
  SparseRow row;
  for (int i = 0; i < target->dim(); ++i)
    if (mat.at(i, j) != 0) row.emplace_back(i, mat.at(i, j));
  return row;
}

std::vector<int> GradedMorphism::target_component(const Weight& w) const {
  if (phi.kind == GradingMap::Kind::parity) return target->parity_component(phi.apply_parity(w));
  return target->homogeneous_component(phi.apply(w));
}

std::optional<std::string> validate_graded(const GradedMorphism& f) {
  if (!f.source || !f.target) return "morphism lacks source or target";
  if (f.mat.rows() != f.target->dim() || f.mat.cols() != f.source->dim())
    return "morphism matrix shape does not match algebra dimensions";
  if (f.phi.source_gens != f.source->weight_generators())
    return "grading map source generators do not match the source algebra";
  if (f.phi.kind == GradingMap::Kind::linear &&
      f.phi.target_gens != f.target->weight_generators())
    return "grading map target generators do not match the target algebra";

  for (int j = 0; j < f.source->dim(); ++j) {
    const BasisElement& src = f.source->basis(j);
    if (f.phi.kind == GradingMap::Kind::parity &&
        f.phi.apply_parity(src.weight) != src.parity)
      return "phi does not preserve parity on weight " + src.weight.str();
    for (int i = 0; i < f.target->dim(); ++i) {
      if (f.mat.at(i, j) == 0) continue;
      const BasisElement& dst = f.target->basis(i);
      if (dst.parity != src.parity)
        return "entry (" + dst.name + ", " + src.name + ") breaks parity preservation";
      if (f.phi.kind == GradingMap::Kind::linear && dst.weight != f.phi.apply(src.weight))
        return "entry (" + dst.name + ", " + src.name + ") leaves the phi-image component";
    }
  }
  return std::nullopt;
}

namespace {

HomVerdict check_hom_impl(const GradedMorphism& f, const std::vector<Weight>* C) {
  HomVerdict v;
  if (auto msg = validate_graded(f)) {
    v.pass = false;
    v.invalid = msg;
    return v;
  }
  const auto& A = *f.source;
  const auto& B = *f.target;
  auto in_C = [&](const Weight& w) {
    return std::find(C->begin(), C->end(), w) != C->end();
  };
  std::vector<SparseRow> image(A.dim());
  for (int j = 0; j < A.dim(); ++j) image[j] = f.apply_basis(j);

  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      if (C) {
        const Weight& wi = A.basis(i).weight;
        const Weight& wj = A.basis(j).weight;
        if (!in_C(wi) || !in_C(wj) || !in_C(wi + wj)) continue;
      }
      // f([e_i, e_j])
      SparseRow lhs;
      for (const auto& [m, c] : A.bracket_row(i, j)) add_scaled(lhs, image[m], c);
      // [f(e_i), f(e_j)]
      SparseRow rhs;
      for (const auto& [a, ca] : image[i])
        for (const auto& [b, cb] : image[j]) add_scaled(rhs, B.bracket_row(a, b), ca * cb);
      if (lhs != rhs) {
        add_scaled(lhs, rhs, -1);
        std::vector<std::string> names;
        for (const auto& e : B.basis()) names.push_back(e.name);
        v.pass = false;
        v.violations.push_back({i, j,
                                "f([" + A.basis(i).name + "," + A.basis(j).name +
                                    "]) - [f(.),f(.)] = " + format_row(lhs, names)});
      }
    }
  return v;
}

}  // namespace

HomVerdict check_homomorphism(const GradedMorphism& f) { return check_hom_impl(f, nullptr); }

HomVerdict check_partial_homomorphism(const GradedMorphism& f, const std::vector<Weight>& C) {
  return check_hom_impl(f, &C);
}

std::string HomVerdict::str(const GradedLieSuperalgebra& source) const {
  if (pass) return "pass";
  std::string s = "FAIL";
  if (invalid) return s + " (" + *invalid + ")";
  std::size_t shown = 0;
  for (const auto& viol : violations) {
    if (++shown > 10) break;
    s += "\n  pair (" + source.basis(viol.i).name + ", " + source.basis(viol.j).name + "): " +
         viol.detail;
  }
  return s;
}

GradedMorphism identity_morphism(AlgebraPtr a) {
  GradedMorphism f;
  f.name = "id(" + a->name() + ")";
  f.source = a;
  f.target = a;
  f.phi = GradingMap::identity(a->weight_generators());
  f.mat = Matrix::identity(a->dim());
  return f;
}

GradedMorphism compose(const GradedMorphism& f, const GradedMorphism& g) {
  if (!(f.source.get() == g.target.get() || *f.source == *g.target))
    throw DomainError("compose: middle algebras do not match");
  GradedMorphism h;
  h.name = f.name + "." + g.name;
  h.source = g.source;
  h.target = f.target;
  h.mat = f.mat * g.mat;
  if (g.phi.kind == GradingMap::Kind::parity) {
    // the target stays parity-graded; f preserves parity entrywise
    h.phi = g.phi;
  } else {
    if (f.phi.source_gens != g.phi.target_gens)
      throw DomainError("compose: grading maps do not chain");
    if (f.phi.kind == GradingMap::Kind::linear) {
      std::vector<std::vector<int>> m(f.phi.target_gens.size(),
                                      std::vector<int>(g.phi.source_gens.size(), 0));
      for (std::size_t r = 0; r < f.phi.target_gens.size(); ++r)
        for (std::size_t c = 0; c < g.phi.source_gens.size(); ++c)
          for (std::size_t t = 0; t < g.phi.target_gens.size(); ++t)
            m[r][c] += f.phi.matrix[r][t] * g.phi.matrix[t][c];
      h.phi = GradingMap::linear(g.phi.source_gens, f.phi.target_gens, std::move(m));
    } else {
      // parity map after a linear map
      GradingMap m;
      m.kind = GradingMap::Kind::parity;
      m.source_gens = g.phi.source_gens;
      m.parity_coeffs.assign(g.phi.source_gens.size(), 0);
      for (std::size_t c = 0; c < g.phi.source_gens.size(); ++c) {
        int bit = 0;
        for (std::size_t t = 0; t < f.phi.source_gens.size(); ++t)
          bit ^= (f.phi.parity_coeffs[t] * g.phi.matrix[t][c]) & 1;
        m.parity_coeffs[c] = bit;
      }
      h.phi = m;
    }
  }
  return h;
}

}  // namespace gcover
