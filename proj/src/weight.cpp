#include "gradedcover/weight.hpp"

#include <algorithm>

#include "gradedcover/errors.hpp"

namespace gcover {

Weight::Weight(std::vector<std::string> g, std::vector<int> c)
    : gens(std::move(g)), comps(std::move(c)) {
  if (gens.size() != comps.size())
    throw DomainError("weight has " + std::to_string(comps.size()) + " components for " +
                      std::to_string(gens.size()) + " generators");
}

Weight Weight::zero(std::vector<std::string> gens) {
  std::vector<int> c(gens.size(), 0);
  return Weight(std::move(gens), std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](int c) { return c == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  if (!same_group(o))
    throw DomainError("adding weights over different generator lists");
  Weight w = *this;
  for (std::size_t i = 0; i < comps.size(); ++i) w.comps[i] += o.comps[i];
  return w;
}

bool Weight::operator==(const Weight& o) const {
  return gens == o.gens && comps == o.comps;
}

bool Weight::operator<(const Weight& o) const {
  if (!same_group(o))
    throw DomainError("comparing weights over different generator lists");
  return comps < o.comps;
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    int c = comps[i];
    if (c == 0) continue;
    if (!s.empty() && c > 0) s += "+";
    if (c == -1)
      s += "-";
    else if (c != 1)
      s += std::to_string(c);
    s += gens[i];
  }
  return s.empty() ? "0" : s;
}

Parity WeightSystem::parity_of_weight(const Weight& w) const {
  if (w.gens != gens) throw DomainError("weight does not belong to this weight system");
  // chi is a group homomorphism: chi(sum c_i g_i) = sum c_i chi(g_i) mod 2.
  int bit = 0;
  for (std::size_t i = 0; i < w.comps.size(); ++i)
    bit ^= (w.comps[i] * parity_bit(chi.at(gens[i]))) & 1;
  return static_cast<Parity>(bit);
}

bool WeightSystem::contains(const Weight& w) const {
  return std::find(delta.begin(), delta.end(), w) != delta.end();
}

bool WeightSystem::multiplicity_free() const {
  for (const Weight& w : delta)
    for (int c : w.comps)
      if (c != 0 && c != 1) return false;
  return true;
}

std::optional<std::string> WeightSystem::validate() const {
  if (chi.size() != gens.size()) return "chi must assign a parity to every generator";
  for (const auto& g : gens)
    if (!chi.count(g)) return "chi missing generator '" + g + "'";
  if (!contains(Weight::zero(gens))) return "0 must belong to delta";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<int> c(gens.size(), 0);
    c[i] = 1;
    if (!contains(Weight(gens, c))) return "generator '" + gens[i] + "' must belong to delta";
  }
  if (type_delta) {
    for (const Weight& w : delta)
      for (int c : w.comps)
        if (c < 0) return "type-Delta system admits no negative components (" + w.str() + ")";
  }
  return std::nullopt;
}

}  // namespace gcover
