#include "gradedcover/functors.hpp"

#include <algorithm>
#include <map>

#include "gradedcover/errors.hpp"

namespace gcover {

std::vector<std::vector<int>> subsets_lex(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic by sequence: {}, {1}, {1,2}, ..., {1,k}, {2}, ...
  auto rec = [&](auto&& self, int last) -> void {
    out.push_back(cur);
    for (int next = last + 1; next <= k; ++next) {
      cur.push_back(next);
      self(self, next);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

std::string multi_index_name(const std::vector<int>& I, const std::string& base) {
  if (I.empty()) return base;
  std::string s;
  for (int i : I) s += "d" + std::to_string(i);
  return s + "." + base;
}

// sign of sorting the concatenation I.J of two disjoint increasing subsets
int shuffle_sign(const std::vector<int>& I, const std::vector<int>& J) {
  long long inversions = 0;
  for (int a : I)
    for (int b : J)
      if (a > b) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<int> disjoint_union(const std::vector<int>& I, const std::vector<int>& J) {
  std::vector<int> u;
  u.reserve(I.size() + J.size());
  std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(u));
  return u;
}

bool intersects(const std::vector<int>& I, const std::vector<int>& J) {
  std::size_t i = 0, j = 0;
  while (i < I.size() && j < J.size()) {
    if (I[i] == J[j]) return true;
    (I[i] < J[j]) ? ++i : ++j;
  }
  return false;
}

struct TowerLayout {
  std::vector<std::vector<int>> subsets;
  std::map<std::vector<int>, int> subset_pos;
  int dim_g = 0;
  int index(int subset, int base) const { return subset * dim_g + base; }
};

TowerLayout layout_for(const GradedLieSuperalgebra& g, int k) {
  TowerLayout l;
  l.subsets = subsets_lex(k);
  for (std::size_t s = 0; s < l.subsets.size(); ++s) l.subset_pos[l.subsets[s]] = static_cast<int>(s);
  l.dim_g = g.dim();
  return l;
}

// Parity of d_I(X) while the differentials are odd.
Parity old_parity(const GradedLieSuperalgebra& g, const std::vector<int>& I, int base) {
  return g.basis(base).parity + parity_of(static_cast<long long>(I.size()));
}

}  // namespace

int FunctorOutput::find(const std::vector<int>& index_set, int base_index) const {
  for (std::size_t i = 0; i < provenance.size(); ++i)
    if (provenance[i].base == base_index && provenance[i].index_set == index_set)
      return static_cast<int>(i);
  return -1;
}

int FunctorOutput::find_diagonal(int degree, int base_index) const {
  for (std::size_t i = 0; i < provenance.size(); ++i)
    if (provenance[i].base == base_index && provenance[i].degree == degree)
      return static_cast<int>(i);
  return -1;
}

int FunctorOutput::max_degree() const {
  int m = -1;
  for (const auto& p : provenance) m = std::max(m, p.degree);
  return m;
}

FunctorOutput takiff(AlgebraPtr g, int k) {
  if (k < 1) throw DomainError("takiff: k must be at least 1");
  const auto& G = *g;
  TowerLayout l = layout_for(G, k);

  GradedLieSuperalgebra::Builder bld("takiff" + std::to_string(k) + "(" + G.name() + ")");
  FunctorOutput out;
  for (const auto& I : l.subsets)
    for (int b = 0; b < G.dim(); ++b) {
      bld.add_basis(multi_index_name(I, G.basis(b).name), old_parity(G, I, b));
      out.provenance.push_back(Provenance{I, b, -1});
    }

  for (std::size_t si = 0; si < l.subsets.size(); ++si)
    for (std::size_t sj = si; sj < l.subsets.size(); ++sj) {
      const auto& I = l.subsets[si];
      const auto& J = l.subsets[sj];
      if (intersects(I, J)) continue;
      int pos_u = l.subset_pos.at(disjoint_union(I, J));
      int shuffle = shuffle_sign(I, J);
      for (int bi = 0; bi < G.dim(); ++bi) {
        // [xi_I (x) X, xi_J (x) Y] = (-1)^{|X| C(J)} xi_I xi_J (x) [X, Y]
        Rational coeff = shuffle;
        if (G.basis(bi).parity == Parity::odd && J.size() % 2 == 1) coeff = -coeff;
        int bj_start = (si == sj) ? bi : 0;
        for (int bj = bj_start; bj < G.dim(); ++bj) {
          SparseRow row;
          for (const auto& [m, c] : G.bracket_row(bi, bj)) row.emplace_back(l.index(pos_u, m), coeff * c);
          if (!row.empty())
            bld.set_bracket(l.index(static_cast<int>(si), bi), l.index(static_cast<int>(sj), bj),
                            std::move(row));
        }
      }
    }

  out.algebra = std::make_shared<GradedLieSuperalgebra>(bld.build());
  out.base = g;
  out.tag = FunctorTag::takiff;
  out.k = k;
  return out;
}

FunctorOutput takiff(const GradedLieSuperalgebra& g, int k) {
  return takiff(std::make_shared<GradedLieSuperalgebra>(g), k);
}

namespace {

GradedLieSuperalgebra split_algebra(const GradedLieSuperalgebra& a, const std::string& name) {
  auto bld = GradedLieSuperalgebra::Builder::from(a);
  bld.rename(name);
  for (const auto& [key, row] : a.stored()) {
    (void)row;
    if (a.basis(key.first).parity == Parity::odd && a.basis(key.second).parity == Parity::odd)
      bld.set_bracket(key.first, key.second, {});
  }
  return bld.build();
}

}  // namespace

FunctorOutput split(AlgebraPtr g) {
  FunctorOutput out;
  out.algebra = std::make_shared<GradedLieSuperalgebra>(
      split_algebra(*g, "split(" + g->name() + ")"));
  out.base = g;
  out.tag = FunctorTag::split;
  out.k = 0;
  return out;
}

FunctorOutput split(const FunctorOutput& in) {
  FunctorOutput out;
  out.algebra = std::make_shared<GradedLieSuperalgebra>(
      split_algebra(*in.algebra, "split(" + in.algebra->name() + ")"));
  out.base = in.tag == FunctorTag::takiff ? in.base : in.algebra;
  out.tag = FunctorTag::split;
  out.k = in.tag == FunctorTag::takiff ? in.k : 0;
  out.provenance = in.tag == FunctorTag::takiff ? in.provenance : std::vector<Provenance>{};
  return out;
}

FunctorOutput parity_change(const FunctorOutput& in) {
  if (in.tag != FunctorTag::split || in.k < 1 || !in.base ||
      in.provenance.size() != static_cast<std::size_t>(in.algebra->dim()))
    throw DomainError("parity_change is defined only on split(takiff(g, k)) outputs with provenance");
  const auto& G = *in.base;
  const int k = in.k;
  TowerLayout l = layout_for(G, k);

  std::vector<std::string> gens;
  gens.push_back("a");
  for (int i = 1; i <= k; ++i) gens.push_back("b" + std::to_string(i));

  WeightSystem sys;
  sys.gens = gens;
  for (const auto& gname : gens) sys.chi[gname] = Parity::odd;
  for (const auto& S : subsets_lex(k + 1)) {
    std::vector<int> comps(gens.size(), 0);
    for (int i : S) comps[i - 1] = 1;
    sys.delta.push_back(Weight(gens, comps));
  }
  sys.type_delta = true;

  GradedLieSuperalgebra::Builder bld("paritychange(" + in.algebra->name() + ")");
  bld.attach_system(sys);

  auto weight_of = [&](const std::vector<int>& I, int b) {
    std::vector<int> comps(gens.size(), 0);
    comps[0] = parity_bit(old_parity(G, I, b));
    for (int i : I) comps[i] = 1;
    return Weight(gens, comps);
  };

  FunctorOutput out;
  for (std::size_t i = 0; i < in.provenance.size(); ++i) {
    const auto& p = in.provenance[i];
    bld.add_basis(in.algebra->basis(static_cast<int>(i)).name, weight_of(p.index_set, p.base));
    out.provenance.push_back(p);
  }

  // Rules: zero when I and J meet; zero when both arguments were odd before
  // the parity change; d_{I u J}([X, Y]) otherwise, no sign.
  for (std::size_t si = 0; si < l.subsets.size(); ++si)
    for (std::size_t sj = si; sj < l.subsets.size(); ++sj) {
      const auto& I = l.subsets[si];
      const auto& J = l.subsets[sj];
      if (intersects(I, J)) continue;
      int pos_u = l.subset_pos.at(disjoint_union(I, J));
      for (int bi = 0; bi < G.dim(); ++bi) {
        int bj_start = (si == sj) ? bi : 0;
        for (int bj = bj_start; bj < G.dim(); ++bj) {
          if (old_parity(G, I, bi) == Parity::odd && old_parity(G, J, bj) == Parity::odd) continue;
          SparseRow row;
          for (const auto& [m, c] : G.bracket_row(bi, bj)) row.emplace_back(l.index(pos_u, m), c);
          if (!row.empty())
            bld.set_bracket(l.index(static_cast<int>(si), bi), l.index(static_cast<int>(sj), bj),
                            std::move(row));
        }
      }
    }

  out.algebra = std::make_shared<GradedLieSuperalgebra>(bld.build());
  out.base = in.base;
  out.tag = FunctorTag::parity_change;
  out.k = k;
  return out;
}

FunctorOutput diagonal(const FunctorOutput& in) {
  if (in.tag != FunctorTag::parity_change)
    throw DomainError("diagonal is defined only on parity_change outputs");
  const auto& G = *in.base;
  const auto& H = *in.algebra;
  const int k = in.k;

  // slots of the ambient algebra by (cardinality, base)
  std::vector<std::vector<std::vector<int>>> slots_by_card(
      static_cast<std::size_t>(k) + 1, std::vector<std::vector<int>>(G.dim()));
  for (std::size_t i = 0; i < in.provenance.size(); ++i) {
    const auto& p = in.provenance[i];
    slots_by_card[p.index_set.size()][p.base].push_back(static_cast<int>(i));
  }
  auto diagonal_slots = [&](int degree, int b) {
    std::vector<int> s;
    if (degree - 1 >= 0 && degree - 1 <= k)
      s.insert(s.end(), slots_by_card[degree - 1][b].begin(), slots_by_card[degree - 1][b].end());
    if (degree >= 0 && degree <= k)
      s.insert(s.end(), slots_by_card[degree][b].begin(), slots_by_card[degree][b].end());
    return s;
  };

  WeightSystem sys;
  sys.gens = {"t"};
  sys.chi["t"] = Parity::odd;
  for (int d = 0; d <= k + 1; ++d) sys.delta.push_back(Weight({"t"}, {d}));
  sys.type_delta = true;

  GradedLieSuperalgebra::Builder bld("diag(" + in.algebra->name() + ")");
  bld.attach_system(sys);
  FunctorOutput out;
  std::map<std::pair<int, int>, int> diag_index;  // (degree, base) -> new index
  for (int d = 0; d <= k + 1; ++d)
    for (int b = 0; b < G.dim(); ++b) {
      if (G.basis(b).parity != parity_of(d)) continue;
      int idx = bld.add_basis(G.basis(b).name + "'" + std::to_string(d), Weight({"t"}, {d}));
      diag_index[{d, b}] = idx;
      out.provenance.push_back(Provenance{{}, b, d});
    }

  auto express = [&](SparseRow acc, int degree, const std::string& what) {
    // write an ambient vector as a combination of degree-`degree` diagonal
    // generators; abort loudly if it does not lie in their span
    SparseRow row;
    if (degree > k + 1) {
      if (!acc.empty())
        throw ConsistencyError("diagonal bracket " + what + " does not vanish above the top degree");
      return row;
    }
    std::map<int, Rational> lambda;  // base index -> coefficient
    for (const auto& [slot, c] : acc) {
      const auto& p = in.provenance[slot];
      int card = static_cast<int>(p.index_set.size());
      if (card != degree - 1 && card != degree)
        throw ConsistencyError("diagonal bracket " + what + " hits a non-diagonal slot");
      auto it = lambda.find(p.base);
      if (it == lambda.end())
        lambda[p.base] = c;
      else if (it->second != c)
        throw ConsistencyError("diagonal bracket " + what + " is unbalanced across index sets");
    }
    for (const auto& [b, c] : lambda) {
      if (G.basis(b).parity != parity_of(degree))
        throw ConsistencyError("diagonal bracket " + what + " lands on a wrong-parity base element");
      // every slot of the diagonal generator must carry the same coefficient
      for (int slot : diagonal_slots(degree, b)) {
        bool found = false;
        for (const auto& [s, cc] : acc)
          if (s == slot) {
            found = (cc == c);
            break;
          }
        if (!found)
          throw ConsistencyError("diagonal bracket " + what + " is unbalanced across index sets");
      }
      row.emplace_back(diag_index.at({degree, b}), c);
    }
    return normalized(std::move(row));
  };

  for (const auto& [keyp, idxp] : diag_index)
    for (const auto& [keyq, idxq] : diag_index) {
      if (idxp > idxq) continue;
      auto [di, bi] = keyp;
      auto [dj, bj] = keyq;
      SparseRow acc;
      for (int u : diagonal_slots(di, bi))
        for (int v : diagonal_slots(dj, bj)) add_scaled(acc, H.bracket_row(u, v), 1);
      SparseRow row = express(std::move(acc), di + dj,
                              "[" + G.basis(bi).name + "'" + std::to_string(di) + ", " +
                                  G.basis(bj).name + "'" + std::to_string(dj) + "]");
      if (!row.empty()) bld.set_bracket(idxp, idxq, std::move(row));
    }

  out.algebra = std::make_shared<GradedLieSuperalgebra>(bld.build());
  out.base = in.base;
  out.tag = FunctorTag::diagonal;
  out.k = k;
  return out;
}

FunctorOutput graded_cover(AlgebraPtr g, int n) {
  if (n < 2) throw DomainError("graded_cover: degree must be at least 2");
  FunctorOutput d = diagonal(parity_change(split(takiff(g, n - 1))));
  auto bld = GradedLieSuperalgebra::Builder::from(*d.algebra);
  bld.rename("cover" + std::to_string(n) + "(" + g->name() + ")");
  d.algebra = std::make_shared<GradedLieSuperalgebra>(bld.build());
  d.tag = FunctorTag::cover;
  return d;
}

FunctorOutput graded_cover(const GradedLieSuperalgebra& g, int n) {
  return graded_cover(std::make_shared<GradedLieSuperalgebra>(g), n);
}

GradedMorphism truncation_map(const FunctorOutput& from_np1, const FunctorOutput& to_n) {
  bool diag_from = from_np1.tag == FunctorTag::diagonal || from_np1.tag == FunctorTag::cover;
  bool diag_to = to_n.tag == FunctorTag::diagonal || to_n.tag == FunctorTag::cover;
  if (!diag_from || !diag_to) throw DomainError("truncation_map expects diagonal outputs");
  if (from_np1.k != to_n.k + 1) throw DomainError("truncation_map: degrees are not consecutive");
  if (!(*from_np1.base == *to_n.base)) throw DomainError("truncation_map: different base algebras");

  GradedMorphism f;
  f.name = "truncate" + std::to_string(to_n.k + 1);
  f.source = from_np1.algebra;
  f.target = to_n.algebra;
  f.phi = GradingMap::identity({"t"});
  f.mat = Matrix(to_n.algebra->dim(), from_np1.algebra->dim());
  for (std::size_t j = 0; j < from_np1.provenance.size(); ++j) {
    const auto& p = from_np1.provenance[j];
    int t = to_n.find_diagonal(p.degree, p.base);
    if (t >= 0) f.mat.at(t, static_cast<int>(j)) = 1;
  }
  return f;
}

GradedMorphism map_through(const GradedMorphism& f, const FunctorOutput& on_source,
                           const FunctorOutput& on_target) {
  if (on_source.tag != on_target.tag || on_source.k != on_target.k)
    throw DomainError("map_through: functor outputs do not match");
  if (!(*f.source == *on_source.base) || !(*f.target == *on_target.base))
    throw DomainError("map_through: morphism does not connect the base algebras");
  if (!check_homomorphism(f).pass)
    throw DomainError("map_through: f is not a homomorphism");

  if (on_source.provenance.empty() || on_target.provenance.empty())
    throw DomainError("map_through: functor outputs lack provenance");

  GradedMorphism F;
  F.name = "through(" + f.name + ")";
  F.source = on_source.algebra;
  F.target = on_target.algebra;
  F.phi = GradingMap::identity(on_source.algebra->weight_generators());
  F.mat = Matrix(on_target.algebra->dim(), on_source.algebra->dim());

  bool diag = on_source.tag == FunctorTag::diagonal || on_source.tag == FunctorTag::cover;
  for (std::size_t j = 0; j < on_source.provenance.size(); ++j) {
    const auto& p = on_source.provenance[j];
    for (int c = 0; c < f.target->dim(); ++c) {
      const Rational& v = f.mat.at(c, p.base);
      if (v == 0) continue;
      int t = diag ? on_target.find_diagonal(p.degree, c) : on_target.find(p.index_set, c);
      if (t < 0) throw ConsistencyError("map_through: image misses the target basis");
      F.mat.at(t, static_cast<int>(j)) = v;
    }
  }
  auto verdict = check_homomorphism(F);
  if (!verdict.pass)
    throw ConsistencyError("map_through: induced map is not a homomorphism: " +
                           verdict.str(*F.source));
  return F;
}

namespace {

// Exterior multiplication by inserting the generators of the right factor one
// at a time; the takiff construction never calls this.
std::pair<int, std::vector<int>> grassmann_mul(const std::vector<int>& I,
                                               const std::vector<int>& J) {
  std::vector<int> word = I;
  int sign = 1;
  for (int x : J) {
    auto it = std::lower_bound(word.begin(), word.end(), x);
    if (it != word.end() && *it == x) return {0, {}};
    // xi_x starts at the right end and moves left past every larger generator
    int jumps = static_cast<int>(word.end() - it);
    if (jumps % 2 == 1) sign = -sign;
    word.insert(it, x);
  }
  return {sign, word};
}

}  // namespace

GradedLieSuperalgebra grassmann_model(const GradedLieSuperalgebra& g, int k) {
  if (k < 1) throw DomainError("grassmann_model: k must be at least 1");
  TowerLayout l = layout_for(g, k);
  GradedLieSuperalgebra::Builder bld("grassmann" + std::to_string(k) + "(" + g.name() + ")");
  for (const auto& I : l.subsets)
    for (int b = 0; b < g.dim(); ++b)
      bld.add_basis(multi_index_name(I, g.basis(b).name), old_parity(g, I, b));

  for (std::size_t si = 0; si < l.subsets.size(); ++si)
    for (std::size_t sj = si; sj < l.subsets.size(); ++sj) {
      auto [sign, word] = grassmann_mul(l.subsets[si], l.subsets[sj]);
      if (sign == 0) continue;
      int pos_u = l.subset_pos.at(word);
      for (int bi = 0; bi < g.dim(); ++bi) {
        Rational coeff = sign;
        if (g.basis(bi).parity == Parity::odd && l.subsets[sj].size() % 2 == 1) coeff = -coeff;
        int bj_start = (si == sj) ? bi : 0;
        for (int bj = bj_start; bj < g.dim(); ++bj) {
          SparseRow row;
          for (const auto& [m, c] : g.bracket_row(bi, bj)) row.emplace_back(l.index(pos_u, m), coeff * c);
          if (!row.empty())
            bld.set_bracket(l.index(static_cast<int>(si), bi), l.index(static_cast<int>(sj), bj),
                            std::move(row));
        }
      }
    }
  return bld.build();
}

bool same_structure_constants(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j)
      if (a.bracket_row(i, j) != b.bracket_row(i, j)) return false;
  return true;
}

bool grassmann_oracle_matches(const GradedLieSuperalgebra& candidate,
                              const GradedLieSuperalgebra& g, int k) {
  return same_structure_constants(candidate, grassmann_model(g, k));
}

bool grassmann_oracle_check(const GradedLieSuperalgebra& g, int k) {
  return grassmann_oracle_matches(*takiff(g, k).algebra, g, k);
}

}  // namespace gcover
