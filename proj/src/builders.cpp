#include "gradedcover/builders.hpp"

#include <numeric>

#include "gradedcover/errors.hpp"
#include "gradedcover/linalg.hpp"

namespace gcover {

namespace {

std::string slot_name(int a, int b, int total) {
  // E12 style while single digits suffice, E_1_2 beyond
  if (total < 10) return "E" + std::to_string(a + 1) + std::to_string(b + 1);
  return "E_" + std::to_string(a + 1) + "_" + std::to_string(b + 1);
}

// Expands the supercommutator of two elementary matrices in the E basis by
// literal dense matrix multiplication; this is the oracle every gl-type
// builder derives its constants from.
SparseRow supercommutator_row(int N, int a, int b, int c, int d, Parity p1, Parity p2,
                              const std::vector<int>& slot_index) {
  Matrix X(N, N), Y(N, N);
  X.at(a, b) = 1;
  Y.at(c, d) = 1;
  Matrix XY = X * Y;
  Matrix YX = Y * X;
  Rational sign = (p1 == Parity::odd && p2 == Parity::odd) ? 1 : -1;
  SparseRow row;
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s) {
      Rational v = XY.at(r, s) + sign * YX.at(r, s);
      if (v != 0) row.emplace_back(slot_index[r * N + s], v);
    }
  return normalized(std::move(row));
}

}  // namespace

GradedLieSuperalgebra build_gl_pattern(const std::vector<std::pair<int, Parity>>& blocks,
                                       const std::string& name) {
  int N = 0;
  for (const auto& [sz, p] : blocks) {
    (void)p;
    if (sz < 0) throw DomainError("build_gl_pattern: negative block size");
    N += sz;
  }
  if (N < 1) throw DomainError("build_gl_pattern: empty pattern");
  std::vector<Parity> slot_parity(N);
  {
    int at = 0;
    for (const auto& [sz, p] : blocks)
      for (int i = 0; i < sz; ++i) slot_parity[at++] = p;
  }

  GradedLieSuperalgebra::Builder bld(name);
  std::vector<int> slot_index(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      slot_index[a * N + b] = bld.add_basis(slot_name(a, b, N), slot_parity[a] + slot_parity[b]);

  for (int i = 0; i < N * N; ++i)
    for (int j = i; j < N * N; ++j) {
      int a = i / N, b = i % N, c = j / N, d = j % N;
      SparseRow row = supercommutator_row(N, a, b, c, d, slot_parity[a] + slot_parity[b],
                                          slot_parity[c] + slot_parity[d], slot_index);
      if (!row.empty()) bld.set_bracket(i, j, std::move(row));
    }
  return bld.build();
}

GradedLieSuperalgebra build_gl(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("build_gl: negative dimension");
  if (m + n < 1) throw DomainError("build_gl: m + n must be at least 1");
  return build_gl_pattern({{m, Parity::even}, {n, Parity::odd}},
                          "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
}

GradedLieSuperalgebra build_gl_zgraded(const std::vector<int>& dims, ZGradedReading reading) {
  int N = std::accumulate(dims.begin(), dims.end(), 0);
  if (N < 1) throw DomainError("build_gl_zgraded: at least one positive dimension required");
  std::vector<int> slot_degree(N);
  {
    int at = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] < 0) throw DomainError("build_gl_zgraded: negative dimension");
      for (int i = 0; i < dims[k]; ++i) slot_degree[at++] = static_cast<int>(k);
    }
  }
  auto vparity = [&](int s) {
    return reading == ZGradedReading::super ? parity_of(slot_degree[s]) : Parity::even;
  };

  std::string name = "glz(";
  for (std::size_t k = 0; k < dims.size(); ++k)
    name += (k ? "," : "") + std::to_string(dims[k]);
  name += ")";

  WeightSystem sys;
  sys.gens = {"q"};
  sys.chi["q"] = reading == ZGradedReading::super ? Parity::odd : Parity::even;
  int top = std::max(static_cast<int>(dims.size()) - 1, 1);
  for (int w = -top; w <= top; ++w) sys.delta.push_back(Weight({"q"}, {w}));
  sys.type_delta = false;  // general Z-support, negative degrees allowed

  GradedLieSuperalgebra::Builder bld(name);
  bld.attach_system(sys);
  std::vector<int> slot_index(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      slot_index[a * N + b] =
          bld.add_basis(slot_name(a, b, N), Weight({"q"}, {slot_degree[a] - slot_degree[b]}));

  for (int i = 0; i < N * N; ++i)
    for (int j = i; j < N * N; ++j) {
      int a = i / N, b = i % N, c = j / N, d = j % N;
      SparseRow row = supercommutator_row(N, a, b, c, d, vparity(a) + vparity(b),
                                          vparity(c) + vparity(d), slot_index);
      if (!row.empty()) bld.set_bracket(i, j, std::move(row));
    }
  return bld.build();
}

GradedLieSuperalgebra build_osp(int p, int two_q) {
  return build_osp_realization(p, two_q).algebra;
}

OspRealization build_osp_realization(int p, int two_q) {
  if (p < 0) throw DomainError("build_osp: p must be nonnegative");
  if (two_q < 2 || two_q % 2 != 0)
    throw DomainError("build_osp: second argument must be a positive even integer");
  const int q = two_q / 2;
  const int N = p + 2 * q;

  // V basis: u_1..u_p (even, degree 0), l_1..l_q (odd, degree 1),
  // l'_1..l'_q (odd, degree -1).
  auto vpar = [&](int s) { return s < p ? Parity::even : Parity::odd; };
  auto vdeg = [&](int s) {
    if (s < p) return 0;
    return s < p + q ? 1 : -1;
  };
  Matrix Q(N, N);
  for (int i = 0; i < p; ++i) Q.at(i, i) = 1;
  for (int i = 0; i < q; ++i) {
    Q.at(p + i, p + q + i) = -1;  // Q(l_i, l'_i) = -1
    Q.at(p + q + i, p + i) = 1;   // Q(l'_i, l_i) = 1
  }

  WeightSystem sys;
  sys.gens = {"q"};
  sys.chi["q"] = Parity::odd;
  for (int w = -2; w <= 2; ++w) sys.delta.push_back(Weight({"q"}, {w}));

  GradedLieSuperalgebra::Builder bld("osp(" + std::to_string(p) + "|" + std::to_string(two_q) + ")");
  bld.attach_system(sys);

  struct Component {
    int degree;
    std::vector<Matrix> mats;
    std::vector<int> indices;  // algebra basis indices
  };
  std::vector<Component> comps;

  auto deg_tag = [](int d) {
    std::string s = d < 0 ? "m" + std::to_string(-d) : std::to_string(d);
    return s;
  };

  for (int d = -2; d <= 2; ++d) {
    Parity tpar = parity_of(d);
    // slots of End(V) in this (degree, parity) component
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c)
        if (vdeg(r) - vdeg(c) == d && (vpar(r) + vpar(c)) == tpar) slots.emplace_back(r, c);
    if (slots.empty()) continue;
    // Q(T x_r, y_c) + (-1)^{|T||x_r|} Q(x_r, T y_c) = 0 for all basis pairs
    Matrix eqs(N * N, static_cast<int>(slots.size()));
    for (std::size_t v = 0; v < slots.size(); ++v) {
      auto [s, r0] = slots[v];
      for (int c = 0; c < N; ++c) {
        // term Q(T x_{r0}, y_c): T has entry (s, r0)
        if (Q.at(s, c) != 0) eqs.at(r0 * N + c, static_cast<int>(v)) += Q.at(s, c);
      }
      for (int r = 0; r < N; ++r) {
        // term (-1)^{|T||x_r|} Q(x_r, T y_{r0}): contributes at equation (r, r0)
        Rational sgn = (tpar == Parity::odd && vpar(r) == Parity::odd) ? -1 : 1;
        if (Q.at(r, s) != 0) eqs.at(r * N + r0, static_cast<int>(v)) += sgn * Q.at(r, s);
      }
    }
    auto kernel = eqs.nullspace();
    if (kernel.empty()) continue;
    Component comp;
    comp.degree = d;
    int count = 0;
    for (const auto& vec : kernel) {
      Matrix T(N, N);
      for (std::size_t v = 0; v < slots.size(); ++v) T.at(slots[v].first, slots[v].second) = vec[v];
      comp.mats.push_back(std::move(T));
      comp.indices.push_back(bld.add_basis("t" + deg_tag(d) + "_" + std::to_string(++count),
                                           Weight({"q"}, {d})));
    }
    comps.push_back(std::move(comp));
  }

  OspRealization real;
  real.form = Q;
  for (int s = 0; s < N; ++s) {
    real.v_parity.push_back(vpar(s));
    real.v_degree.push_back(vdeg(s));
  }
  for (const auto& comp : comps)
    for (const auto& mat : comp.mats) real.matrices.push_back(mat);

  // structure constants: supercommutator expressed in the component bases
  auto find_comp = [&](int d) -> const Component* {
    for (const auto& c : comps)
      if (c.degree == d) return &c;
    return nullptr;
  };
  for (const auto& ca : comps)
    for (const auto& cb : comps)
      for (std::size_t x = 0; x < ca.mats.size(); ++x)
        for (std::size_t y = 0; y < cb.mats.size(); ++y) {
          if (ca.indices[x] > cb.indices[y]) continue;
          Parity pa = parity_of(ca.degree), pb = parity_of(cb.degree);
          Rational sign = (pa == Parity::odd && pb == Parity::odd) ? 1 : -1;
          Matrix br = ca.mats[x] * cb.mats[y];
          Matrix yx = cb.mats[y] * ca.mats[x];
          for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) br.at(r, c) += sign * yx.at(r, c);
          int dsum = ca.degree + cb.degree;
          const Component* target = (dsum >= -2 && dsum <= 2) ? find_comp(dsum) : nullptr;
          if (!target) {
            if (!br.is_zero())
              throw ConsistencyError("osp bracket escapes the degree window {-2..2}");
            continue;
          }
          if (br.is_zero()) continue;
          Matrix cols(N * N, static_cast<int>(target->mats.size()));
          std::vector<Rational> rhs(N * N);
          for (std::size_t v = 0; v < target->mats.size(); ++v)
            for (int r = 0; r < N; ++r)
              for (int c = 0; c < N; ++c) cols.at(r * N + c, static_cast<int>(v)) = target->mats[v].at(r, c);
          for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) rhs[r * N + c] = br.at(r, c);
          auto sol = cols.solve(rhs);
          if (!sol) throw ConsistencyError("osp bracket does not lie in the expected component");
          SparseRow row;
          for (std::size_t v = 0; v < sol->size(); ++v)
            if ((*sol)[v] != 0) row.emplace_back(target->indices[v], (*sol)[v]);
          if (!row.empty()) bld.set_bracket(ca.indices[x], cb.indices[y], std::move(row));
        }
  real.algebra = bld.build();
  return real;
}

GradedLieSuperalgebra build_abelian(int even_dim, int odd_dim) {
  if (even_dim < 0 || odd_dim < 0) throw DomainError("build_abelian: negative dimension");
  GradedLieSuperalgebra::Builder bld("abelian(" + std::to_string(even_dim) + "|" +
                                     std::to_string(odd_dim) + ")");
  for (int i = 0; i < even_dim; ++i) bld.add_basis("x" + std::to_string(i + 1), Parity::even);
  for (int i = 0; i < odd_dim; ++i) bld.add_basis("y" + std::to_string(i + 1), Parity::odd);
  return bld.build();
}

}  // namespace gcover
