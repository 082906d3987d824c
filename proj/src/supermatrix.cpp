#include "gradedcover/supermatrix.hpp"

#include "gradedcover/builders.hpp"
#include "gradedcover/errors.hpp"

namespace gcover {

int SuperMatrix::size() const {
  int n = 0;
  for (const auto& [sz, p] : blocks) {
    (void)p;
    n += sz;
  }
  return n;
}

Parity SuperMatrix::slot_parity(int i) const {
  int at = 0;
  for (const auto& [sz, p] : blocks) {
    if (i < at + sz) return p;
    at += sz;
  }
  throw DomainError("slot index outside the block pattern");
}

bool SuperMatrix::homogeneous(Parity p) const {
  for (int r = 0; r < entries.rows(); ++r)
    for (int c = 0; c < entries.cols(); ++c)
      if (entries.at(r, c) != 0 && slot_parity(r) + slot_parity(c) != p) return false;
  return true;
}

int LoopModel::find(int power, int base_index) const {
  for (std::size_t i = 0; i < provenance.size(); ++i)
    if (provenance[i].first == power && provenance[i].second == base_index)
      return static_cast<int>(i);
  return -1;
}

LoopModel loop_model(AlgebraPtr g, int top_degree) {
  if (top_degree < 0) throw DomainError("loop_model: negative truncation degree");
  LoopModel lm;
  lm.base = g;
  lm.top_degree = top_degree;

  WeightSystem sys;
  sys.gens = {"t"};
  sys.chi["t"] = Parity::odd;
  for (int d = 0; d <= top_degree; ++d) sys.delta.push_back(Weight({"t"}, {d}));
  sys.type_delta = true;

  GradedLieSuperalgebra::Builder bld("loop" + std::to_string(top_degree) + "(" + g->name() + ")");
  bld.attach_system(sys);
  for (int i = 0; i <= top_degree; ++i)
    for (int b = 0; b < g->dim(); ++b) {
      if (g->basis(b).parity != parity_of(i)) continue;
      bld.add_basis(g->basis(b).name + "@" + std::to_string(i), Weight({"t"}, {i}));
      lm.provenance.emplace_back(i, b);
    }

  for (std::size_t p = 0; p < lm.provenance.size(); ++p)
    for (std::size_t q = p; q < lm.provenance.size(); ++q) {
      auto [i, bi] = lm.provenance[p];
      auto [j, bj] = lm.provenance[q];
      if (i + j > top_degree) continue;
      SparseRow row;
      for (const auto& [m, c] : g->bracket_row(bi, bj)) {
        int t = -1;
        for (std::size_t s = 0; s < lm.provenance.size(); ++s)
          if (lm.provenance[s] == std::make_pair(i + j, m)) {
            t = static_cast<int>(s);
            break;
          }
        if (t < 0) throw ConsistencyError("loop bracket misses a basis slot");
        row.emplace_back(t, c);
      }
      if (!row.empty()) bld.set_bracket(static_cast<int>(p), static_cast<int>(q), std::move(row));
    }

  lm.algebra = std::make_shared<GradedLieSuperalgebra>(bld.build());
  return lm;
}

LoopModel loop_model(const GradedLieSuperalgebra& g, int top_degree) {
  return loop_model(std::make_shared<GradedLieSuperalgebra>(g), top_degree);
}

LoopIsoVerdict verify_loop_isomorphism(const FunctorOutput& p, const LoopModel& lm, bool rescale) {
  bool diag = p.tag == FunctorTag::diagonal || p.tag == FunctorTag::cover;
  if (!diag || p.provenance.empty())
    throw DomainError("verify_loop_isomorphism: diagonal cover expected");
  if (!(*p.base == *lm.base))
    throw DomainError("verify_loop_isomorphism: different base algebras");
  if (p.max_degree() != lm.top_degree)
    throw DomainError("verify_loop_isomorphism: truncation degrees disagree (" +
                      std::to_string(p.max_degree()) + " vs " + std::to_string(lm.top_degree) + ")");
  if (p.algebra->dim() != lm.algebra->dim())
    throw DomainError("verify_loop_isomorphism: dimension mismatch");

  LoopIsoVerdict v;
  v.map.name = rescale ? "loopiso" : "loopiso_unit";
  v.map.source = p.algebra;
  v.map.target = lm.algebra;
  v.map.phi = GradingMap::identity({"t"});
  v.map.mat = Matrix(lm.algebra->dim(), p.algebra->dim());
  for (std::size_t j = 0; j < p.provenance.size(); ++j) {
    const auto& pr = p.provenance[j];
    int t = lm.find(pr.degree, pr.base);
    if (t < 0) throw ConsistencyError("loop model misses a diagonal generator");
    v.map.mat.at(t, static_cast<int>(j)) =
        rescale ? Rational(1, factorial(pr.degree)) : Rational(1);
  }

  HomVerdict hv = check_homomorphism(v.map);
  if (!hv.pass) {
    v.pass = false;
    v.detail = hv.str(*p.algebra);
    return v;
  }
  // degree blocks are scaled identities, but re-check bijectivity honestly
  for (const auto& w : p.algebra->support()) {
    auto cols = p.algebra->homogeneous_component(w);
    auto rows = lm.algebra->homogeneous_component(w);
    if (cols.size() != rows.size() || !v.map.mat.submatrix(rows, cols).inverse()) {
      v.pass = false;
      v.detail = "degree block at " + w.str() + " is not bijective";
      return v;
    }
  }
  return v;
}

namespace {

std::vector<std::pair<int, Parity>> staircase_blocks(int m, int n, int d) {
  std::vector<std::pair<int, Parity>> blocks;
  for (int r = 1; r <= d + 2; ++r)
    blocks.emplace_back(r % 2 == 1 ? m : n, r % 2 == 1 ? Parity::even : Parity::odd);
  return blocks;
}

}  // namespace

GradedLieSuperalgebra build_staircase(int m, int n, int d) {
  if (d < 1) throw DomainError("build_staircase: degree must be positive");
  if (m < 0 || n < 0 || m + n < 1) throw DomainError("build_staircase: bad block sizes");
  auto blocks = staircase_blocks(m, n, d);
  int N = 0;
  std::vector<int> slot_block;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int i = 0; i < blocks[b].first; ++i) slot_block.push_back(static_cast<int>(b));
    N += blocks[b].first;
  }
  auto subdiag = [&](int r, int c) { return slot_block[r] - slot_block[c]; };

  WeightSystem sys;
  sys.gens = {"t"};
  sys.chi["t"] = Parity::odd;
  for (int w = 0; w <= d; ++w) sys.delta.push_back(Weight({"t"}, {w}));
  sys.type_delta = true;

  GradedLieSuperalgebra::Builder bld("stair(" + std::to_string(m) + "|" + std::to_string(n) + ";" +
                                     std::to_string(d) + ")");
  bld.attach_system(sys);
  std::vector<int> slot_index(static_cast<std::size_t>(N) * N, -1);
  std::vector<std::pair<int, int>> slots;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      int s = subdiag(r, c);
      if (s < 0 || s > d) continue;
      std::string nm = N < 10 ? "E" + std::to_string(r + 1) + std::to_string(c + 1)
                              : "E_" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
      slot_index[static_cast<std::size_t>(r) * N + c] = bld.add_basis(nm, Weight({"t"}, {s}));
      slots.emplace_back(r, c);
    }

  // [E_{ab}, E_{cd}] = delta_{bc} E_{ad} - (-1)^{|E_ab||E_cd|} delta_{da} E_{cb},
  // with entries falling below subdiagonal d discarded
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = i; j < slots.size(); ++j) {
      auto [a, b] = slots[i];
      auto [c, dd] = slots[j];
      SparseRow row;
      if (b == c && subdiag(a, dd) <= d) {
        int t = slot_index[static_cast<std::size_t>(a) * N + dd];
        if (t >= 0) row.emplace_back(t, 1);
      }
      bool both_odd = parity_of(subdiag(a, b)) == Parity::odd && parity_of(subdiag(c, dd)) == Parity::odd;
      if (dd == a && subdiag(c, b) <= d) {
        int t = slot_index[static_cast<std::size_t>(c) * N + b];
        if (t >= 0) row.emplace_back(t, both_odd ? 1 : -1);
      }
      row = normalized(std::move(row));
      if (!row.empty()) bld.set_bracket(static_cast<int>(i), static_cast<int>(j), std::move(row));
    }
  return bld.build();
}

const SuperMatrix& MatrixRealization::generator(int degree, const std::string& base_name) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].first == degree && labels[i].second == base_name) return generators[i];
  throw DomainError("no staircase generator for degree " + std::to_string(degree) + " and base " +
                    base_name);
}

MatrixRealization matrix_realization(int m, int n, int d) {
  if (d < 2) throw DomainError("matrix_realization: degree must be at least 2");
  if (m < 0 || n < 0 || m + n < 1) throw DomainError("matrix_realization: bad gl dimensions");

  MatrixRealization R;
  auto gl = std::make_shared<GradedLieSuperalgebra>(build_gl(m, n));
  R.cover = graded_cover(gl, d);
  R.ambient = std::make_shared<GradedLieSuperalgebra>(build_staircase(m, n, d));

  auto blocks = staircase_blocks(m, n, d);
  int N = 0;
  std::vector<int> offset;
  for (const auto& [sz, p] : blocks) {
    (void)p;
    offset.push_back(N);
    N += sz;
  }

  // ambient slot (row, col) of the (a, b) entry of X placed at staircase
  // position (rblk, sblk); the slot exists only when the row/column types
  // match the sides of the entry
  auto place = [&](int rblk, int sblk, int a, int b, int& row, int& col) {
    bool r_is_m = rblk % 2 == 0;  // 0-based: even positions are m-blocks
    bool s_is_m = sblk % 2 == 0;
    if (r_is_m ? a >= m : a < m) return false;
    if (s_is_m ? b >= m : b < m) return false;
    row = offset[rblk] + (r_is_m ? a : a - m);
    col = offset[sblk] + (s_is_m ? b : b - m);
    return true;
  };

  R.embedding.name = "staircase";
  R.embedding.source = R.cover.algebra;
  R.embedding.target = R.ambient;
  R.embedding.phi = GradingMap::identity({"t"});
  R.embedding.mat = Matrix(R.ambient->dim(), R.cover.algebra->dim());

  for (std::size_t j = 0; j < R.cover.provenance.size(); ++j) {
    const auto& pr = R.cover.provenance[j];
    int deg = pr.degree;
    // base index of gl(m|n) is a*(m+n)+b for the elementary matrix E_{a,b}
    int a = pr.base / (m + n), b = pr.base % (m + n);
    SuperMatrix gen;
    gen.blocks = blocks;
    gen.degree = deg;
    gen.entries = Matrix(N, N);
    for (int sblk = 0; sblk + deg < static_cast<int>(blocks.size()); ++sblk) {
      int row, col;
      if (place(sblk + deg, sblk, a, b, row, col)) gen.entries.at(row, col) = 1;
    }
    R.labels.emplace_back(deg, gl->basis(pr.base).name);
    R.generators.push_back(std::move(gen));
  }

  // scaled embedding columns from the unscaled generators
  for (std::size_t j = 0; j < R.generators.size(); ++j) {
    const SuperMatrix& gen = R.generators[j];
    Rational scale(1, factorial(gen.degree));
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) {
        if (gen.entries.at(r, c) == 0) continue;
        std::string nm = N < 10 ? "E" + std::to_string(r + 1) + std::to_string(c + 1)
                                : "E_" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
        int t = R.ambient->index_of(nm);
        if (t < 0) throw ConsistencyError("staircase slot missing from the pattern algebra");
        R.embedding.mat.at(t, static_cast<int>(j)) = scale * gen.entries.at(r, c);
      }
  }

  R.hom = check_homomorphism(R.embedding);
  if (!R.hom.pass) {
    // distinguish a broken law from a pattern that is not even closed
    auto trunc_subdiag = [&](int r, int c) {
      int rb = 0, cb = 0;
      for (std::size_t b2 = 0; b2 < blocks.size(); ++b2) {
        if (r >= offset[b2]) rb = static_cast<int>(b2);
        if (c >= offset[b2]) cb = static_cast<int>(b2);
      }
      return rb - cb;
    };
    Matrix span(N * N, static_cast<int>(R.generators.size()));
    for (std::size_t v = 0; v < R.generators.size(); ++v)
      for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
          span.at(r * N + c, static_cast<int>(v)) = R.generators[v].entries.at(r, c);
    for (std::size_t x = 0; x < R.generators.size(); ++x)
      for (std::size_t y = 0; y < R.generators.size(); ++y) {
        const auto& X = R.generators[x];
        const auto& Y = R.generators[y];
        Matrix XY = X.entries * Y.entries;
        Matrix YX = Y.entries * X.entries;
        Rational sign =
            (parity_of(X.degree) == Parity::odd && parity_of(Y.degree) == Parity::odd) ? 1 : -1;
        std::vector<Rational> rhs(static_cast<std::size_t>(N) * N);
        for (int r = 0; r < N; ++r)
          for (int c = 0; c < N; ++c)
            if (trunc_subdiag(r, c) <= d)
              rhs[static_cast<std::size_t>(r) * N + c] = XY.at(r, c) + sign * YX.at(r, c);
        if (!span.solve(rhs))
          throw ConsistencyError("staircase pattern is not bracket-closed at degrees (" +
                                 std::to_string(X.degree) + ", " + std::to_string(Y.degree) + ")");
      }
  }
  R.injective = R.embedding.mat.rank() == R.cover.algebra->dim();
  return R;
}

}  // namespace gcover
