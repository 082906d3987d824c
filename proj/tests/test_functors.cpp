#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedcover/axioms.hpp"
#include "gradedcover/builders.hpp"
#include "gradedcover/functors.hpp"
#include "oracles.hpp"

using namespace gcover;

namespace {

AlgebraPtr gl11() {
  static AlgebraPtr a = std::make_shared<GradedLieSuperalgebra>(build_gl(1, 1));
  return a;
}

AlgebraPtr gl21() {
  static AlgebraPtr a = std::make_shared<GradedLieSuperalgebra>(build_gl(2, 1));
  return a;
}

}  // namespace

TEST_CASE("takiff dimension and basic rules") {
  auto t2 = takiff(gl11(), 2);
  CHECK(t2.algebra->dim() == 16);
  CHECK(verify_axioms(*t2.algebra).pass());
  CHECK_THROWS_AS(takiff(gl11(), 0), DomainError);

  // [d_i X, d_i Y] = 0 for all X, Y
  for (int i = 1; i <= 2; ++i)
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        CHECK(t2.algebra->bracket_row(t2.find({i}, x), t2.find({i}, y)).empty());
}

TEST_CASE("takiff satisfies the one-differential multiplication rule") {
  // [d_i X, d_j Y] = (-1)^{|X|} d_i d_j([X, Y]) with d_i d_j = -d_j d_i
  auto t2 = takiff(gl11(), 2);
  const auto& g = *gl11();
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      if (i == j) continue;
      for (int x = 0; x < g.dim(); ++x)
        for (int y = 0; y < g.dim(); ++y) {
          SparseRow got = t2.algebra->bracket_row(t2.find({i}, x), t2.find({j}, y));
          Rational coeff = g.basis(x).parity == Parity::odd ? -1 : 1;
          if (i > j) coeff = -coeff;  // d_i d_j = -d_{min,max} when i > j
          SparseRow want;
          for (const auto& [m, c] : g.bracket_row(x, y))
            want.emplace_back(t2.find({std::min(i, j), std::max(i, j)}, m), coeff * c);
          CHECK(got == normalized(std::move(want)));
        }
    }
}

TEST_CASE("takiff axioms hold for the suite") {
  CHECK(verify_axioms(*takiff(gl21(), 2).algebra).pass());
  CHECK(verify_axioms(*takiff(build_osp(1, 2), 2).algebra).pass());
}

TEST_CASE("split kills exactly the odd-odd brackets") {
  auto s = split(gl11());
  const auto& a = *s.algebra;
  int e11 = a.index_of("E11"), e12 = a.index_of("E12"), e21 = a.index_of("E21");
  CHECK(a.bracket_row(e12, e21).empty());
  CHECK(a.bracket_row(e11, e12) == SparseRow{{e12, Rational(1)}});
  CHECK(verify_axioms(a).pass());

  // purely even algebra: identity
  auto even = build_gl(2, 0);
  CHECK(same_structure_constants(*split(std::make_shared<GradedLieSuperalgebra>(even)).algebra,
                                 even));
}

TEST_CASE("split of takiff obeys the four multiplication relations") {
  auto s = split(takiff(gl11(), 1));
  const auto& a = *s.algebra;
  const auto& g = *gl11();
  auto odd = g.parity_component(Parity::odd);
  auto even = g.parity_component(Parity::even);

  for (int y1 : odd)
    for (int y2 : odd) {
      // [g_1, g_1] = 0
      CHECK(a.bracket_row(s.find({}, y1), s.find({}, y2)).empty());
      // [Y_1, d Y_2] = -d([Y_1, Y_2])
      SparseRow want;
      for (const auto& [m, c] : g.bracket_row(y1, y2)) want.emplace_back(s.find({1}, m), -c);
      CHECK(a.bracket_row(s.find({}, y1), s.find({1}, y2)) == normalized(std::move(want)));
    }
  // [g_1, d(g_0)] = 0
  for (int y : odd)
    for (int x : even) CHECK(a.bracket_row(s.find({}, y), s.find({1}, x)).empty());
  // [d g, d g] = 0
  for (int u = 0; u < g.dim(); ++u)
    for (int v = 0; v < g.dim(); ++v)
      CHECK(a.bracket_row(s.find({1}, u), s.find({1}, v)).empty());
}

TEST_CASE("parity change is only defined with provenance") {
  CHECK_THROWS_AS(parity_change(split(gl11())), DomainError);
}

TEST_CASE("parity change flips the odd differential sign and keeps the theorem") {
  auto pc = parity_change(split(takiff(gl11(), 1)));
  const auto& h = *pc.algebra;
  const auto& g = *gl11();

  // new parities equal the base parities; weights live on generators a, b1
  for (std::size_t i = 0; i < pc.provenance.size(); ++i) {
    CHECK(h.basis(static_cast<int>(i)).parity == g.basis(pc.provenance[i].base).parity);
  }
  CHECK(h.weight_generators() == std::vector<std::string>{"a", "b1"});
  CHECK(h.system().has_value());
  CHECK(h.system()->multiplicity_free());

  // support {0, a, b, a+b}
  auto supp = h.support();
  REQUIRE(supp.size() == 4);
  CHECK(supp[0].str() == "0");
  CHECK(supp[1].str() == "b1");
  CHECK(supp[2].str() == "a");
  CHECK(supp[3].str() == "a+b1");

  // [Y_1, d Y_2] = +d([Y_1, Y_2]) after the parity change
  auto odd = g.parity_component(Parity::odd);
  for (int y1 : odd)
    for (int y2 : odd) {
      SparseRow want;
      for (const auto& [m, c] : g.bracket_row(y1, y2)) want.emplace_back(pc.find({1}, m), c);
      CHECK(h.bracket_row(pc.find({}, y1), pc.find({1}, y2)) == normalized(std::move(want)));
    }

  // this is the nontrivial theorem: the rebuilt bracket is a Lie superalgebra
  CHECK(verify_axioms(h).pass());
}

TEST_CASE("parity change rules on two differentials") {
  auto pc = parity_change(split(takiff(gl11(), 2)));
  const auto& h = *pc.algebra;
  const auto& g = *gl11();

  // Rule 1: [d_1 X, d_1 Y] = 0
  for (int x = 0; x < g.dim(); ++x)
    for (int y = 0; y < g.dim(); ++y)
      CHECK(h.bracket_row(pc.find({1}, x), pc.find({1}, y)).empty());

  // Rule 2: X, Y even with one differential each on both sides were odd
  // before the change, so the bracket vanishes
  auto even = g.parity_component(Parity::even);
  for (int x : even)
    for (int y : even)
      CHECK(h.bracket_row(pc.find({1}, x), pc.find({2}, y)).empty());

  // Rule 3 keeps no differential sign: [d_2 X, d_1 Y] = d_{12}([X, Y]) for odd X
  auto odd = g.parity_component(Parity::odd);
  for (int x : odd)
    for (int y : even) {
      SparseRow want;
      for (const auto& [m, c] : g.bracket_row(x, y)) want.emplace_back(pc.find({1, 2}, m), c);
      CHECK(h.bracket_row(pc.find({2}, x), pc.find({1}, y)) == normalized(std::move(want)));
    }

  CHECK(verify_axioms(h).pass());
}

TEST_CASE("parity change theorem holds at three differentials") {
  CHECK(verify_axioms(*parity_change(split(takiff(gl11(), 3))).algebra).pass());
  CHECK(verify_axioms(*parity_change(split(takiff(gl21(), 2))).algebra).pass());
}

TEST_CASE("negative control: without the parity change the diagonal dies") {
  auto s = split(takiff(gl11(), 1));
  const auto& a = *s.algebra;
  const auto& g = *gl11();
  auto odd = g.parity_component(Parity::odd);
  for (int y1 : odd)
    for (int y2 : odd) {
      Element u(&a), v(&a);
      u.add(s.find({}, y1), 1).add(s.find({1}, y1), 1);
      v.add(s.find({}, y2), 1).add(s.find({1}, y2), 1);
      CHECK(bracket(u, v).is_zero());
    }
}

TEST_CASE("diagonal extraction: binomial bracket and support") {
  auto c2 = graded_cover(gl11(), 2);
  CHECK(c2.algebra->dim() == 6);
  auto supp = c2.algebra->support();
  REQUIRE(supp.size() == 3);
  for (int d = 0; d <= 2; ++d) {
    CHECK(supp[d] == Weight({"t"}, {d}));
    CHECK(c2.algebra->homogeneous_component(Weight({"t"}, {d})).size() == 2);
  }

  // k = 1: [Y1'1, Y2'1] = 2 d[Y1, Y2] = 2 ([Y1,Y2])'2
  const auto& g = *gl11();
  auto odd = g.parity_component(Parity::odd);
  for (int y1 : odd)
    for (int y2 : odd) {
      SparseRow want;
      for (const auto& [m, c] : g.bracket_row(y1, y2))
        want.emplace_back(c2.find_diagonal(2, m), 2 * c);
      CHECK(c2.algebra->bracket_row(c2.find_diagonal(1, y1), c2.find_diagonal(1, y2)) ==
            normalized(std::move(want)));
    }
}

TEST_CASE("binomial law on all diagonal pairs up to degree 5") {
  auto c5 = graded_cover(gl11(), 5);
  const auto& g = *gl11();
  for (std::size_t p = 0; p < c5.provenance.size(); ++p)
    for (std::size_t q = 0; q < c5.provenance.size(); ++q) {
      int i = c5.provenance[p].degree, j = c5.provenance[q].degree;
      SparseRow want;
      if (i + j <= 5) {
        Rational coeff = binomial(i + j, i);
        for (const auto& [m, c] : g.bracket_row(c5.provenance[p].base, c5.provenance[q].base))
          want.emplace_back(c5.find_diagonal(i + j, m), coeff * c);
      }
      CHECK(c5.algebra->bracket_row(static_cast<int>(p), static_cast<int>(q)) ==
            normalized(std::move(want)));
    }
}

TEST_CASE("cover of an abelian algebra is abelian with full support") {
  auto c3 = graded_cover(std::make_shared<GradedLieSuperalgebra>(build_abelian(1, 1)), 3);
  CHECK(c3.algebra->dim() == 4);  // one generator per degree 0..3
  CHECK(c3.algebra->stored().empty());
  CHECK(c3.algebra->support().size() == 4);
}

TEST_CASE("cover dimensions match the source parity components") {
  auto c3 = graded_cover(gl21(), 3);
  const auto& g = *gl21();
  for (int d = 0; d <= 3; ++d)
    CHECK(c3.algebra->homogeneous_component(Weight({"t"}, {d})).size() ==
          g.parity_component(parity_of(d)).size());
  CHECK(verify_axioms(*c3.algebra).pass());
  CHECK_THROWS_AS(graded_cover(gl11(), 1), DomainError);

  // F'3(gl(1|1)): the degree-1 component is the two odd generators
  auto f3 = graded_cover(gl11(), 3);
  auto comp = f3.algebra->homogeneous_component(Weight({"t"}, {1}));
  REQUIRE(comp.size() == 2);
  for (int i : comp) CHECK(f3.algebra->basis(i).parity == Parity::odd);
}

TEST_CASE("purely even input gives copies of g in even degrees only") {
  auto c4 = graded_cover(std::make_shared<GradedLieSuperalgebra>(build_gl(2, 0)), 4);
  for (int d = 0; d <= 4; ++d)
    CHECK(c4.algebra->homogeneous_component(Weight({"t"}, {d})).size() ==
          (d % 2 == 0 ? 4 : 0));
  CHECK(verify_axioms(*c4.algebra).pass());
}

TEST_CASE("grassmann oracle agrees with takiff constant-for-constant") {
  CHECK(grassmann_oracle_check(*gl11(), 1));
  CHECK(grassmann_oracle_check(*gl11(), 2));
  CHECK(grassmann_oracle_check(*gl11(), 3));
  CHECK(grassmann_oracle_check(build_abelian(1, 2), 3));

  // negative control: one corrupted sign must be detected
  auto t2 = takiff(gl11(), 2);
  auto bld = GradedLieSuperalgebra::Builder::from(*t2.algebra);
  auto first = t2.algebra->stored().begin();
  SparseRow row = first->second;
  row[0].second = -row[0].second;
  bld.set_bracket(first->first.first, first->first.second, row);
  CHECK_FALSE(grassmann_oracle_matches(bld.build(), *gl11(), 2));
}

TEST_CASE("map_through carries the identity to the identity") {
  auto c2 = graded_cover(gl11(), 2);
  auto c2b = graded_cover(gl11(), 2);
  auto f = map_through(identity_morphism(gl11()), c2, c2b);
  CHECK(f.mat == Matrix::identity(c2.algebra->dim()));

  auto t2 = takiff(gl11(), 2);
  auto t2b = takiff(gl11(), 2);
  auto ft = map_through(identity_morphism(gl11()), t2, t2b);
  CHECK(ft.mat == Matrix::identity(t2.algebra->dim()));
}

TEST_CASE("map_through preserves composition on gl(1|1) endomorphisms") {
  // conjugation by diag(d1, d2): E_ab -> (d_a / d_b) E_ab
  auto conj = [&](Rational d1, Rational d2, const std::string& nm) {
    GradedMorphism f;
    f.name = nm;
    f.source = gl11();
    f.target = gl11();
    f.phi = GradingMap::identity({});
    f.mat = Matrix(4, 4);
    Rational d[2] = {d1, d2};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) f.mat.at(a * 2 + b, a * 2 + b) = d[a] / d[b];
    return f;
  };
  auto f = conj(Rational(2), Rational(3), "f");
  auto h = conj(Rational(1), Rational(-5), "h");
  auto c3 = graded_cover(gl11(), 3);
  auto c3b = graded_cover(gl11(), 3);
  auto Ff = map_through(f, c3, c3b);
  auto Fh = map_through(h, c3, c3b);
  auto Ffh = map_through(compose(f, h), c3, c3b);
  CHECK(Ffh.mat == compose(Ff, Fh).mat);
}

TEST_CASE("map_through of a subalgebra inclusion is a verified homomorphism") {
  // the span of E11+E22, E12, E21 inside gl(1|1)
  GradedLieSuperalgebra::Builder bld("sl-like");
  int h = bld.add_basis("h", Parity::even);
  int e = bld.add_basis("e", Parity::odd);
  int f = bld.add_basis("f", Parity::odd);
  bld.set_bracket(e, f, {{h, Rational(1)}});
  auto sub = std::make_shared<GradedLieSuperalgebra>(bld.build());
  REQUIRE(verify_axioms(*sub).pass());

  GradedMorphism incl;
  incl.name = "incl";
  incl.source = sub;
  incl.target = gl11();
  incl.phi = GradingMap::identity({});
  incl.mat = Matrix(4, 3);
  incl.mat.at(0, h) = 1;
  incl.mat.at(3, h) = 1;
  incl.mat.at(1, e) = 1;
  incl.mat.at(2, f) = 1;
  REQUIRE(check_homomorphism(incl).pass);

  auto cs = graded_cover(sub, 2);
  auto cg = graded_cover(gl11(), 2);
  auto F = map_through(incl, cs, cg);  // throws if the induced map failed
  CHECK(F.mat.rank() == cs.algebra->dim());

  // a graded map that is not a homomorphism is refused
  GradedMorphism broken = incl;
  broken.mat.at(1, e) = 2;  // e -> 2 E12 scales [e, f] wrongly
  CHECK_THROWS_AS(map_through(broken, cs, cg), DomainError);
}

TEST_CASE("truncation maps between consecutive covers are homomorphisms") {
  for (int n = 2; n <= 4; ++n) {
    auto big = graded_cover(gl11(), n + 1);
    auto small = graded_cover(gl11(), n);
    auto tr = truncation_map(big, small);
    CHECK(check_homomorphism(tr).pass);
  }
}
