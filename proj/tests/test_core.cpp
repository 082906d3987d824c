#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradedcover/axioms.hpp"
#include "gradedcover/builders.hpp"
#include "oracles.hpp"

using namespace gcover;

TEST_CASE("rationals parse and format in lowest terms") {
  CHECK(format_rational(Rational(2, 4)) == "1/2");
  CHECK(format_rational(Rational(-6, 3)) == "-2");
  CHECK(parse_rational("3/9") == Rational(1, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  Rational r;
  CHECK_FALSE(try_parse_rational("1/0", r));
  CHECK_FALSE(try_parse_rational("x", r));
  CHECK_FALSE(try_parse_rational("1/2/3", r));
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
}

TEST_CASE("weights add componentwise within one generator list") {
  Weight u({"a", "b"}, {1, 0});
  Weight v({"a", "b"}, {0, 2});
  CHECK((u + v).comps == std::vector<int>{1, 2});
  CHECK(u.str() == "a");
  CHECK((u + v).str() == "a+2b");
  CHECK(Weight::zero({"a", "b"}).str() == "0");
  Weight foreign({"c"}, {1});
  CHECK_THROWS_AS(u + foreign, DomainError);
}

TEST_CASE("weight systems validate and detect multiplicity freedom") {
  WeightSystem sys;
  sys.gens = {"a", "b"};
  sys.chi["a"] = Parity::odd;
  sys.chi["b"] = Parity::even;
  sys.delta = {Weight::zero({"a", "b"}), Weight({"a", "b"}, {1, 0}), Weight({"a", "b"}, {0, 1}),
               Weight({"a", "b"}, {1, 1})};
  CHECK_FALSE(sys.validate().has_value());
  CHECK(sys.multiplicity_free());
  CHECK(sys.parity_of_weight(Weight({"a", "b"}, {1, 1})) == Parity::odd);
  CHECK(sys.parity_of_weight(Weight({"a", "b"}, {2, 1})) == Parity::even);

  sys.delta.push_back(Weight({"a", "b"}, {2, 0}));
  CHECK_FALSE(sys.multiplicity_free());

  WeightSystem missing_zero = sys;
  missing_zero.delta.erase(missing_zero.delta.begin());
  CHECK(missing_zero.validate().has_value());

  WeightSystem negative = sys;
  negative.type_delta = true;
  negative.delta.push_back(Weight({"a", "b"}, {-1, 0}));
  CHECK(negative.validate().has_value());
}

TEST_CASE("gl(1|1) brackets match the matrix supercommutator values") {
  auto gl = build_gl(1, 1);
  REQUIRE(gl.dim() == 4);
  int e11 = gl.index_of("E11"), e12 = gl.index_of("E12");
  int e21 = gl.index_of("E21"), e22 = gl.index_of("E22");

  // [E12, E21] = E11 + E22 (anticommutator of the odd pair)
  Element x = Element::basis_vector(gl, e12);
  Element y = Element::basis_vector(gl, e21);
  Element expected(&gl);
  expected.add(e11, 1).add(e22, 1);
  CHECK(bracket(x, y) == expected);

  // [E11, E12] = E12
  CHECK(bracket(Element::basis_vector(gl, e11), x) == x);

  // [x, 0] = 0
  CHECK(bracket(x, Element(&gl)).is_zero());
}

TEST_CASE("bracket requires a common parent algebra") {
  auto gl = build_gl(1, 1);
  auto ab = build_abelian(2, 2);
  CHECK_THROWS_AS(bracket(Element::basis_vector(gl, 0), Element::basis_vector(ab, 0)), DomainError);
}

TEST_CASE("axiom suite passes on builder outputs") {
  CHECK(verify_axioms(build_gl(2, 1)).pass());
  CHECK(verify_axioms(build_abelian(2, 3)).pass());
  CHECK(verify_axioms(build_abelian(0, 0)).pass());
}

TEST_CASE("a raw skew-inconsistent table is reported on the right pair") {
  GradedLieSuperalgebra::Builder bld("bad");
  bld.add_basis("x1", Parity::even);
  bld.add_basis("x2", Parity::even);
  bld.set_bracket_raw(0, 1, {{0, Rational(1)}});
  bld.set_bracket_raw(1, 0, {});  // should be -x1, deliberately zero
  auto a = bld.build();
  auto rep = verify_axioms(a);
  REQUIRE(rep.skew.size() == 1);
  CHECK(rep.skew[0].i == 1);
  CHECK(rep.skew[0].j == 0);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("grading violations are found by direct scan") {
  GradedLieSuperalgebra::Builder bld("misgraded");
  bld.weight_generators({"q"});
  bld.add_basis("u", Weight({"q"}, {1}), Parity::even);
  bld.add_basis("v", Weight({"q"}, {1}), Parity::even);
  bld.add_basis("w", Weight({"q"}, {1}), Parity::even);
  bld.set_bracket(0, 1, {{2, Rational(1)}});  // weight 2 needed, w has weight 1
  auto rep = verify_axioms(bld.build());
  CHECK(rep.grading.size() == 1);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("parity additivity of constants is checked") {
  GradedLieSuperalgebra::Builder bld("oddprod");
  bld.add_basis("x", Parity::even);
  bld.add_basis("y", Parity::odd);
  bld.set_bracket(0, 1, {{0, Rational(1)}});  // [even, odd] must be odd, x is even
  auto rep = verify_axioms(bld.build());
  CHECK(!rep.parity.empty());
}

TEST_CASE("parallel and serial scans agree with the naive term-by-term oracle") {
  auto good = build_gl(2, 1);
  auto rep_par = verify_axioms(good, ExecutionPolicy::parallel);
  auto rep_ser = verify_axioms(good, ExecutionPolicy::serial);
  CHECK(rep_par.pass());
  CHECK(rep_ser.pass());
  CHECK(testing::naive_jacobi_all(good));
  CHECK(testing::naive_skew_all(good));

  // corrupt one constant; all three detectors must flag it identically
  auto bld = GradedLieSuperalgebra::Builder::from(good);
  bld.set_bracket(good.index_of("E12"), good.index_of("E21"),
                  {{good.index_of("E11"), Rational(2)}});
  auto bad = bld.build();
  auto bad_par = verify_axioms(bad, ExecutionPolicy::parallel);
  auto bad_ser = verify_axioms(bad, ExecutionPolicy::serial);
  CHECK_FALSE(bad_par.pass());
  CHECK_FALSE(bad_ser.pass());
  CHECK(bad_par.jacobi.size() == bad_ser.jacobi.size());
  REQUIRE(!bad_par.jacobi.empty());
  CHECK(bad_par.jacobi.front().i == bad_ser.jacobi.front().i);
  CHECK(bad_par.jacobi.front().j == bad_ser.jacobi.front().j);
  CHECK(bad_par.jacobi.front().k == bad_ser.jacobi.front().k);
  CHECK_FALSE(testing::naive_jacobi_all(bad));

  // the naive evaluator confirms each reported triple
  for (const auto& v : bad_par.jacobi) {
    auto residual = testing::naive_jacobi(bad, v.i, v.j, v.k);
    bool nonzero = false;
    for (const auto& c : residual) nonzero = nonzero || c != 0;
    CHECK(nonzero);
  }
}

TEST_CASE("bracket is bilinear over random sparse elements") {
  std::mt19937 rng(20240811);
  for (const auto& a : {build_gl(2, 1), build_osp(1, 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      Element x = testing::random_element(a, rng);
      Element y = testing::random_element(a, rng);
      Element z = testing::random_element(a, rng);
      Rational lambda = testing::random_rational(rng);
      CHECK(bracket(x * lambda + y, z) == bracket(x, z) * lambda + bracket(y, z));
      CHECK(bracket(z, x * lambda + y) == bracket(z, x) * lambda + bracket(z, y));
    }
  }
}

TEST_CASE("support and homogeneous components") {
  auto ab = build_abelian(2, 1);
  auto supp = ab.support();
  REQUIRE(supp.size() == 1);
  CHECK(supp[0].is_zero());
  CHECK(ab.homogeneous_component(ab.zero_weight()).size() == 3);

  auto glz = build_gl_zgraded({1, 1});
  CHECK(glz.homogeneous_component(Weight({"q"}, {1})).size() == 1);
  CHECK(glz.homogeneous_component(Weight({"q"}, {5})).empty());
  CHECK_THROWS_AS(glz.homogeneous_component(Weight({"z"}, {1})), DomainError);
}

TEST_CASE("chi-parity conflicts are rejected at ingest") {
  GradedLieSuperalgebra::Builder bld("conflict");
  WeightSystem sys;
  sys.gens = {"q"};
  sys.chi["q"] = Parity::odd;
  sys.delta = {Weight::zero({"q"}), Weight({"q"}, {1})};
  bld.attach_system(sys);
  CHECK_THROWS_AS(bld.add_basis("x", Weight({"q"}, {1}), Parity::even), DomainError);
  CHECK(bld.add_basis("x", Weight({"q"}, {1}), Parity::odd) == 0);
  CHECK(bld.add_basis("y", Weight({"q"}, {1})) == 1);  // derived from chi
}

TEST_CASE("covering verdicts survive a degree-preserving base change") {
  // moved here from the covering suite: exercises change_basis + axioms
  auto a = build_gl_zgraded({1, 1});
  std::mt19937 rng(7);
  Matrix M(a.dim(), a.dim());
  for (const auto& w : a.support()) {
    auto comp = a.homogeneous_component(w);
    // random invertible block: unit upper triangular with random entries
    for (std::size_t r = 0; r < comp.size(); ++r) {
      M.at(comp[r], comp[r]) = 1;
      for (std::size_t c = r + 1; c < comp.size(); ++c)
        M.at(comp[r], comp[c]) = testing::random_rational(rng);
    }
  }
  auto b = testing::change_basis(a, M);
  CHECK(verify_axioms(b).pass());
  CHECK(b.support() == a.support());
}
