// Acceptance suite: every structural claim the library stands on, checked
// exactly over Q (tolerance zero) and reported one line per criterion.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gradedcover/axioms.hpp"
#include "gradedcover/builders.hpp"
#include "gradedcover/covering.hpp"
#include "gradedcover/functors.hpp"
#include "gradedcover/io.hpp"
#include "gradedcover/supermatrix.hpp"

using namespace gcover;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& run) {
  std::string detail;
  bool ok = false;
  try {
    ok = run(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::vector<std::pair<std::string, GradedLieSuperalgebra>> suite() {
  std::vector<std::pair<std::string, GradedLieSuperalgebra>> s;
  s.emplace_back("gl(1|1)", build_gl(1, 1));
  s.emplace_back("gl(2|1)", build_gl(2, 1));
  s.emplace_back("gl(2|2)", build_gl(2, 2));
  s.emplace_back("glz(1,1)", build_gl_zgraded({1, 1}));
  s.emplace_back("osp(1|2)", build_osp(1, 2));
  return s;
}

GradedMorphism diag_conjugation(AlgebraPtr gl, Rational d1, Rational d2) {
  GradedMorphism f;
  f.name = "conj";
  f.source = gl;
  f.target = gl;
  f.phi = GradingMap::identity({});
  f.mat = Matrix(4, 4);
  Rational d[2] = {d1, d2};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) f.mat.at(a * 2 + b, a * 2 + b) = d[a] / d[b];
  return f;
}

int run_command(const std::string& cmd, std::string* output = nullptr) {
  if (!output) {
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) output->append(buf.data(), got);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  // 1. axiom suite on the builders and their covers of degree 2..4
  criterion(1, "axiom suite passes on the builders and their degree 2..4 covers",
            [](std::string& detail) {
              for (const auto& [name, g] : suite()) {
                if (!verify_axioms(g).pass()) {
                  detail = name;
                  return false;
                }
                auto base = std::make_shared<GradedLieSuperalgebra>(g);
                for (int n = 2; n <= 4; ++n) {
                  auto c = graded_cover(base, n);
                  if (!verify_axioms(*c.algebra).pass()) {
                    detail = "cover" + std::to_string(n) + "(" + name + ")";
                    return false;
                  }
                }
              }
              return true;
            });

  // 2. takiff equals the independent Grassmann model constant-for-constant
  criterion(2, "takiff matches the Grassmann tensor oracle for gl(1|1), gl(2|1), k <= 3",
            [](std::string& detail) {
              for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
                auto g = build_gl(m, n);
                for (int k = 1; k <= 3; ++k)
                  if (!grassmann_oracle_check(g, k)) {
                    detail = "gl(" + std::to_string(m) + "|" + std::to_string(n) + "), k=" +
                             std::to_string(k);
                    return false;
                  }
              }
              return true;
            });

  // 3. the four multiplication relations of the split Takiff algebra
  criterion(3, "split takiff relations hold on all applicable pairs of gl(1|1)",
            [](std::string& detail) {
              auto g = std::make_shared<GradedLieSuperalgebra>(build_gl(1, 1));
              auto s = split(takiff(g, 1));
              const auto& a = *s.algebra;
              auto odd = g->parity_component(Parity::odd);
              auto even = g->parity_component(Parity::even);
              for (int y1 : odd)
                for (int y2 : odd) {
                  if (!a.bracket_row(s.find({}, y1), s.find({}, y2)).empty()) {
                    detail = "[g1, g1] != 0";
                    return false;
                  }
                  SparseRow want;
                  for (const auto& [m, c] : g->bracket_row(y1, y2))
                    want.emplace_back(s.find({1}, m), -c);
                  if (a.bracket_row(s.find({}, y1), s.find({1}, y2)) !=
                      normalized(std::move(want))) {
                    detail = "[Y1, dY2] != -d([Y1, Y2])";
                    return false;
                  }
                }
              for (int y : odd)
                for (int x : even)
                  if (!a.bracket_row(s.find({}, y), s.find({1}, x)).empty()) {
                    detail = "[g1, d(g0)] != 0";
                    return false;
                  }
              for (int u = 0; u < g->dim(); ++u)
                for (int v = 0; v < g->dim(); ++v)
                  if (!a.bracket_row(s.find({1}, u), s.find({1}, v)).empty()) {
                    detail = "[dg, dg] != 0";
                    return false;
                  }
              return true;
            });

  // 4. the parity change is necessary: diagonal odd brackets die without it
  criterion(4, "diagonal odd brackets vanish before the parity change and equal 2 d[Y1,Y2] after",
            [](std::string& detail) {
              auto g = std::make_shared<GradedLieSuperalgebra>(build_gl(1, 1));
              auto s = split(takiff(g, 1));
              auto pc = parity_change(s);
              auto odd = g->parity_component(Parity::odd);
              for (int y1 : odd)
                for (int y2 : odd) {
                  Element u(s.algebra.get()), v(s.algebra.get());
                  u.add(s.find({}, y1), 1).add(s.find({1}, y1), 1);
                  v.add(s.find({}, y2), 1).add(s.find({1}, y2), 1);
                  if (!bracket(u, v).is_zero()) {
                    detail = "bracket survives without the parity change";
                    return false;
                  }
                  Element up(pc.algebra.get()), vp(pc.algebra.get());
                  up.add(pc.find({}, y1), 1).add(pc.find({1}, y1), 1);
                  vp.add(pc.find({}, y2), 1).add(pc.find({1}, y2), 1);
                  Element want(pc.algebra.get());
                  for (const auto& [m, c] : g->bracket_row(y1, y2))
                    want.add(pc.find({1}, m), 2 * c);
                  if (!(bracket(up, vp) == want)) {
                    detail = "bracket after the parity change is not 2 d[Y1, Y2]";
                    return false;
                  }
                }
              return true;
            });

  // 5. binomial law on the diagonal generators
  criterion(5, "binomial law [X'_i, Y'_j] = C(i+j, i) ([X,Y])'_{i+j} in covers of gl(1|1), n <= 5",
            [](std::string& detail) {
              auto g = std::make_shared<GradedLieSuperalgebra>(build_gl(1, 1));
              for (int n = 2; n <= 5; ++n) {
                auto c = graded_cover(g, n);
                for (std::size_t p = 0; p < c.provenance.size(); ++p)
                  for (std::size_t q = 0; q < c.provenance.size(); ++q) {
                    int i = c.provenance[p].degree, j = c.provenance[q].degree;
                    if (i + j > n) continue;
                    SparseRow want;
                    Rational coeff = binomial(i + j, i);
                    for (const auto& [m, cc] :
                         g->bracket_row(c.provenance[p].base, c.provenance[q].base))
                      want.emplace_back(c.find_diagonal(i + j, m), coeff * cc);
                    if (c.algebra->bracket_row(static_cast<int>(p), static_cast<int>(q)) !=
                        normalized(std::move(want))) {
                      detail = "n=" + std::to_string(n) + " at degrees (" + std::to_string(i) +
                               "," + std::to_string(j) + ")";
                      return false;
                    }
                  }
              }
              return true;
            });

  // 6. covering theorem and the unit-normalization negative control
  criterion(6, "1/i! projection certifies the covers; unit normalization fails at degrees (1,1)",
            [](std::string& detail) {
              for (const auto& [name, g] : suite()) {
                auto base = std::make_shared<GradedLieSuperalgebra>(g);
                for (int n = 2; n <= 4; ++n) {
                  auto p = graded_cover(base, n);
                  auto pi = covering_projection(p, base, Normalization::inverse_factorial);
                  auto cert = verify_covering(pi, p.algebra->support(),
                                              CoveringCertificate::Kind::semicovering);
                  if (!cert.pass()) {
                    detail = "certificate fails for cover" + std::to_string(n) + "(" + name + ")";
                    return false;
                  }
                  auto window = verify_covering(pi, p.algebra->support(),
                                                CoveringCertificate::Kind::full, true);
                  if (!window.pass()) {
                    detail = "full window certificate fails for " + name;
                    return false;
                  }
                  auto unit = covering_projection(p, base, Normalization::unit);
                  auto verdict = check_partial_homomorphism(unit, p.algebra->support());
                  if (verdict.pass) {
                    detail = "unit normalization passes on " + name + " (it must not)";
                    return false;
                  }
                  bool witness = false;
                  for (const auto& v : verdict.violations)
                    if (p.provenance[v.i].degree == 1 && p.provenance[v.j].degree == 1)
                      witness = true;
                  if (!witness) {
                    detail = "no degree-(1,1) witness against the unit normalization on " + name;
                    return false;
                  }
                }
              }
              return true;
            });

  // 7. universal lifts
  criterion(7, "lifts: Pi lifts to the identity, random graded homs lift exactly, and the "
               "covering lift agrees with the functor path",
            [](std::string& detail) {
              auto gl = std::make_shared<GradedLieSuperalgebra>(build_gl(1, 1));
              auto p = graded_cover(gl, 4);
              auto pi = covering_projection(p, gl, Normalization::inverse_factorial);
              auto cert =
                  verify_covering(pi, p.algebra->support(), CoveringCertificate::Kind::full, true);
              if (!cert.pass()) {
                detail = "certificate";
                return false;
              }
              if (lift_universal(pi, cert).mat != Matrix::identity(p.algebra->dim())) {
                detail = "lift of Pi is not the identity";
                return false;
              }
              std::mt19937 rng(1234);
              std::uniform_int_distribution<int> nz(1, 7);
              for (int trial = 0; trial < 8; ++trial) {
                auto theta = diag_conjugation(gl, nz(rng), nz(rng));
                GradedMorphism psi = compose(theta, pi);
                auto lift = lift_universal(psi, cert);
                if (pi.mat * lift.mat != psi.mat) {
                  detail = "Pi . Psi != psi on a randomized homomorphism";
                  return false;
                }
              }
              auto q = graded_cover(gl, 4);
              auto piq = covering_projection(q, gl, Normalization::inverse_factorial);
              auto certq =
                  verify_covering(piq, q.algebra->support(), CoveringCertificate::Kind::full, true);
              for (auto [d1, d2] : {std::pair{1, -1}, std::pair{2, 3}, std::pair{-1, 5}}) {
                auto f = diag_conjugation(gl, d1, d2);
                auto lifted = lift_between_coverings(f, cert, certq);
                auto through = map_through(f, p, q);
                if (lifted.mat != through.mat) {
                  detail = "covering lift disagrees with map_through";
                  return false;
                }
              }
              return true;
            });

  // 8. loop isomorphism
  criterion(8, "covers are loop algebras via X'_i -> (1/i!) X t^i, and not without the rescaling",
            [](std::string& detail) {
              for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
                auto g = std::make_shared<GradedLieSuperalgebra>(build_gl(m, n));
                for (int N = 2; N <= 4; ++N) {
                  auto p = graded_cover(g, N);
                  auto lm = loop_model(g, N);
                  if (!verify_loop_isomorphism(p, lm).pass) {
                    detail = "loop isomorphism fails at N=" + std::to_string(N);
                    return false;
                  }
                  if (verify_loop_isomorphism(p, lm, false).pass) {
                    detail = "unscaled map passes at N=" + std::to_string(N) + " (it must not)";
                    return false;
                  }
                }
              }
              return true;
            });

  // 9. staircase matrix realization
  criterion(9, "staircase realizations are injective homomorphisms closing the triangle with "
               "the loop model (gl(1|1), gl(2|1), d <= 3)",
            [](std::string& detail) {
              for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
                for (int d = 2; d <= 3; ++d) {
                  auto R = matrix_realization(m, n, d);
                  if (!R.hom.pass || !R.injective) {
                    detail = "realization fails at d=" + std::to_string(d);
                    return false;
                  }
                  auto lm = loop_model(R.cover.base, d);
                  auto iso = verify_loop_isomorphism(R.cover, lm);
                  if (!iso.pass) {
                    detail = "loop leg of the triangle fails";
                    return false;
                  }
                  GradedMorphism loop_to_matrix;
                  loop_to_matrix.name = "loopstair";
                  loop_to_matrix.source = lm.algebra;
                  loop_to_matrix.target = R.ambient;
                  loop_to_matrix.phi = GradingMap::identity({"t"});
                  loop_to_matrix.mat = Matrix(R.ambient->dim(), lm.algebra->dim());
                  for (std::size_t j = 0; j < lm.provenance.size(); ++j) {
                    auto [deg, baseidx] = lm.provenance[j];
                    const auto& gen = R.generator(deg, R.cover.base->basis(baseidx).name);
                    for (int r = 0; r < gen.entries.rows(); ++r)
                      for (int c = 0; c < gen.entries.cols(); ++c) {
                        if (gen.entries.at(r, c) == 0) continue;
                        std::string nm =
                            gen.entries.rows() < 10
                                ? "E" + std::to_string(r + 1) + std::to_string(c + 1)
                                : "E_" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
                        loop_to_matrix.mat.at(R.ambient->index_of(nm), static_cast<int>(j)) =
                            gen.entries.at(r, c);
                      }
                  }
                  if (!check_homomorphism(loop_to_matrix).pass) {
                    detail = "loop-to-matrix leg fails";
                    return false;
                  }
                  if (loop_to_matrix.mat * iso.map.mat != R.embedding.mat) {
                    detail = "triangle does not commute at d=" + std::to_string(d);
                    return false;
                  }
                }
              }
              return true;
            });

  // 10. the projection tower
  criterion(10, "degree truncations between consecutive covers are homomorphisms (n <= 4)",
            [](std::string& detail) {
              for (const auto& [name, g] : suite()) {
                auto base = std::make_shared<GradedLieSuperalgebra>(g);
                for (int n = 2; n <= 4; ++n) {
                  auto big = graded_cover(base, n + 1);
                  auto small = graded_cover(base, n);
                  if (!check_homomorphism(truncation_map(big, small)).pass) {
                    detail = name + " at n=" + std::to_string(n);
                    return false;
                  }
                }
              }
              return true;
            });

  // 11. I/O and the CLI
  criterion(11, "golden fixtures round-trip byte-for-byte; the CLI pipeline passes and the "
                "corrupted fixture fails naming the triple",
            [](std::string& detail) {
              namespace fs = std::filesystem;
              const std::string cli = GCOVER_CLI_PATH;
              const fs::path fixtures = GCOVER_FIXTURE_DIR;
              int count = 0;
              for (const auto& entry : fs::directory_iterator(fixtures)) {
                if (!entry.is_regular_file()) continue;
                std::ifstream in(entry.path());
                std::ostringstream ss;
                ss << in.rdbuf();
                std::string text = ss.str();
                Document doc = parse_document(text);
                if (to_text(doc) != text) {
                  detail = "round-trip differs for " + entry.path().filename().string();
                  return false;
                }
                if (parse_json(to_json_string(doc)) != doc) {
                  detail = "json round-trip differs for " + entry.path().filename().string();
                  return false;
                }
                ++count;
              }
              if (count < 6) {
                detail = "fixture directory looks incomplete";
                return false;
              }
              std::string pipeline = cli + " builtin gl:1,1 | " + cli +
                                     " functor --op F --n 3 | " + cli + " verify > /dev/null";
              if (run_command(pipeline) != 0) {
                detail = "pipeline exit code is not 0";
                return false;
              }
              std::string cover_out;
              if (run_command(cli + " cover " + (fixtures / "gl11.alg").string() + " --n 2",
                              &cover_out) != 0 ||
                  cover_out.find("supportweight 2") == std::string::npos ||
                  cover_out.find("verdict pass") == std::string::npos) {
                detail = "cover subcommand did not certify support {0,1,2}";
                return false;
              }
              std::string lift_cmd = cli + " builtin gl:1,1 | " + cli +
                                     " cover --infinite-truncate 4 > /tmp/gcover_c4.bundle && " +
                                     cli + " lift --psi " +
                                     (fixtures / "cover2_gl11.bundle").string() +
                                     " --cover /tmp/gcover_c4.bundle > /dev/null";
              if (run_command(lift_cmd) != 0) {
                detail = "lift subcommand failed";
                return false;
              }
              std::string out;
              int code = run_command(cli + " verify " + (fixtures / "gl11_corrupt.alg").string() +
                                         " 2>&1",
                                     &out);
              if (code != 1) {
                detail = "corrupted fixture exit code is " + std::to_string(code);
                return false;
              }
              if (out.find("jacobi (E12, E21, E21)") == std::string::npos &&
                  out.find("jacobi (E12, E12, E21)") == std::string::npos) {
                detail = "violating triple not named in the report";
                return false;
              }
              return true;
            });

  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
