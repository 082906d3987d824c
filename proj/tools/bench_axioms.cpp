// Compares the serial reference Jacobi scan against the OpenMP kernel on a
// few sizable algebras and checks the reports agree.

#include <chrono>
#include <iostream>

#include "gradedcover/axioms.hpp"
#include "gradedcover/builders.hpp"
#include "gradedcover/functors.hpp"

using namespace gcover;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void bench(const std::string& label, const GradedLieSuperalgebra& a) {
  std::cout << label << " (dim " << a.dim() << ", "
            << static_cast<long long>(a.dim()) * a.dim() * a.dim() << " triples)\n";
  auto t0 = clock_type::now();
  AxiomReport serial = verify_axioms(a, ExecutionPolicy::serial);
  double ts = seconds_since(t0);
  t0 = clock_type::now();
  AxiomReport parallel = verify_axioms(a, ExecutionPolicy::parallel);
  double tp = seconds_since(t0);
  bool agree = serial.pass() == parallel.pass() && serial.jacobi.size() == parallel.jacobi.size();
  std::cout << "  serial   " << ts << " s\n"
            << "  parallel " << tp << " s  (speedup " << (tp > 0 ? ts / tp : 0) << "x)\n"
            << "  reports " << (agree ? "agree" : "DISAGREE") << ", verdict "
            << (parallel.pass() ? "pass" : "fail") << "\n";
}

}  // namespace

int main() {
  bench("gl(3|2)", build_gl(3, 2));
  bench("takiff2(gl(2|2))", *takiff(build_gl(2, 2), 2).algebra);
  bench("cover4(gl(2|2))", *graded_cover(build_gl(2, 2), 4).algebra);
  bench("gl(5|5)", build_gl(5, 5));
  return 0;
}
