#include "gradedcover/axioms.hpp"

#include <algorithm>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcover {

SparseRow jacobi_residual(const GradedLieSuperalgebra& a, int i, int j, int k) {
  // [e_i, [e_j, e_k]] - (-1)^{|e_i||e_j|} [e_j, [e_i, e_k]] - [[e_i, e_j], e_k]
  SparseRow acc;
  for (const auto& [m, c] : a.bracket_row(j, k)) add_scaled(acc, a.bracket_row(i, m), c);
  Rational sign = (a.basis(i).parity == Parity::odd && a.basis(j).parity == Parity::odd) ? 1 : -1;
  for (const auto& [m, c] : a.bracket_row(i, k)) add_scaled(acc, a.bracket_row(j, m), sign * c);
  for (const auto& [m, c] : a.bracket_row(i, j)) add_scaled(acc, a.bracket_row(m, k), -c);
  return acc;
}

namespace {

std::vector<std::string> basis_names(const GradedLieSuperalgebra& a) {
  std::vector<std::string> names;
  names.reserve(a.dim());
  for (const auto& b : a.basis()) names.push_back(b.name);
  return names;
}

void scan_local(const GradedLieSuperalgebra& a, AxiomReport& rep,
                const std::vector<std::string>& names) {
  // chi-consistency of declared parities
  if (a.system()) {
    for (int i = 0; i < a.dim(); ++i) {
      Parity want = a.system()->parity_of_weight(a.basis(i).weight);
      if (a.basis(i).parity != want)
        rep.parity.push_back({i, -1, -1,
                              "parity of " + names[i] + " is " + parity_name(a.basis(i).parity) +
                                  " but chi(weight) is " + parity_name(want)});
    }
  }
  // weight and parity additivity of every stored constant (direct scan)
  for (const auto& [key, row] : a.stored()) {
    auto [i, j] = key;
    for (const auto& [k, c] : row) {
      (void)c;
      if (a.basis(k).weight != a.basis(i).weight + a.basis(j).weight)
        rep.grading.push_back({i, j, k});
      if (a.basis(k).parity != a.basis(i).parity + a.basis(j).parity)
        rep.parity.push_back({i, j, k,
                              "constant [" + names[i] + "," + names[j] + "] -> " + names[k] +
                                  " breaks parity additivity"});
    }
  }
  // skew-symmetry on all pairs
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) {
      Rational sign = (a.basis(i).parity == Parity::odd && a.basis(j).parity == Parity::odd) ? 1 : -1;
      SparseRow residual = a.bracket_row(j, i);
      add_scaled(residual, a.bracket_row(i, j), -sign);
      if (!residual.empty()) rep.skew.push_back({j, i, format_row(residual, names)});
    }
}

}  // namespace

AxiomReport verify_axioms(const GradedLieSuperalgebra& a, ExecutionPolicy policy) {
  AxiomReport rep;
  auto names = basis_names(a);
  scan_local(a, rep, names);

  const int n = a.dim();
  const long long total = static_cast<long long>(n) * n * n;

#ifdef _OPENMP
  if (policy == ExecutionPolicy::parallel && total > 1) {
    std::vector<std::vector<JacobiViolation>> found;
#pragma omp parallel
    {
#pragma omp single
      found.resize(omp_get_num_threads());
      auto& mine = found[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
      for (long long t = 0; t < total; ++t) {
        int i = static_cast<int>(t / (static_cast<long long>(n) * n));
        int j = static_cast<int>((t / n) % n);
        int k = static_cast<int>(t % n);
        SparseRow r = jacobi_residual(a, i, j, k);
        if (!r.empty()) mine.push_back({i, j, k, format_row(r, names)});
      }
    }
    for (auto& part : found)
      rep.jacobi.insert(rep.jacobi.end(), part.begin(), part.end());
    std::sort(rep.jacobi.begin(), rep.jacobi.end(), [](const auto& x, const auto& y) {
      return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
    });
    return rep;
  }
#else
  (void)policy;
#endif

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SparseRow r = jacobi_residual(a, i, j, k);
        if (!r.empty()) rep.jacobi.push_back({i, j, k, format_row(r, names)});
      }
  return rep;
}

std::string AxiomReport::summary(const GradedLieSuperalgebra& a) const {
  auto names = basis_names(a);
  std::string s;
  auto line = [&s](const std::string& what, std::size_t bad) {
    s += (bad == 0 ? "pass  " : "FAIL  ");
    s += what;
    if (bad) s += " (" + std::to_string(bad) + " violations)";
    s += "\n";
  };
  line("skew-symmetry", skew.size());
  line("jacobi", jacobi.size());
  line("grading", grading.size());
  line("parity", parity.size());
  std::size_t shown = 0;
  for (const auto& v : skew) {
    if (++shown > 20) break;
    s += "  skew (" + names[v.i] + ", " + names[v.j] + "): residual " + v.residual + "\n";
  }
  for (const auto& v : jacobi) {
    if (++shown > 20) break;
    s += "  jacobi (" + names[v.i] + ", " + names[v.j] + ", " + names[v.k] + "): residual " +
         v.residual + "\n";
  }
  for (const auto& v : grading) {
    if (++shown > 20) break;
    s += "  grading [" + names[v.i] + ", " + names[v.j] + "] -> " + names[v.k] + "\n";
  }
  for (const auto& v : parity) {
    if (++shown > 20) break;
    s += "  parity: " + v.detail + "\n";
  }
  return s;
}

}  // namespace gcover
