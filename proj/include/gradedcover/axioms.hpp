#pragma once

#include <string>
#include <vector>

#include "gradedcover/algebra.hpp"

namespace gcover {

// The Jacobi scan over all basis triples dominates the cost of everything in
// this library; it runs on OpenMP threads by default.  The serial path is the
// reference the parallel kernel is tested and benchmarked against.
enum class ExecutionPolicy { serial, parallel };

struct SkewViolation {
  int i, j;              // the pair (i, j) whose row fails against (j, i)
  std::string residual;  // [e_j,e_i] + (-1)^{|i||j|} [e_i,e_j], formatted
};

struct JacobiViolation {
  int i, j, k;
  std::string residual;  // [e_i,[e_j,e_k]] - (-1)^{|i||j|}[e_j,[e_i,e_k]] - [[e_i,e_j],e_k]
};

struct GradingViolation {
  int i, j, k;  // stored c^k_{ij} != 0 with weight(e_k) != weight(e_i) + weight(e_j)
};

struct ParityViolation {
  int i, j, k;        // constant violating parity additivity; j = k = -1 for a
  std::string detail;  // basis element whose parity disagrees with chi(weight)
};

struct AxiomReport {
  std::vector<SkewViolation> skew;
  std::vector<JacobiViolation> jacobi;
  std::vector<GradingViolation> grading;
  std::vector<ParityViolation> parity;

  bool pass() const { return skew.empty() && jacobi.empty() && grading.empty() && parity.empty(); }
  std::string summary(const GradedLieSuperalgebra& a) const;
};

// Exhaustive exact check of skew-symmetry on all basis pairs, the graded
// Jacobi identity on all basis triples, weight additivity and parity
// additivity of every stored constant, and chi-consistency of basis parities
// when a weight system is attached.  Failures are reported, never thrown.
AxiomReport verify_axioms(const GradedLieSuperalgebra& a,
                          ExecutionPolicy policy = ExecutionPolicy::parallel);

// Residual of the graded Jacobi identity on one ordered basis triple.
SparseRow jacobi_residual(const GradedLieSuperalgebra& a, int i, int j, int k);

}  // namespace gcover
