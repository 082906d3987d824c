#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gradedcover/algebra.hpp"
#include "gradedcover/linalg.hpp"

namespace gcover {

// gl of a superspace with the given diagonal block pattern: basis E_ab with
// the parity of slot (a, b) read off the pattern, structure constants from
// the matrix supercommutator [X, Y] = XY - (-1)^{|X||Y|} YX.
GradedLieSuperalgebra build_gl_pattern(const std::vector<std::pair<int, Parity>>& blocks,
                                       const std::string& name);

// gl(m|n): first block even of size m, second odd of size n.
GradedLieSuperalgebra build_gl(int m, int n);

// End(V) for V = V_0 + ... + V_{r-1} with dim V_k = dims[k], Z-graded by the
// degree shift; in the super reading parities follow the degree mod 2, in the
// plain reading everything is even.
enum class ZGradedReading { super, plain };
GradedLieSuperalgebra build_gl_zgraded(const std::vector<int>& dims,
                                       ZGradedReading reading = ZGradedReading::super);

// osp(V, Q) for dim V_even = p, dim V_odd = 2q, with the standard Q (identity
// on the even part, the pairing l1'(l2) - l2'(l1) on L + L'); Z-graded by
// weight 1 on L and -1 on L', support inside {-2..2}.
GradedLieSuperalgebra build_osp(int p, int two_q);

// Same, keeping the matrices acting on V, the form Q and the V-gradation so
// the defining equation Q(Tx,y) + (-1)^{|T||x|} Q(x,Ty) = 0 stays checkable.
struct OspRealization {
  GradedLieSuperalgebra algebra;
  std::vector<Matrix> matrices;  // aligned with the algebra basis
  Matrix form;                   // Q in the basis u_1..u_p, l_1..l_q, l'_1..l'_q
  std::vector<Parity> v_parity;
  std::vector<int> v_degree;
};
OspRealization build_osp_realization(int p, int two_q);

GradedLieSuperalgebra build_abelian(int even_dim, int odd_dim);

}  // namespace gcover
