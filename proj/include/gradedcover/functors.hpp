#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradedcover/algebra.hpp"
#include "gradedcover/morphism.hpp"

namespace gcover {

enum class FunctorTag { takiff, split, parity_change, diagonal, cover };

// Labels a basis element of a functor output.  Takiff-type outputs carry a
// strictly increasing differential multi-index I and a base index; diagonal
// outputs carry a Z-degree and a base index (index_set unused).
struct Provenance {
  std::vector<int> index_set;  // subset of {1..k}, strictly increasing
  int base = -1;
  int degree = -1;
};

struct FunctorOutput {
  AlgebraPtr algebra;
  AlgebraPtr base;  // the original input the tower was applied to
  FunctorTag tag = FunctorTag::takiff;
  int k = 0;  // number of differentials in play
  std::vector<Provenance> provenance;  // aligned with algebra basis

  int find(const std::vector<int>& index_set, int base_index) const;
  int find_diagonal(int degree, int base_index) const;
  int max_degree() const;  // diagonal outputs
};

// k-fold Takiff superalgebra: basis d_I(X) for I inside {1..k}, realized
// through the model Lambda(xi_1..xi_k) (x) g with the bracket
// [a (x) X, a' (x) X'] = (-1)^{|X||a'|} aa' (x) [X, X'], identifying
// d_I(X) with xi_I (x) X in increasing order.  Dimension 2^k dim g.
FunctorOutput takiff(const GradedLieSuperalgebra& g, int k);
FunctorOutput takiff(AlgebraPtr g, int k);

// Kills every bracket with both arguments odd; same basis, parities, weights.
FunctorOutput split(AlgebraPtr g);
FunctorOutput split(const FunctorOutput& in);  // keeps takiff provenance

// Declares all differentials even and rebuilds the bracket from the base
// algebra's constants: [d_I(X), d_J(Y)] is zero when I and J meet, zero when
// both arguments were odd before the parity change, and d_{I u J}([X, Y])
// otherwise, with no sign from the d's.  Defined only on split(takiff(...))
// outputs carrying provenance.  The output is graded by the multiplicity-free
// system on generators a, b1..bk, all odd.
FunctorOutput parity_change(const FunctorOutput& in);

// Extracts the Z-graded diagonal subalgebra: degree-n generators
// X'_n = sum_{C(I)=n-1} d_I(X) + sum_{C(J)=n} d_J(X) for X in the base
// parity-(n mod 2) component.  Structure constants are computed by
// restricting the ambient bracket and re-expressing in the diagonal basis;
// failure to close there aborts with ConsistencyError.
FunctorOutput diagonal(const FunctorOutput& in);

// The degree-n graded cover: diagonal . parity_change . split . takiff^(n-1),
// a Z-graded algebra with support inside {0..n} whose degree-i component
// matches the parity-(i mod 2) component of g.  Also serves as the degree-n
// truncation of the full (inverse-limit) cover.
FunctorOutput graded_cover(const GradedLieSuperalgebra& g, int n);
FunctorOutput graded_cover(AlgebraPtr g, int n);

// Degree truncation between consecutive covers: identity on diagonal
// generators of degree <= n, zero on degree n+1.
GradedMorphism truncation_map(const FunctorOutput& from_np1, const FunctorOutput& to_n);

// The induced morphism on functor outputs: d_I(X) -> d_I(f(X)) on
// takiff-type outputs, X'_n -> (f X)'_n on diagonal outputs.  Requires f to
// be a verified homomorphism between the bases of the two outputs; the
// result is verified to be a homomorphism of the outputs.
GradedMorphism map_through(const GradedMorphism& f, const FunctorOutput& on_source,
                           const FunctorOutput& on_target);

// Independent Grassmann-model oracle: builds Lambda(xi_1..xi_k) (x) g with a
// generator-by-generator exterior multiplication routine (a code path fully
// separate from takiff's closed-form signs) and compares structure constants.
GradedLieSuperalgebra grassmann_model(const GradedLieSuperalgebra& g, int k);
bool grassmann_oracle_matches(const GradedLieSuperalgebra& candidate,
                              const GradedLieSuperalgebra& g, int k);
bool grassmann_oracle_check(const GradedLieSuperalgebra& g, int k);

// Constant-for-constant comparison of effective bracket tables.
bool same_structure_constants(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b);

std::vector<std::vector<int>> subsets_lex(int k);  // all subsets of {1..k}, lexicographic

}  // namespace gcover
