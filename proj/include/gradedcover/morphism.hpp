#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradedcover/algebra.hpp"
#include "gradedcover/linalg.hpp"

namespace gcover {

// Homomorphism of weight groups.  The linear kind is an integer matrix into
// another weight group; the parity kind is the reduction onto Z_2 sending a
// weight to sum(coeff_i * comp_i) mod 2, used when the target algebra is
// graded by parity alone (Z -> Z_2 for the flagship coverings).
struct GradingMap {
  enum class Kind { linear, parity };
  Kind kind = Kind::linear;
  std::vector<std::string> source_gens;
  std::vector<std::string> target_gens;        // linear kind only
  std::vector<std::vector<int>> matrix;        // target_gens x source_gens
  std::vector<int> parity_coeffs;              // parity kind: per source generator

  static GradingMap identity(std::vector<std::string> gens);
  static GradingMap linear(std::vector<std::string> source, std::vector<std::string> target,
                           std::vector<std::vector<int>> m);
  static GradingMap parity_reduction(std::vector<std::string> source_gens);

  Weight apply(const Weight& w) const;
  Parity apply_parity(const Weight& w) const;
  bool operator==(const GradingMap& o) const;
};

// Degree-indexed family of exact-rational blocks between graded algebras,
// stored as one dense matrix (target dim x source dim); the blocks per source
// weight are views determined by the grading map.
struct GradedMorphism {
  std::string name;
  AlgebraPtr source;
  AlgebraPtr target;
  GradingMap phi;
  Matrix mat;

  Element apply(const Element& x) const;
  SparseRow apply_basis(int i) const;  // image of e_i as a sparse target row

  // Target row indices of the component the source weight w maps into.
  std::vector<int> target_component(const Weight& w) const;
};

// Shape, gradedness and parity-preservation checks; nullopt when valid.
std::optional<std::string> validate_graded(const GradedMorphism& f);

struct HomViolation {
  int i, j;
  std::string detail;
};

struct HomVerdict {
  bool pass = true;
  std::optional<std::string> invalid;  // set when the morphism is malformed
  std::vector<HomViolation> violations;
  std::string str(const GradedLieSuperalgebra& source) const;
};

// Exhaustive exact check of f([e_i, e_j]) = [f(e_i), f(e_j)] on all basis
// pairs.
HomVerdict check_homomorphism(const GradedMorphism& f);

// Same law restricted to pairs whose weights and weight-sum lie in C.
HomVerdict check_partial_homomorphism(const GradedMorphism& f, const std::vector<Weight>& C);

GradedMorphism identity_morphism(AlgebraPtr a);
GradedMorphism compose(const GradedMorphism& f, const GradedMorphism& g);  // f after g

}  // namespace gcover
