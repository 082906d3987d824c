#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gradedcover/functors.hpp"
#include "gradedcover/linalg.hpp"
#include "gradedcover/morphism.hpp"

namespace gcover {

// Dense exact-rational square matrix over a diagonal block-parity pattern,
// optionally tagged with the Z-degree it realizes in the staircase picture.
struct SuperMatrix {
  Matrix entries;
  std::vector<std::pair<int, Parity>> blocks;
  int degree = 0;

  int size() const;
  Parity slot_parity(int i) const;
  // A homogeneous matrix of parity p may only populate slots of that parity.
  bool homogeneous(Parity p) const;
};

// Truncated current algebra g (x) K[t] / (t^{N+1}): basis X (x) t^i for X in
// the parity-(i mod 2) component of g, bracket [X t^i, Y t^j] = [X,Y] t^{i+j}
// truncated to zero above degree N.
struct LoopModel {
  AlgebraPtr base;
  int top_degree = 0;
  AlgebraPtr algebra;
  std::vector<std::pair<int, int>> provenance;  // (power of t, base index)

  int find(int power, int base_index) const;
};

LoopModel loop_model(AlgebraPtr g, int top_degree);
LoopModel loop_model(const GradedLieSuperalgebra& g, int top_degree);

struct LoopIsoVerdict {
  bool pass = true;
  std::string detail;
  GradedMorphism map;  // cover -> loop, X'_i -> (1/i!) X (x) t^i when rescaled
};

// Degree-by-degree bracket isomorphism check between a diagonal cover and the
// loop model.  The 1/i! rescaling converts the binomial law into the plain
// loop bracket; rescale=false is the documented negative control.
LoopIsoVerdict verify_loop_isomorphism(const FunctorOutput& p, const LoopModel& lm,
                                       bool rescale = true);

// The block lower-triangular staircase pattern over d+2 alternating diagonal
// blocks (m even, n odd, m, ...), with one basis slot per matrix entry on the
// block subdiagonals 0..d.  The bracket is the supercommutator of the pattern
// followed by truncation below subdiagonal d; slots carry the Z-weight of
// their subdiagonal.  This is the matrix form of the truncated current
// algebra: the corner entries a longer staircase would populate are exactly
// the degrees the truncation kills.
GradedLieSuperalgebra build_staircase(int m, int n, int d);

// Staircase realization of the degree-d cover of gl(m|n): the degree-i
// generator places the matching parts of X on the i-th block subdiagonal,
// and the assignment, rescaled by 1/i!, is verified as an injective bracket
// homomorphism into the staircase algebra.
struct MatrixRealization {
  std::vector<std::pair<int, std::string>> labels;  // (degree, base name)
  std::vector<SuperMatrix> generators;              // unscaled staircase matrices
  FunctorOutput cover;
  AlgebraPtr ambient;        // build_staircase(m, n, d)
  GradedMorphism embedding;  // cover -> ambient, degree-i column scaled by 1/i!
  HomVerdict hom;
  bool injective = false;

  bool pass() const { return hom.pass && injective; }
  const SuperMatrix& generator(int degree, const std::string& base_name) const;
};

MatrixRealization matrix_realization(int m, int n, int d);

}  // namespace gcover
