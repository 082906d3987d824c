#pragma once

#include <string>
#include <vector>

#include "gradedcover/functors.hpp"
#include "gradedcover/morphism.hpp"

namespace gcover {

// Normalization of the covering projection.  The theorem wants the degree-i
// block to carry 1/i!; the unit variant is kept as a documented negative
// control (it breaks the homomorphism law at degrees (1,1) with a factor 2).
enum class Normalization { inverse_factorial, unit };

// Projection from a diagonal-provenance cover onto its base: the degree-i
// block sends X'_i to (1/i!) X (or X for unit), the grading map is the
// reduction of the Z-degree onto parity.
GradedMorphism covering_projection(const FunctorOutput& p, AlgebraPtr g, Normalization norm);

struct CoveringCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct CoveringCertificate {
  enum class Kind { full, semicovering };

  GradedMorphism projection;
  std::vector<Weight> support;  // C
  Kind kind = Kind::full;
  // A full certificate with truncated set verifies the covering laws through
  // a finite degree window {0..T}: pairs whose degree sum exceeds the window
  // are exempt, exactly as for the inverse-limit object they stand in for.
  bool truncated = false;
  std::vector<CoveringCheck> checks;

  bool pass() const;
  std::string str() const;
};

// Itemized verification: (1) the source passes the axiom suite, (2) the
// projection is a homomorphism (full) or a partial homomorphism on C
// (semicovering / truncated window), (3) every degree block over C is square
// and invertible, (4) phi(C) covers the target support, (5) supp = C.
CoveringCertificate verify_covering(const GradedMorphism& projection, std::vector<Weight> C,
                                    CoveringCertificate::Kind kind, bool truncated = false);

// Unique graded lift through a covering: Psi|_{a_s} = (Pi|_{p_s})^{-1} psi|_{a_s}.
// Requires a passing certificate, a graded homomorphism psi into the covered
// algebra, and supp(a) inside C.  The result satisfies Pi . Psi = psi exactly
// and is itself a (partial) homomorphism; both are re-verified before return.
GradedMorphism lift_universal(const GradedMorphism& psi, const CoveringCertificate& cert);

// Lift of a homomorphism f between covered algebras to their coverings:
// the unique F with Pi~ . F = f . Pi, obtained as lift_universal(f . Pi).
GradedMorphism lift_between_coverings(const GradedMorphism& f, const CoveringCertificate& cert_src,
                                      const CoveringCertificate& cert_dst);

}  // namespace gcover
