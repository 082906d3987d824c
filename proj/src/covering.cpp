#include "gradedcover/covering.hpp"

#include <algorithm>

#include "gradedcover/axioms.hpp"
#include "gradedcover/errors.hpp"

namespace gcover {

GradedMorphism covering_projection(const FunctorOutput& p, AlgebraPtr g, Normalization norm) {
  bool diag = p.tag == FunctorTag::diagonal || p.tag == FunctorTag::cover;
  if (!diag || p.provenance.empty())
    throw DomainError("covering_projection: diagonal-generator provenance required");
  if (!p.base || !(*p.base == *g))
    throw DomainError("covering_projection: provenance is not over the given base algebra");

  GradedMorphism f;
  f.name = norm == Normalization::unit ? "Pi_unit" : "Pi";
  f.source = p.algebra;
  f.target = g;
  f.phi = GradingMap::parity_reduction(p.algebra->weight_generators());
  f.mat = Matrix(g->dim(), p.algebra->dim());
  for (std::size_t j = 0; j < p.provenance.size(); ++j) {
    const auto& pr = p.provenance[j];
    Rational c = 1;
    if (norm == Normalization::inverse_factorial) c = Rational(1, factorial(pr.degree));
    f.mat.at(pr.base, static_cast<int>(j)) = c;
  }
  return f;
}

bool CoveringCertificate::pass() const {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CoveringCheck& c) { return c.pass; });
}

std::string CoveringCertificate::str() const {
  std::string s = "covering certificate: ";
  s += kind == Kind::full ? "full" : "semicovering";
  if (truncated) s += " (truncated window)";
  s += "\nsupport:";
  for (const auto& w : support) s += " " + w.str();
  s += "\n";
  for (const auto& c : checks) {
    s += (c.pass ? "pass  " : "FAIL  ") + c.name;
    if (!c.detail.empty()) s += ": " + c.detail;
    s += "\n";
  }
  s += pass() ? "verdict: pass\n" : "verdict: FAIL\n";
  return s;
}

CoveringCertificate verify_covering(const GradedMorphism& projection, std::vector<Weight> C,
                                    CoveringCertificate::Kind kind, bool truncated) {
  CoveringCertificate cert;
  cert.projection = projection;
  cert.kind = kind;
  cert.truncated = truncated;
  std::sort(C.begin(), C.end());
  C.erase(std::unique(C.begin(), C.end()), C.end());
  cert.support = C;

  const auto& P = *projection.source;
  const auto& G = *projection.target;

  // (1) the source is an A-graded Lie superalgebra
  {
    AxiomReport rep = verify_axioms(P);
    cert.checks.push_back({"source-axioms", rep.pass(),
                           rep.pass() ? "" : std::to_string(rep.skew.size() + rep.jacobi.size() +
                                                            rep.grading.size() + rep.parity.size()) +
                                                 " violations"});
  }

  // (2) homomorphism law
  {
    bool window_ok = true;
    std::string window_detail;
    if (kind == CoveringCertificate::Kind::full && truncated) {
      // the window semantics only makes sense for an initial degree segment
      // of a rank-1 grading; degrees whose target component is empty may be
      // absent (their source components are empty too)
      if (P.weight_generators().size() != 1) {
        window_ok = false;
        window_detail = "truncated full covering needs a rank-1 grading";
      } else if (C.empty() || C.front().comps[0] < 0) {
        window_ok = false;
        window_detail = "window degrees must be nonnegative";
      } else {
        int top = C.back().comps[0];
        for (int d = 0; d <= top && window_ok; ++d) {
          Weight w(P.weight_generators(), {d});
          bool in_c = std::find(C.begin(), C.end(), w) != C.end();
          bool target_nonzero =
              !projection.target_component(w).empty();
          if (in_c != target_nonzero) {
            window_ok = false;
            window_detail = "support is not an initial degree segment over the target";
          }
        }
      }
    }
    HomVerdict hv;
    bool partial = kind == CoveringCertificate::Kind::semicovering ||
                   (kind == CoveringCertificate::Kind::full && truncated);
    hv = partial ? check_partial_homomorphism(projection, C) : check_homomorphism(projection);
    std::string name = partial ? "partial-homomorphism" : "homomorphism";
    std::string detail = hv.pass ? "" : hv.str(P);
    if (!window_ok) {
      detail = window_detail + (detail.empty() ? "" : "; " + detail);
    }
    cert.checks.push_back({name, hv.pass && window_ok, detail});
  }

  // (3) degree blocks square and invertible over Q
  {
    bool ok = true;
    std::string detail;
    for (const auto& w : C) {
      std::vector<int> cols = P.homogeneous_component(w);
      std::vector<int> rows = projection.target_component(w);
      if (cols.size() != rows.size()) {
        ok = false;
        detail = "block at " + w.str() + " is " + std::to_string(rows.size()) + "x" +
                 std::to_string(cols.size());
        break;
      }
      Matrix block = projection.mat.submatrix(rows, cols);
      if (!block.inverse()) {
        ok = false;
        detail = "block at " + w.str() + " is singular";
        break;
      }
    }
    cert.checks.push_back({"blocks-bijective", ok, detail});
  }

  // (4) phi(C) covers the target support
  {
    bool ok = true;
    std::string detail;
    if (projection.phi.kind == GradingMap::Kind::parity) {
      std::vector<Parity> hit;
      for (const auto& w : C) hit.push_back(projection.phi.apply_parity(w));
      for (Parity p : G.parity_support())
        if (std::find(hit.begin(), hit.end(), p) == hit.end()) {
          ok = false;
          detail = std::string("target ") + parity_name(p) + " part not covered";
        }
    } else {
      std::vector<Weight> hit;
      for (const auto& w : C) hit.push_back(projection.phi.apply(w));
      for (const auto& w : G.support())
        if (std::find(hit.begin(), hit.end(), w) == hit.end()) {
          ok = false;
          detail = "target weight " + w.str() + " not covered";
        }
    }
    cert.checks.push_back({"phi-covers-support", ok, detail});
  }

  // (5) supp(p) = C
  {
    std::vector<Weight> supp = P.support();
    bool ok = supp == C;
    cert.checks.push_back({"support-matches", ok,
                           ok ? "" : "declared C differs from the actual support"});
  }

  return cert;
}

GradedMorphism lift_universal(const GradedMorphism& psi, const CoveringCertificate& cert) {
  const GradedMorphism& proj = cert.projection;
  if (!cert.pass()) throw DomainError("lift_universal: certificate does not pass");
  if (!(psi.target.get() == proj.target.get() || *psi.target == *proj.target))
    throw DomainError("lift_universal: psi does not land in the covered algebra");
  if (psi.source->weight_generators() != proj.source->weight_generators())
    throw DomainError("lift_universal: psi source is graded by a different weight group");
  if (!(psi.phi == proj.phi))
    throw DomainError("lift_universal: psi is not graded along the covering's phi");
  if (auto msg = validate_graded(psi)) throw DomainError("lift_universal: psi not graded: " + *msg);

  const auto& A = *psi.source;
  const auto& P = *proj.source;
  std::vector<Weight> suppA = A.support();
  for (const auto& s : suppA) {
    if (std::find(cert.support.begin(), cert.support.end(), s) == cert.support.end())
      throw DomainError("lift_universal: supp(a) is not contained in C (weight " + s.str() + ")");
  }

  // Over a truncated window or a semicovering the law can only be demanded
  // on pairs staying inside supp(a): brackets of a leaving its own support
  // are truncation zeros there.  psi = Pi itself is the boundary case.
  bool full_cert = cert.kind == CoveringCertificate::Kind::full && !cert.truncated;
  HomVerdict psi_hom = full_cert ? check_homomorphism(psi) : check_partial_homomorphism(psi, suppA);
  if (!psi_hom.pass) throw DomainError("lift_universal: psi is not a homomorphism");

  GradedMorphism lift;
  lift.name = "lift(" + psi.name + ")";
  lift.source = psi.source;
  lift.target = proj.source;
  lift.phi = GradingMap::identity(A.weight_generators());
  lift.mat = Matrix(P.dim(), A.dim());

  for (const auto& s : suppA) {
    std::vector<int> cols_a = A.homogeneous_component(s);
    std::vector<int> cols_p = P.homogeneous_component(s);
    std::vector<int> rows_g = proj.target_component(s);
    Matrix pi_block = proj.mat.submatrix(rows_g, cols_p);
    auto inv = pi_block.inverse();
    if (!inv) throw ConsistencyError("lift_universal: certified block became singular");
    Matrix psi_block = psi.mat.submatrix(rows_g, cols_a);
    Matrix b = *inv * psi_block;
    for (std::size_t r = 0; r < cols_p.size(); ++r)
      for (std::size_t c = 0; c < cols_a.size(); ++c)
        lift.mat.at(cols_p[r], cols_a[c]) = b.at(static_cast<int>(r), static_cast<int>(c));
  }

  // Pi . Psi = psi, exactly
  if (proj.mat * lift.mat != psi.mat)
    throw ConsistencyError("lift_universal: Pi . Psi != psi");
  // Psi is itself a homomorphism (partial on supp(a) for semicoverings and
  // truncated windows)
  HomVerdict hv = full_cert ? check_homomorphism(lift) : check_partial_homomorphism(lift, suppA);
  if (!hv.pass)
    throw ConsistencyError("lift_universal: lift fails the homomorphism law: " + hv.str(A));
  if (!full_cert) {
    // pairs whose weight sum leaves C entirely must map to zero compatibly
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) {
        Weight sum = A.basis(i).weight + A.basis(j).weight;
        if (std::find(cert.support.begin(), cert.support.end(), sum) != cert.support.end()) continue;
        SparseRow lhs;
        for (const auto& [m, c] : A.bracket_row(i, j)) add_scaled(lhs, lift.apply_basis(m), c);
        SparseRow rhs;
        for (const auto& [a, ca] : lift.apply_basis(i))
          for (const auto& [b2, cb] : lift.apply_basis(j))
            add_scaled(rhs, P.bracket_row(a, b2), ca * cb);
        if (!lhs.empty() || !rhs.empty())
          throw ConsistencyError("lift_universal: bracket escaping C fails to vanish");
      }
  }
  return lift;
}

GradedMorphism lift_between_coverings(const GradedMorphism& f, const CoveringCertificate& cert_src,
                                      const CoveringCertificate& cert_dst) {
  if (!cert_src.pass() || !cert_dst.pass())
    throw DomainError("lift_between_coverings: both certificates must pass");
  if (!check_homomorphism(f).pass)
    throw DomainError("lift_between_coverings: f is not a homomorphism");
  GradedMorphism psi = compose(f, cert_src.projection);
  psi.name = f.name + ".Pi";
  return lift_universal(psi, cert_dst);
}

}  // namespace gcover
