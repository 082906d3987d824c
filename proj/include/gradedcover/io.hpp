#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gradedcover/algebra.hpp"
#include "gradedcover/axioms.hpp"
#include "gradedcover/covering.hpp"
#include "gradedcover/errors.hpp"
#include "gradedcover/functors.hpp"
#include "gradedcover/morphism.hpp"

namespace gcover {

// Line-oriented UTF-8 text with '#' comments, or an equivalent JSON object.
// A document may bundle several sections: algebras, morphisms (blocks per
// source weight, row-major rationals) and covering certificates.

struct AlgebraDocument {
  std::string name;
  std::vector<std::pair<std::string, Parity>> generators;  // weight generators + chi

  struct BasisLine {
    std::string name;
    std::vector<int> weight;
    std::optional<Parity> parity;
  };
  std::vector<BasisLine> basis;

  struct BracketLine {
    std::string left, right;
    std::vector<std::pair<Rational, std::string>> terms;
  };
  std::vector<BracketLine> brackets;

  std::vector<std::string> comments;  // emitted as # lines, dropped by the parser

  bool operator==(const AlgebraDocument& o) const;
};

struct MorphismDocument {
  std::string name;
  std::string source, target;  // algebra names resolved within the bundle

  enum class MapKind { linear, parity } map_kind = MapKind::linear;
  std::vector<std::vector<int>> map_matrix;  // linear
  std::vector<int> map_coeffs;               // parity

  struct Block {
    std::vector<int> weight;
    int rows = 0, cols = 0;
    std::vector<Rational> entries;  // row-major
  };
  std::vector<Block> blocks;

  bool operator==(const MorphismDocument& o) const;
};

struct CertificateDocument {
  std::string morphism;  // name of the projection in the same bundle
  std::string kind;      // "full" | "semicovering"
  bool truncated = false;
  std::vector<std::vector<int>> support;
  bool verdict = false;
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;

  bool operator==(const CertificateDocument& o) const;
};

struct Document {
  std::vector<AlgebraDocument> algebras;
  std::vector<MorphismDocument> morphisms;
  std::vector<CertificateDocument> certificates;

  const AlgebraDocument* find_algebra(const std::string& name) const;
  const MorphismDocument* find_morphism(const std::string& name) const;
  const CertificateDocument* find_certificate(const std::string& morphism) const;
  bool operator==(const Document& o) const;
};

enum class Format { text, json };

// Throws ParseError with 1-based line/column on syntax errors.
Document parse_text(const std::string& text);
Document parse_json(const std::string& text);
Document parse_document(const std::string& text);  // sniffs the format

std::string to_text(const Document& doc);
std::string to_json_string(const Document& doc);
std::string serialize(const Document& doc, Format f);

// Semantic failure while turning a document into an algebra; axiom failures
// carry the full report.
struct LoadError : Error {
  explicit LoadError(const std::string& msg) : Error(msg) {}
  LoadError(const std::string& msg, AxiomReport rep) : Error(msg), report(std::move(rep)) {}
  std::optional<AxiomReport> report;
};

// Ingests a document: resolves names, derives the skew half (explicitly given
// partner lines must agree with the sign rule), checks parity against chi,
// and runs the axiom suite unless told not to.
GradedLieSuperalgebra load_algebra(const AlgebraDocument& doc, bool check_axioms = true);

AlgebraDocument store_algebra(const GradedLieSuperalgebra& a);

// Canonical emission for functor outputs: basis sorted by (weight,
// provenance multi-index, base name), provenance recorded as comments.
AlgebraDocument store_functor_output(const FunctorOutput& out);

using AlgebraResolver = std::function<AlgebraPtr(const std::string&)>;

GradedMorphism load_morphism(const MorphismDocument& doc, const AlgebraResolver& resolve);
MorphismDocument store_morphism(const GradedMorphism& f);

CoveringCertificate load_certificate(const CertificateDocument& doc, const GradedMorphism& proj);
CertificateDocument store_certificate(const CoveringCertificate& cert,
                                      const std::string& morphism_name);

}  // namespace gcover
