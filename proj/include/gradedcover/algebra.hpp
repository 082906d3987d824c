#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedcover/rational.hpp"
#include "gradedcover/weight.hpp"

namespace gcover {

// Sparse vector over the basis of an algebra: sorted by index, no zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow& add_scaled(SparseRow& acc, const SparseRow& row, const Rational& c);
SparseRow normalized(SparseRow row);  // sort, merge, drop zeros
std::string format_row(const SparseRow& row, const std::vector<std::string>& names);

struct BasisElement {
  std::string name;
  Weight weight;
  Parity parity = Parity::even;
};

// A finite-dimensional graded Lie superalgebra presented by exact-rational
// structure constants.  Immutable after construction: build through Builder.
//
// Structure constants are normally stored for the canonical half i <= j only;
// the other half is derived through the sign rule on lookup.  The raw setter
// stores both directions verbatim so that deliberately inconsistent tables
// can be fed to the axiom checker.
class GradedLieSuperalgebra {
 public:
  class Builder {
   public:
    explicit Builder(std::string name) : name_(std::move(name)) {}

    Builder& rename(std::string name) {
      name_ = std::move(name);
      return *this;
    }
    Builder& weight_generators(std::vector<std::string> gens);
    Builder& attach_system(WeightSystem sys);  // chi + delta; gens must match

    // Returns the index of the new basis element.  Parity may be omitted
    // when a system is attached (derived as chi(weight)); when both are
    // given they must agree.
    int add_basis(const std::string& name, Weight w, std::optional<Parity> parity = std::nullopt);
    int add_basis(const std::string& name, Parity parity);  // trivial weight group

    void set_bracket(int i, int j, SparseRow row);      // canonicalizes to i <= j
    void set_bracket_raw(int i, int j, SparseRow row);  // stores verbatim

    GradedLieSuperalgebra build();

    static Builder from(const GradedLieSuperalgebra& a);  // copy for local edits

   private:
    friend class GradedLieSuperalgebra;
    std::string name_;
    std::vector<std::string> gens_;
    std::optional<WeightSystem> system_;
    std::vector<BasisElement> basis_;
    std::map<std::pair<int, int>, SparseRow> stored_;
  };

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::vector<std::string>& weight_generators() const { return gens_; }
  const std::optional<WeightSystem>& system() const { return system_; }
  Weight zero_weight() const { return Weight::zero(gens_); }

  int index_of(const std::string& basis_name) const;  // -1 when absent

  // [e_i, e_j], deriving the skew half when only (j, i) is stored.
  SparseRow bracket_row(int i, int j) const;

  // Stored table, exactly as constructed (canonical half for canonical
  // algebras).  Grading and parity scans walk this directly.
  const std::map<std::pair<int, int>, SparseRow>& stored() const { return stored_; }
  bool slot_stored(int i, int j) const { return stored_.count({i, j}) != 0; }

  std::vector<Weight> support() const;  // sorted, unique
  std::vector<int> homogeneous_component(const Weight& w) const;
  std::vector<int> parity_component(Parity p) const;
  std::vector<Parity> parity_support() const;

  bool operator==(const GradedLieSuperalgebra& o) const;

 private:
  std::string name_;
  std::vector<std::string> gens_;
  std::optional<WeightSystem> system_;
  std::vector<BasisElement> basis_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, SparseRow> stored_;
};

using AlgebraPtr = std::shared_ptr<const GradedLieSuperalgebra>;

// Element of a named algebra: sparse exact coefficients, no zeros stored.
class Element {
 public:
  Element() = default;
  explicit Element(const GradedLieSuperalgebra* parent) : parent_(parent) {}
  static Element basis_vector(const GradedLieSuperalgebra& a, int i);

  const GradedLieSuperalgebra* parent() const { return parent_; }
  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int i) const;

  Element& add(int i, const Rational& c);
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Rational& c) const;
  bool operator==(const Element& o) const;

  std::string str() const;

 private:
  const GradedLieSuperalgebra* parent_ = nullptr;
  std::map<int, Rational> coeffs_;
};

// Bilinear extension of the structure constants.  Mismatched parents are a
// domain error.
Element bracket(const Element& x, const Element& y);

}  // namespace gcover
