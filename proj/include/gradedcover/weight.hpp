#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gcover {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}
inline int parity_bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(long long n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }
inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

// An element of the free abelian group on named generators.  Two weights are
// comparable only when their generator lists coincide; mixing groups is a
// domain error.
struct Weight {
  std::vector<std::string> gens;
  std::vector<int> comps;

  Weight() = default;
  Weight(std::vector<std::string> g, std::vector<int> c);

  static Weight zero(std::vector<std::string> gens);

  bool same_group(const Weight& o) const { return gens == o.gens; }
  bool is_zero() const;
  int rank() const { return static_cast<int>(gens.size()); }

  Weight operator+(const Weight& o) const;
  bool operator==(const Weight& o) const;
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const;  // lexicographic within one group

  std::string str() const;  // "0", "a+b1", "2t", "-q", ...
};

// A weight system (Delta, chi): a finite set of admissible weights together
// with a parity assigned to each generator; chi extends additively.  The
// nonneg flag marks systems where every admitted weight must have all
// components >= 0; general Z-supports leave it off.
struct WeightSystem {
  std::vector<std::string> gens;
  std::map<std::string, Parity> chi;
  std::vector<Weight> delta;  // sorted, unique
  bool type_delta = false;

  Parity parity_of_weight(const Weight& w) const;
  bool contains(const Weight& w) const;
  bool multiplicity_free() const;  // every component of every weight in {0,1}

  // Checks 0 and all generators are in delta, the nonneg rule when
  // type_delta is set, and that chi covers exactly the generators.
  std::optional<std::string> validate() const;
};

}  // namespace gcover
