#include "gradedcover/rational.hpp"

#include "gradedcover/errors.hpp"

namespace gcover {

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
  }
  return b;
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool try_parse_rational(const std::string& s, Rational& out) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = (s[pos] == '-');
    ++pos;
  }
  std::size_t num_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == num_begin) return false;
  Integer num(s.substr(num_begin, pos - num_begin));
  Integer den = 1;
  if (pos < s.size()) {
    if (s[pos] != '/') return false;
    ++pos;
    std::size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin || pos != s.size()) return false;
    den = Integer(s.substr(den_begin, pos - den_begin));
    if (den == 0) return false;
  }
  out = Rational(num, den);
  if (neg) out = -out;
  return true;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (!try_parse_rational(s, r)) throw DomainError("not a rational literal: '" + s + "'");
  return r;
}

}  // namespace gcover
