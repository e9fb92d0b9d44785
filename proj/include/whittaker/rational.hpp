#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace whittaker {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" or "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view s);

// Canonical n/d (mpq_class(n, d) alone does not reduce).
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Rational pow(const Rational& x, long n) {
  Rational base = n < 0 ? Rational(1) / x : x;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Rational r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace whittaker
