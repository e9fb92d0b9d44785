#pragma once

#include <string>
#include <utility>
#include <vector>

#include "whittaker/fraction.hpp"
#include "whittaker/rational.hpp"

namespace whittaker {

// Finite sum of c_e q^e with rational exponents, ascending in e, no zero c_e.
class QLaurent {
 public:
  struct Term {
    Rational exp;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  QLaurent() = default;
  QLaurent(const Rational& c);  // NOLINT(google-explicit-constructor)
  QLaurent(long c) : QLaurent(Rational(c)) {}  // NOLINT
  QLaurent(int c) : QLaurent(Rational(c)) {}  // NOLINT
  static QLaurent monomial(const Rational& exp, const Rational& coeff = 1);
  static QLaurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Rational& min_exp() const { return terms_.front().exp; }
  const Rational& max_exp() const { return terms_.back().exp; }
  // lcm of exponent denominators (1 for the zero polynomial).
  Integer exp_denominator_lcm() const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent shift(const Rational& e) const;  // multiply by q^e
  QLaurent scale(const Rational& c) const;
  QLaurent bar() const;                     // q -> q^-1

  friend bool operator==(const QLaurent&, const QLaurent&) = default;

  // Exact value at q = s^L where L is a multiple of every exponent denominator.
  Rational evaluate_at_power(const Rational& s, long L) const;
  // M_n = sum c_e e^n, the n-th derivative at h = 0 of the sum at q = e^h.
  Rational moment(unsigned n) const;

 private:
  std::vector<Term> terms_;
};

// gcd up to a unit c*q^e; result has lowest exponent 0, integer primitive
// coefficients and positive lowest coefficient.
QLaurent gcd(const QLaurent& a, const QLaurent& b);
QLaurent divexact(const QLaurent& a, const QLaurent& b);
// Den lowest exponent 0, lowest coefficient positive, integer coefficients,
// coprime contents.
void canonicalize_units(QLaurent& num, QLaurent& den);

using QRatFunc = Fraction<QLaurent>;

// (q^x - q^-x)/(q - q^-1)
QRatFunc q_number(const Rational& x);
inline QRatFunc q_power(const Rational& e) { return QRatFunc(QLaurent::monomial(e)); }
QRatFunc bar(const QRatFunc& f);
Rational evaluate_at_power(const QRatFunc& f, const Rational& s, long L);
Integer exp_denominator_lcm(const QRatFunc& f);
// Limit q -> 1 via the lowest nonvanishing moments of num and den.
Rational classical_limit(const QRatFunc& f);

std::string to_string(const QLaurent& p);
std::string to_string(const QRatFunc& f);

}  // namespace whittaker
