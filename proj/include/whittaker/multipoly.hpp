#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whittaker/monomial.hpp"
#include "whittaker/rational.hpp"

namespace whittaker {

// Slots 0..14 are lambda_1..lambda_15, slot 15 is eps.
inline constexpr int kEpsSlot = 15;

// Sparse polynomial over Q, terms kept in descending graded-lex order.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT
  static MultiPoly var(int slot);
  static MultiPoly monomial(const Monomial& m, const Rational& c);
  // Terms in any order, duplicates merged.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  unsigned degree_in(int slot) const;
  std::uint32_t support() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned n) const;
  MultiPoly mul_monomial(const Monomial& m) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  // Value with the listed slots substituted (others must be absent).
  Rational evaluate(const std::map<int, Rational>& point) const;
  // Substitute constants for some slots, keep the rest symbolic.
  MultiPoly substitute(const std::map<int, Rational>& point) const;
  MultiPoly substitute(int slot, const MultiPoly& value) const;

  // Common denominator of the coefficients and gcd of the resulting numerators.
  Integer coeff_denominator_lcm() const;
  Integer integer_content() const;  // of an integer-coefficient polynomial

 private:
  void add_scaled(const MultiPoly& o, int sign);
  std::vector<Term> terms_;
};

// Names used for printing and parsing: "l1".."l15", "eps".
std::string var_name(int slot);
int var_slot(const std::string& name);  // -1 when unknown

// Expanded ASCII form, e.g. "l1^2+3*l1*eps-1/2".
std::string to_string(const MultiPoly& p);

}  // namespace whittaker
