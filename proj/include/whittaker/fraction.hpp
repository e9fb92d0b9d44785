#pragma once

#include <utility>

#include "whittaker/errors.hpp"

namespace whittaker {

// Reduced fractions over a gcd domain R. R must provide, via ADL:
//   R gcd(const R&, const R&)          normalized, gcd(x, 0) ~ x
//   R divexact(const R&, const R&)
//   void canonicalize_units(R& num, R& den)   fixes the unit ambiguity
// and member is_zero(), construction from int.
template <class R>
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(R n) : num_(std::move(n)), den_(1) { canonicalize_units(num_, den_); }  // NOLINT
  Fraction(R n, R d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  // Caller guarantees gcd(n, d) is a unit.
  static Fraction from_coprime(R n, R d) {
    if (d.is_zero()) throw DivisionByZero();
    Fraction f;
    if (n.is_zero()) return f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    canonicalize_units(f.num_, f.den_);
    return f;
  }

  const R& num() const { return num_; }
  const R& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Fraction inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    return from_coprime(den_, num_);
  }

  Fraction operator-() const { return from_coprime(-num_, den_); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) { return add(a, b, false); }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return add(a, b, true); }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return Fraction();
    R g1 = gcd(a.num_, b.den_);
    R g2 = gcd(b.num_, a.den_);
    R n1 = is_one(g1) ? a.num_ : divexact(a.num_, g1);
    R d2 = is_one(g1) ? b.den_ : divexact(b.den_, g1);
    R n2 = is_one(g2) ? b.num_ : divexact(b.num_, g2);
    R d1 = is_one(g2) ? a.den_ : divexact(a.den_, g2);
    return from_coprime(n1 * n2, d1 * d2);
  }

  friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
  Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  static bool is_one(const R& g) { return g == R(1); }

  void reduce() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = R(1);
      return;
    }
    R g = gcd(num_, den_);
    if (!is_one(g)) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
    canonicalize_units(num_, den_);
  }

  static Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
    const R bn = subtract ? -b.num_ : b.num_;
    if (a.is_zero()) return from_coprime(bn, b.den_);
    if (b.is_zero()) return a;
    R g = gcd(a.den_, b.den_);
    if (is_one(g)) return from_coprime(a.num_ * b.den_ + bn * a.den_, a.den_ * b.den_);
    R ad = divexact(a.den_, g);
    R bd = divexact(b.den_, g);
    R t = a.num_ * bd + bn * ad;
    if (t.is_zero()) return Fraction();
    R g2 = gcd(t, g);
    if (is_one(g2)) return from_coprime(std::move(t), ad * b.den_);
    return from_coprime(divexact(t, g2), ad * divexact(b.den_, g2));
  }

  R num_;
  R den_;
};

}  // namespace whittaker
