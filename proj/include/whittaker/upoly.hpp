#pragma once

#include <optional>
#include <vector>

#include "whittaker/rational.hpp"

namespace whittaker {

// Dense univariate polynomial over Z, c[i] is the coefficient of t^i.
// No trailing zeros; the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& lead() const { return c_.back(); }
  const Integer& operator[](std::size_t i) const { return c_[i]; }

  Integer content() const;
  Integer max_norm() const;
  Integer evaluate(const Integer& x) const;

  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Primitive gcd with positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);
std::optional<UPoly> divide_if_exact(const UPoly& a, const UPoly& b);

}  // namespace whittaker
