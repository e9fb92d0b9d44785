#include "whittaker/monomial.hpp"

#include <algorithm>

#include "whittaker/errors.hpp"

namespace whittaker {

Monomial Monomial::var(int slot, unsigned e) {
  if (slot < 0 || slot >= kSlots) throw Error("variable slot out of range");
  if (e > kMaxDegree) throw Error("exponent overflow");
  Monomial m;
  (slot < 8 ? m.hi_ : m.lo_) = static_cast<std::uint64_t>(e) << shift(slot);
  m.deg_ = static_cast<std::uint16_t>(e);
  return m;
}

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (int i = 0; i < kSlots; ++i)
    if (exp(i)) s |= 1u << i;
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  // Bytes cannot carry while the total degree fits in one byte.
  if (deg_ + o.deg_ > static_cast<int>(kMaxDegree)) throw Error("monomial degree overflow");
  Monomial m;
  m.hi_ = hi_ + o.hi_;
  m.lo_ = lo_ + o.lo_;
  m.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (int i = 0; i < kSlots; ++i)
    if (exp(i) > o.exp(i)) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  m.hi_ = hi_ - o.hi_;
  m.lo_ = lo_ - o.lo_;
  m.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
  return m;
}

Monomial Monomial::with_exp(int slot, unsigned e) const {
  Monomial m = *this;
  const unsigned old = exp(slot);
  std::uint64_t& w = slot < 8 ? m.hi_ : m.lo_;
  w &= ~(std::uint64_t{0xff} << shift(slot));
  w |= static_cast<std::uint64_t>(e) << shift(slot);
  m.deg_ = static_cast<std::uint16_t>(deg_ - old + e);
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kSlots; ++i) {
    const unsigned e = std::min(a.exp(i), b.exp(i));
    if (e) m = m.with_exp(i, e);
  }
  return m;
}

}  // namespace whittaker
