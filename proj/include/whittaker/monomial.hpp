#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>

namespace whittaker {

// Exponent vector over 16 variable slots, 8 bits each, packed big-endian
// (slot 0 in the top byte of hi_) so that word comparison is lex order.
class Monomial {
 public:
  static constexpr int kSlots = 16;
  static constexpr unsigned kMaxDegree = 255;

  Monomial() = default;
  static Monomial var(int slot, unsigned e = 1);

  unsigned exp(int slot) const {
    const std::uint64_t w = slot < 8 ? hi_ : lo_;
    return static_cast<unsigned>((w >> shift(slot)) & 0xff);
  }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  std::uint32_t support() const;  // bit s set iff slot s has positive exponent

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial operator/(const Monomial& o) const;  // requires o | this
  Monomial with_exp(int slot, unsigned e) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Graded lex with slot 0 most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.deg_ <=> b.deg_; c != 0) return c;
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const {
    return static_cast<std::size_t>(hi_ * 0x9e3779b97f4a7c15ULL ^ (lo_ + 0x632be59bd9b4e019ULL + deg_));
  }

 private:
  static constexpr int shift(int slot) { return (7 - (slot & 7)) * 8; }

  std::uint64_t hi_ = 0;
  std::uint64_t lo_ = 0;
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace whittaker
