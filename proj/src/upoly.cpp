#include "whittaker/upoly.hpp"

#include <algorithm>

#include "whittaker/errors.hpp"

namespace whittaker {

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& x : c_) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

Integer UPoly::max_norm() const {
  Integer n = 0;
  for (const auto& x : c_)
    if (abs(x) > n) n = abs(x);
  return n;
}

Integer UPoly::evaluate(const Integer& x) const {
  Integer v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return UPoly(std::move(c));
}

namespace {

UPoly primitive(const UPoly& a) {
  if (a.is_zero()) return a;
  Integer g = a.content();
  if (a.lead() < 0) g = -g;
  std::vector<Integer> c = a.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return UPoly(std::move(c));
}

UPoly interpolate(Integer h, const Integer& x) {
  std::vector<Integer> c;
  const Integer half = x / 2;
  while (h != 0) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (r > half) r -= x;
    c.push_back(r);
    h -= r;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  return UPoly(std::move(c));
}

// Pseudo-remainder of a by b.
UPoly prem(const UPoly& a, const UPoly& b) {
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  while (r.size() > db) {
    const std::size_t shift = r.size() - 1 - db;
    const Integer lr = r.back();
    for (auto& x : r) x *= b.lead();
    for (std::size_t i = 0; i < bc.size(); ++i)
      mpz_submul(r[i + shift].get_mpz_t(), lr.get_mpz_t(), bc[i].get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UPoly(std::move(r));
}

UPoly gcd_prs(UPoly a, UPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return UPoly({Integer(1)});
    UPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a);
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return primitive(b);
  if (b.is_zero()) return primitive(a);
  if (a.degree() == 0 || b.degree() == 0) return UPoly({Integer(1)});
  const UPoly pa = primitive(a), pb = primitive(b);
  // Common powers of t are handled by the caller's Laurent shift, but keep this exact anyway.
  Integer xi = 2 * std::min(pa.max_norm(), pb.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Integer h = whittaker::gcd(pa.evaluate(xi), pb.evaluate(xi));
    UPoly g = primitive(interpolate(h, xi));
    if (!g.is_zero() && divide_if_exact(pa, g) && divide_if_exact(pb, g)) return g;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    xi = xi * 73794 * r / 27011;
  }
  return gcd_prs(pa, pb);
}

std::optional<UPoly> divide_if_exact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return UPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  const Integer a2 = a.evaluate(2), b2 = b.evaluate(2);
  if (b2 != 0 && !mpz_divisible_p(a2.get_mpz_t(), b2.get_mpz_t())) return std::nullopt;
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> q(r.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer& top = r[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t j = 0; j < db; ++j)
    if (r[j] != 0) return std::nullopt;
  return UPoly(std::move(q));
}

}  // namespace whittaker
