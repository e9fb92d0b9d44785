#include "whittaker/qlaurent.hpp"

#include <algorithm>

#include "whittaker/errors.hpp"
#include "whittaker/upoly.hpp"

namespace whittaker {

QLaurent::QLaurent(const Rational& c) {
  if (c != 0) terms_.push_back({Rational(0), c});
}

QLaurent QLaurent::monomial(const Rational& exp, const Rational& coeff) {
  QLaurent p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  QLaurent p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Integer QLaurent::exp_denominator_lcm() const {
  Integer l = 1;
  for (const auto& t : terms_) l = lcm(l, t.exp.get_den());
  return l;
}

QLaurent QLaurent::operator-() const { return scale(-1); }

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  std::vector<Term> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return *this = from_terms(std::move(t));
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() || b.is_zero()) return QLaurent();
  std::vector<QLaurent::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) t.push_back({x.exp + y.exp, x.coeff * y.coeff});
  return QLaurent::from_terms(std::move(t));
}

QLaurent QLaurent::shift(const Rational& e) const {
  QLaurent p = *this;
  for (auto& t : p.terms_) t.exp += e;
  return p;
}

QLaurent QLaurent::scale(const Rational& c) const {
  if (c == 0) return QLaurent();
  QLaurent p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

QLaurent QLaurent::bar() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) t.push_back({-it->exp, it->coeff});
  QLaurent p;
  p.terms_ = std::move(t);
  return p;
}

Rational QLaurent::evaluate_at_power(const Rational& s, long L) const {
  Rational v = 0;
  for (const auto& t : terms_) {
    const Rational e = t.exp * L;
    if (e.get_den() != 1) throw Error("evaluate_at_power: L does not clear exponent denominators");
    if (s == 0 && e < 0) throw DivisionByZero();
    v += t.coeff * pow(s, e.get_num().get_si());
  }
  return v;
}

Rational QLaurent::moment(unsigned n) const {
  Rational m = 0;
  for (const auto& t : terms_) m += t.coeff * pow(t.exp, static_cast<long>(n));
  return m;
}

namespace {

// p = c * q^min * P(q^{1/L}) with P primitive in Z[t].
struct Packed {
  UPoly poly;
  Rational scale;
  Rational min_exp;
};

Packed pack(const QLaurent& p, const Integer& L) {
  Integer den = 1;
  for (const auto& t : p.terms()) den = lcm(den, t.coeff.get_den());
  const Rational m = p.min_exp();
  std::vector<Integer> c;
  for (const auto& t : p.terms()) {
    const Rational e = (t.exp - m) * Rational(L);
    const std::size_t i = e.get_num().get_ui();
    if (c.size() <= i) c.resize(i + 1);
    c[i] = t.coeff.get_num() * (den / t.coeff.get_den());
  }
  UPoly u(std::move(c));
  Integer g = u.content();
  std::vector<Integer> cc = u.coeffs();
  for (auto& x : cc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return {UPoly(std::move(cc)), Rational(g) / Rational(den), m};
}

QLaurent unpack(const UPoly& u, const Integer& L, const Rational& min_exp, const Rational& scale) {
  std::vector<QLaurent::Term> t;
  const auto& c = u.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) t.push_back({min_exp + ratio(Integer(static_cast<unsigned long>(i)), L), Rational(c[i]) * scale});
  return QLaurent::from_terms(std::move(t));
}

}  // namespace

QLaurent gcd(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() && b.is_zero()) return QLaurent();
  if (a.is_zero() || b.is_zero() || a.is_monomial() || b.is_monomial()) {
    if (!a.is_zero() && !b.is_zero()) return QLaurent(1);
    const QLaurent& x = a.is_zero() ? b : a;
    Packed p = pack(x, x.exp_denominator_lcm());
    QLaurent g = unpack(p.poly, x.exp_denominator_lcm(), 0, 1);
    return g.terms().front().coeff < 0 ? -g : g;
  }
  const Integer L = lcm(a.exp_denominator_lcm(), b.exp_denominator_lcm());
  const UPoly g = gcd(pack(a, L).poly, pack(b, L).poly);
  QLaurent r = unpack(g, L, 0, 1);
  return r.terms().front().coeff < 0 ? -r : r;
}

QLaurent divexact(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return QLaurent();
  if (b.is_monomial()) return a.shift(-b.min_exp()).scale(Rational(1) / b.terms()[0].coeff);
  const Integer L = lcm(a.exp_denominator_lcm(), b.exp_denominator_lcm());
  const Packed pa = pack(a, L), pb = pack(b, L);
  auto q = divide_if_exact(pa.poly, pb.poly);
  if (!q) throw Error("inexact q-Laurent division");
  return unpack(*q, L, pa.min_exp - pb.min_exp, pa.scale / pb.scale);
}

void canonicalize_units(QLaurent& num, QLaurent& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den = QLaurent(1);
    return;
  }
  const Rational s = -den.min_exp();
  Integer l = 1, g = 0;
  for (const auto* p : {&num, &den})
    for (const auto& t : p->terms()) l = lcm(l, t.coeff.get_den());
  for (const auto* p : {&num, &den})
    for (const auto& t : p->terms()) g = gcd(g, t.coeff.get_num() * (l / t.coeff.get_den()));
  Rational c = Rational(l) / Rational(g);
  if (den.terms().front().coeff < 0) c = -c;
  num = num.shift(s).scale(c);
  den = den.shift(s).scale(c);
}

QRatFunc q_number(const Rational& x) {
  if (x == 0) return QRatFunc();
  return QRatFunc(QLaurent::monomial(x) - QLaurent::monomial(-x),
                  QLaurent::monomial(1) - QLaurent::monomial(-1));
}

QRatFunc bar(const QRatFunc& f) { return QRatFunc::from_coprime(f.num().bar(), f.den().bar()); }

Rational evaluate_at_power(const QRatFunc& f, const Rational& s, long L) {
  const Rational d = f.den().evaluate_at_power(s, L);
  if (d == 0) throw DivisionByZero();
  return f.num().evaluate_at_power(s, L) / d;
}

Integer exp_denominator_lcm(const QRatFunc& f) {
  return lcm(f.num().exp_denominator_lcm(), f.den().exp_denominator_lcm());
}

Rational classical_limit(const QRatFunc& f) {
  if (f.is_zero()) return 0;
  auto lowest = [](const QLaurent& p, Rational& value) {
    // A sum of k distinct exponentials cannot have k vanishing moments.
    for (unsigned n = 0; n <= p.terms().size(); ++n) {
      value = p.moment(n);
      if (value != 0) return n;
    }
    throw Error("classical_limit: vanishing moments");
  };
  Rational mn, md;
  const unsigned n = lowest(f.num(), mn);
  const unsigned d = lowest(f.den(), md);
  if (n > d) return 0;
  if (n < d) throw DivisionByZero();
  return mn / md;
}

std::string to_string(const QLaurent& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (c < 0) {
      s += "-";
      c = -c;
    } else if (!s.empty()) {
      s += "+";
    }
    if (t.exp == 0) {
      s += to_string(c);
      continue;
    }
    if (c != 1) s += to_string(c) + "*";
    s += "q";
    if (t.exp != 1) s += t.exp.get_den() == 1 && t.exp > 0 ? "^" + to_string(t.exp) : "^(" + to_string(t.exp) + ")";
  }
  return s;
}

std::string to_string(const QRatFunc& f) {
  std::string n = to_string(f.num());
  if (f.den() == QLaurent(1)) return n;
  if (f.num().terms().size() > 1) n = "(" + n + ")";
  std::string d = to_string(f.den());
  if (f.den().terms().size() > 1 || f.den().terms()[0].exp != 0) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace whittaker
