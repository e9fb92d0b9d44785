#include "whittaker/multipoly.hpp"

#include <algorithm>
#include <cctype>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

bool term_desc(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.mono > b.mono; }

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::var(int slot) { return monomial(Monomial::var(slot), 1); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_desc);
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

unsigned MultiPoly::degree_in(int slot) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(slot));
  return d;
}

std::uint32_t MultiPoly::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void MultiPoly::add_scaled(const MultiPoly& o, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono > a->mono) {
      out.push_back({b->mono, sign > 0 ? b->coeff : Rational(-b->coeff)});
      ++b;
    } else {
      Rational c = a->coeff;
      if (sign > 0) c += b->coeff;
      else c -= b->coeff;
      if (c != 0) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, -1);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) {
    MultiPoly r = a;
    return r *= b.terms_[0].coeff;
  }
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) {
    MultiPoly r = b;
    return r *= a.terms_[0].coeff;
  }
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return MultiPoly::from_terms(std::move(prod));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly r(1), base = *this;
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m) const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.mono = t.mono * m;  // order preserved by grlex
  return p;
}

Rational MultiPoly::evaluate(const std::map<int, Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int s = 0; s < Monomial::kSlots; ++s) {
      const unsigned e = t.mono.exp(s);
      if (!e) continue;
      auto it = point.find(s);
      if (it == point.end()) throw Error("evaluate: unassigned variable " + var_name(s));
      v *= whittaker::pow(it->second, e);
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::map<int, Rational>& point) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    Monomial m = t.mono;
    for (const auto& [s, v] : point) {
      const unsigned e = m.exp(s);
      if (!e) continue;
      c *= whittaker::pow(v, e);
      m = m.with_exp(s, 0);
    }
    out.push_back({m, std::move(c)});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute(int slot, const MultiPoly& value) const {
  MultiPoly out;
  std::vector<MultiPoly> powers{MultiPoly(1)};
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exp(slot);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out += monomial(t.mono.with_exp(slot, 0), t.coeff) * powers[e];
  }
  return out;
}

Integer MultiPoly::coeff_denominator_lcm() const {
  Integer l = 1;
  for (const auto& t : terms_)
    if (t.coeff.get_den() != 1) l = lcm(l, t.coeff.get_den());
  return l;
}

Integer MultiPoly::integer_content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    g = gcd(g, t.coeff.get_num());
    if (g == 1) break;
  }
  return g;
}

std::string var_name(int slot) {
  if (slot == kEpsSlot) return "eps";
  return "l" + std::to_string(slot + 1);
}

int var_slot(const std::string& name) {
  if (name == "eps") return kEpsSlot;
  if (name.size() >= 2 && name[0] == 'l') {
    int v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
      v = v * 10 + (name[i] - '0');
      if (v > 15) return -1;
    }
    if (v >= 1 && v <= 15 && name[1] != '0') return v - 1;
  }
  return -1;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (c < 0) {
      s += "-";
      c = -c;
    } else if (!first) {
      s += "+";
    }
    first = false;
    std::string mono;
    for (int v = 0; v < Monomial::kSlots; ++v) {
      const unsigned e = t.mono.exp(v);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += to_string(c) + "*" + mono;
    }
  }
  return s;
}

}  // namespace whittaker
