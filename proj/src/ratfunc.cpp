#include "whittaker/ratfunc.hpp"

#include <cctype>

#include "whittaker/errors.hpp"

namespace whittaker {

void canonicalize_units(MultiPoly& num, MultiPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den = MultiPoly(1);
    return;
  }
  const Integer l = lcm(num.coeff_denominator_lcm(), den.coeff_denominator_lcm());
  if (l != 1) {
    num *= Rational(l);
    den *= Rational(l);
  }
  Integer g = gcd(num.integer_content(), den.integer_content());
  if (den.leading().coeff < 0) g = -g;
  if (g != 1) {
    const Rational inv = Rational(1) / Rational(g);
    num *= inv;
    den *= inv;
  }
}

Rational evaluate(const RatFunc& f, const std::map<int, Rational>& point) {
  const Rational d = f.den().evaluate(point);
  if (d == 0) throw DivisionByZero();
  return f.num().evaluate(point) / d;
}

RatFunc substitute(const RatFunc& f, const std::map<int, Rational>& point) {
  return RatFunc(f.num().substitute(point), f.den().substitute(point));
}

bool is_constant(const RatFunc& f) { return f.num().is_constant() && f.den().is_constant(); }

Rational constant_value(const RatFunc& f) {
  if (!is_constant(f)) throw Error("rational function is not constant");
  return f.num().constant_value() / f.den().constant_value();
}

namespace {

struct Factored {
  Rational constant;
  std::vector<std::pair<MultiPoly, unsigned>> factors;
};

Factored factor_with_hints(MultiPoly p, const std::vector<MultiPoly>& hints) {
  Factored out;
  out.constant = make_primitive(p);
  if (p.is_zero()) return out;
  for (int v = 0; v < Monomial::kSlots; ++v) {
    unsigned e = Monomial::kMaxDegree;
    for (const auto& t : p.terms()) e = std::min(e, t.mono.exp(v));
    if (e == 0) continue;
    std::vector<MultiPoly::Term> ts;
    for (const auto& t : p.terms()) ts.push_back({t.mono / Monomial::var(v, e), t.coeff});
    p = MultiPoly::from_terms(std::move(ts));
    out.factors.emplace_back(MultiPoly::var(v), e);
  }
  for (MultiPoly h : hints) {
    make_primitive(h);
    if (h.is_constant() || h.size() == 1) continue;
    unsigned e = 0;
    while (!p.is_constant()) {
      auto q = divide_if_exact(p, h);
      if (!q) break;
      p = std::move(*q);
      ++e;
    }
    if (e) out.factors.emplace_back(h, e);
  }
  if (!p.is_constant()) out.factors.emplace_back(p, 1);
  else out.constant *= p.constant_value();
  return out;
}

bool needs_parens(const MultiPoly& p) {
  return p.size() > 1 || (p.size() == 1 && (p.leading().coeff != 1 || p.leading().mono.degree() > 1));
}

// Product of |constant| and factors; items counts the multiplicands.
std::string product_string(const Rational& constant, const Factored& f, int& items) {
  std::string s;
  items = 0;
  const Rational c = abs(constant);
  if (c != 1 || f.factors.empty()) {
    s = to_string(c);
    items = 1;
  }
  for (const auto& [p, e] : f.factors) {
    if (!s.empty()) s += "*";
    std::string body = to_string(p);
    if (needs_parens(p)) body = "(" + body + ")";
    s += body;
    if (e > 1) s += "^" + std::to_string(e);
    ++items;
  }
  return s;
}

}  // namespace

std::string to_string(const MultiPoly& p, const std::vector<MultiPoly>& factor_hints) {
  if (p.is_zero()) return "0";
  Factored f = factor_with_hints(p, factor_hints);
  int items = 0;
  std::string s = product_string(f.constant, f, items);
  return f.constant < 0 ? "-" + (items > 1 ? "(" + s + ")" : s) : s;
}

std::string to_string(const RatFunc& f, const std::vector<MultiPoly>& factor_hints) {
  if (f.is_zero()) return "0";
  Factored n = factor_with_hints(f.num(), factor_hints);
  Factored d = factor_with_hints(f.den(), factor_hints);
  // Move rational constants so both sides print as integers.
  const Rational c = n.constant / d.constant;
  n.constant = c.get_num();
  d.constant = c.get_den();
  int ni = 0, di = 0;
  std::string ns = product_string(n.constant, n, ni);
  const bool negative = c < 0;
  if (d.factors.empty() && d.constant == 1) {
    if (!negative) return ns;
    return "-" + (ni > 1 || (ni == 1 && !n.factors.empty() && n.constant != 1) ? "(" + ns + ")" : ns);
  }
  std::string ds = product_string(d.constant, d, di);
  const bool bare_den = di == 1;
  if (ni > 1) ns = "(" + ns + ")";
  if (!bare_den) ds = "(" + ds + ")";
  return (negative ? "-" : "") + ns + "/" + ds;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (eat('*')) r = r * unary();
      else if (eat('/')) r = r / unary();
      else return r;
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    const bool neg = eat('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    RatFunc r(MultiPoly(1));
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return neg ? r.inverse() : r;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(MultiPoly(Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const int slot = var_slot(name);
      if (slot < 0) fail("unknown variable '" + name + "'");
      return rf_var(slot);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

}  // namespace whittaker
