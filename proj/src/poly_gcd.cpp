#include "whittaker/poly_gcd.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

// Integer polynomials used inside the gcd code, descending grlex.
struct ZTerm {
  Monomial m;
  Integer c;
};
using ZPoly = std::vector<ZTerm>;

ZPoly normalize_terms(ZPoly t) {
  std::sort(t.begin(), t.end(), [](const ZTerm& a, const ZTerm& b) { return a.m > b.m; });
  ZPoly out;
  out.reserve(t.size());
  for (auto& x : t) {
    if (!out.empty() && out.back().m == x.m) {
      out.back().c += x.c;
      if (out.back().c == 0) out.pop_back();
    } else if (x.c != 0) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

ZPoly to_z(const MultiPoly& p) {
  // Caller guarantees integer coefficients.
  ZPoly z;
  z.reserve(p.size());
  for (const auto& t : p.terms()) z.push_back({t.mono, t.coeff.get_num()});
  return z;
}

MultiPoly from_z(const ZPoly& z) {
  std::vector<MultiPoly::Term> t;
  t.reserve(z.size());
  for (const auto& x : z) t.push_back({x.m, Rational(x.c)});
  return MultiPoly::from_terms(std::move(t));
}

bool z_is_constant(const ZPoly& a) { return a.empty() || (a.size() == 1 && a[0].m.is_one()); }

std::uint32_t z_support(const ZPoly& a) {
  std::uint32_t s = 0;
  for (const auto& t : a) s |= t.m.support();
  return s;
}

unsigned z_degree_in(const ZPoly& a, int v) {
  unsigned d = 0;
  for (const auto& t : a) d = std::max(d, t.m.exp(v));
  return d;
}

Integer z_content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& t : a) {
    g = gcd(g, t.c);
    if (g == 1) break;
  }
  return g;
}

Integer z_max_norm(const ZPoly& a) {
  Integer n = 0;
  for (const auto& t : a) {
    Integer x = abs(t.c);
    if (x > n) n = x;
  }
  return n;
}

void z_divide_integer(ZPoly& a, const Integer& g) {
  if (g == 1) return;
  for (auto& t : a) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

void z_scale(ZPoly& a, const Integer& g) {
  for (auto& t : a) t.c *= g;
}

// Primitive with positive leading coefficient.
ZPoly z_primitive(ZPoly a) {
  if (a.empty()) return a;
  Integer g = z_content(a);
  if (a[0].c < 0) g = -g;
  z_divide_integer(a, g);
  return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly p;
  p.reserve(a.size() * b.size());
  for (const auto& s : a)
    for (const auto& t : b) p.push_back({s.m * t.m, s.c * t.c});
  return normalize_terms(std::move(p));
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly t = a;
  for (const auto& x : b) t.push_back({x.m, -x.c});
  return normalize_terms(std::move(t));
}

// Exact division a / b in Z[x]; nullopt if b does not divide a.
std::optional<ZPoly> z_divide(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw DivisionByZero();
  if (a.empty()) return ZPoly{};
  if (b.size() == 1) {
    ZPoly q;
    q.reserve(a.size());
    for (const auto& t : a) {
      if (!b[0].m.divides(t.m) || !mpz_divisible_p(t.c.get_mpz_t(), b[0].c.get_mpz_t()))
        return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.c.get_mpz_t(), b[0].c.get_mpz_t());
      q.push_back({t.m / b[0].m, std::move(c)});
    }
    return q;
  }
  if (a[0].m.degree() < b[0].m.degree() || a.size() < 2) return std::nullopt;
  for (int v = 0; v < Monomial::kSlots; ++v)
    if (z_degree_in(b, v) > z_degree_in(a, v)) return std::nullopt;
  std::map<Monomial, Integer, std::greater<>> rem;
  for (const auto& t : a) rem.emplace(t.m, t.c);
  ZPoly q;
  const Monomial& lm = b[0].m;
  const Integer& lc = b[0].c;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lm.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t()))
      return std::nullopt;
    const Monomial qm = it->first / lm;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lc.get_mpz_t());
    rem.erase(it);
    for (std::size_t k = 1; k < b.size(); ++k) {
      const Monomial m = b[k].m * qm;
      auto [pos, inserted] = rem.try_emplace(m, 0);
      mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), b[k].c.get_mpz_t());
      if (pos->second == 0) rem.erase(pos);
    }
    q.push_back({qm, std::move(qc)});
  }
  return q;  // quotient terms were produced in descending order
}

ZPoly z_evaluate(const ZPoly& a, int v, const Integer& x) {
  ZPoly out;
  out.reserve(a.size());
  std::vector<Integer> powers{Integer(1)};
  for (const auto& t : a) {
    const unsigned e = t.m.exp(v);
    while (powers.size() <= e) powers.push_back(powers.back() * x);
    out.push_back({t.m.with_exp(v, 0), t.c * powers[e]});
  }
  return normalize_terms(std::move(out));
}

// x-adic reconstruction in the variable v with symmetric residues.
std::optional<ZPoly> z_interpolate(ZPoly h, int v, const Integer& x) {
  ZPoly g;
  const Integer half = x / 2;
  for (unsigned i = 0; !h.empty(); ++i) {
    if (i > Monomial::kMaxDegree) return std::nullopt;
    ZPoly next;
    next.reserve(h.size());
    for (auto& t : h) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.c.get_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r != 0) g.push_back({t.m.with_exp(v, i), r});
      Integer rest = t.c - r;
      if (rest != 0) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), x.get_mpz_t());
        next.push_back({t.m, std::move(rest)});
      }
    }
    h = std::move(next);
  }
  return normalize_terms(std::move(g));
}

ZPoly z_constant(const Integer& c) {
  if (c == 0) return {};
  return {{Monomial(), c}};
}

int lowest_slot(std::uint32_t s) { return s ? std::countr_zero(s) : -1; }

// Full gcd in Z[x] (content included, positive leading coefficient).
std::optional<ZPoly> heu_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return b[0].c < 0 ? z_sub({}, b) : b;
  if (b.empty()) return a[0].c < 0 ? z_sub({}, a) : a;
  const Integer ca = z_content(a), cb = z_content(b);
  const Integer g = gcd(ca, cb);
  if (z_is_constant(a) || z_is_constant(b)) return z_constant(g);
  ZPoly pa = a, pb = b;
  z_divide_integer(pa, ca);
  z_divide_integer(pb, cb);
  const int v = lowest_slot(z_support(pa) | z_support(pb));
  Integer xi = 2 * std::min(z_max_norm(pa), z_max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    ZPoly ea = z_evaluate(pa, v, xi);
    ZPoly eb = z_evaluate(pb, v, xi);
    if (!ea.empty() && !eb.empty()) {
      if (auto h = heu_gcd(ea, eb)) {
        if (auto cand = z_interpolate(*h, v, xi)) {
          ZPoly G = z_primitive(std::move(*cand));
          if (!G.empty() && z_divide(pa, G) && z_divide(pb, G)) {
            z_scale(G, g);
            return G;
          }
        }
      }
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    xi = xi * 73794 * r / 27011;
  }
  return std::nullopt;
}

// Coefficients of a as a polynomial in v.
std::vector<ZPoly> coeffs_in(const ZPoly& a, int v) {
  std::vector<ZPoly> c(z_degree_in(a, v) + 1);
  for (const auto& t : a) c[t.m.exp(v)].push_back({t.m.with_exp(v, 0), t.c});
  for (auto& x : c) x = normalize_terms(std::move(x));
  return c;
}

ZPoly from_coeffs(const std::vector<ZPoly>& c, int v) {
  ZPoly out;
  for (unsigned i = 0; i < c.size(); ++i)
    for (const auto& t : c[i]) out.push_back({t.m.with_exp(v, i), t.c});
  return normalize_terms(std::move(out));
}

ZPoly prs_gcd(const ZPoly& a, const ZPoly& b);

ZPoly content_in(const std::vector<ZPoly>& c) {
  ZPoly g;
  for (const auto& x : c) {
    g = prs_gcd(g, x);
    if (z_is_constant(g) && !g.empty() && g[0].c == 1) break;
  }
  return g;
}

std::vector<ZPoly> divide_coeffs(std::vector<ZPoly> c, const ZPoly& g) {
  for (auto& x : c) x = *z_divide(x, g);
  return c;
}

void trim(std::vector<ZPoly>& c) {
  while (!c.empty() && c.back().empty()) c.pop_back();
}

// Pseudo-remainder of a by b as polynomials in the main variable.
std::vector<ZPoly> prem(std::vector<ZPoly> r, const std::vector<ZPoly>& b) {
  const ZPoly& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const ZPoly lr = r.back();
    for (auto& x : r) x = z_mul(x, lb);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = z_sub(r[i + shift], z_mul(lr, b[i]));
    trim(r);
  }
  return r;
}

ZPoly prs_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return b.empty() || b[0].c > 0 ? b : z_sub({}, b);
  if (b.empty()) return a[0].c > 0 ? a : z_sub({}, a);
  if (z_is_constant(a) || z_is_constant(b)) return z_constant(gcd(z_content(a), z_content(b)));
  const int v = lowest_slot(z_support(a) | z_support(b));
  auto ca = coeffs_in(a, v), cb = coeffs_in(b, v);
  const ZPoly conta = content_in(ca), contb = content_in(cb);
  ZPoly cont = prs_gcd(conta, contb);
  auto pa = divide_coeffs(std::move(ca), conta);
  auto pb = divide_coeffs(std::move(cb), contb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (true) {
    if (pb.size() == 1) return z_primitive(cont);  // primitive parts are coprime
    auto r = prem(pa, pb);
    if (r.empty()) break;
    const ZPoly cr = content_in(r);
    pa = std::move(pb);
    pb = divide_coeffs(std::move(r), cr);
  }
  ZPoly g = z_primitive(from_coeffs(pb, v));
  g = z_mul(g, cont);
  return g[0].c < 0 ? z_sub({}, g) : g;
}

// Monomial content, used for the cheap case of monomial arguments.
Monomial monomial_gcd(const MultiPoly& p, Monomial m) {
  for (const auto& t : p.terms()) m = Monomial::gcd(m, t.mono);
  return m;
}

}  // namespace

Rational make_primitive(MultiPoly& p) {
  if (p.is_zero()) return 0;
  const Integer den = p.coeff_denominator_lcm();
  Rational scale = den;  // p * den has integer coefficients
  Integer content = 0;
  for (const auto& t : p.terms()) {
    content = gcd(content, t.coeff.get_num() * (den / t.coeff.get_den()));
    if (content == 1) break;
  }
  Rational c = Rational(content) / scale;
  if (p.leading().coeff < 0) c = -c;
  if (c != 1) p *= Rational(1) / c;
  return c;
}

namespace detail {

MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly pa = a, pb = b;
  make_primitive(pa);
  make_primitive(pb);
  MultiPoly g = from_z(prs_gcd(to_z(pa), to_z(pb)));
  make_primitive(g);
  return g;
}

std::optional<MultiPoly> gcd_heuristic(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly pa = a, pb = b;
  make_primitive(pa);
  make_primitive(pb);
  auto h = heu_gcd(to_z(pa), to_z(pb));
  if (!h) return std::nullopt;
  MultiPoly g = from_z(*h);
  make_primitive(g);
  return g;
}

}  // namespace detail

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return MultiPoly();
  if (a.is_zero() || b.is_zero()) {
    MultiPoly g = a.is_zero() ? b : a;
    make_primitive(g);
    return g;
  }
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a.size() == 1 || b.size() == 1) {
    const Monomial seed = a.size() == 1 ? a.leading().mono : b.leading().mono;
    return MultiPoly::monomial(monomial_gcd(a.size() == 1 ? b : a, seed), 1);
  }
  if ((a.support() & b.support()) == 0) return MultiPoly(1);
  if (auto g = detail::gcd_heuristic(a, b)) return *g;
  return detail::gcd_prs(a, b);
}

std::optional<MultiPoly> divide_if_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return MultiPoly();
  if (b.is_constant()) return a * MultiPoly(Rational(1 / b.constant_value()));
  MultiPoly pa = a, pb = b;
  const Rational ca = make_primitive(pa);
  const Rational cb = make_primitive(pb);
  // Gauss: a primitive divisor leaves a primitive integer quotient.
  auto q = z_divide(to_z(pa), to_z(pb));
  if (!q) return std::nullopt;
  return from_z(*q) * MultiPoly(Rational(ca / cb));
}

MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_if_exact(a, b);
  if (!q) throw Error("inexact polynomial division");
  return *q;
}

}  // namespace whittaker
