#include "whittaker/affine_whittaker.hpp"

#include <algorithm>

#include "whittaker/errors.hpp"

namespace whittaker {

bool deformed_toda_identity(const CartanData& cd, const WeightParam& w, const RootVec& beta_hat) {
  const auto [b0, fin] = affine_decompose(cd, beta_hat);
  const MultiPoly reduced = w.eps * MultiPoly(cd.d0() * b0) + vertex_weight(cd, w, fin);
  return vertex_weight_affine_direct(cd, w, beta_hat) == reduced;
}

ExponentForms renormalized_exponent(const CartanData& cd, const WeightParam& w, const RootVec& beta_hat) {
  const int r = cd.rank;
  ExponentForms f;
  MultiPoly l0 = w.level(cd);
  for (int i = 1; i <= r; ++i) l0 -= w.lambda[i - 1] * MultiPoly(cd.comarks[i]);
  for (int i = 0; i <= r; ++i) {
    int shift = 0;
    for (int j = 0; j <= r; ++j) shift += beta_hat[j] * cd.affine_cartan[j][i];
    f.lhs.push_back((i == 0 ? l0 : w.lambda[i - 1]) + MultiPoly(1 - shift));
  }
  const auto [b0, gamma] = affine_decompose(cd, beta_hat);
  (void)b0;
  const auto gw = root_to_weight(cd, gamma);
  std::vector<MultiPoly> c;
  for (int i = 0; i < r; ++i) c.push_back(w.lambda[i] + MultiPoly(1 - gw[i]));
  MultiPoly phi0 = w.eps;
  for (int i = 0; i < r; ++i) phi0 -= c[i] * MultiPoly(cd.comarks[i + 1]);
  f.rhs.push_back(phi0);
  f.rhs.insert(f.rhs.end(), c.begin(), c.end());
  return f;
}

bool is_diagonal(const CartanData& cd, const RootVec& beta_hat) {
  for (std::size_t i = 0; i < beta_hat.size(); ++i)
    if (beta_hat[i] != beta_hat[0] * cd.delta[i]) return false;
  return true;
}

const RatFunc& CriticalExpansion::coefficient(int j, const RootVec& beta_hat) const {
  static const RatFunc zero;
  if (j < 0 || std::any_of(beta_hat.begin(), beta_hat.end(), [](int x) { return x < 0; })) return zero;
  auto it = w.find({j, beta_hat});
  if (it == w.end()) throw Error("critical coefficient out of range");
  return it->second;
}

namespace {

RootVec minus_delta(const CartanData& cd, RootVec b, int m) {
  for (std::size_t i = 0; i < b.size(); ++i) b[i] -= m * cd.delta[i];
  return b;
}

// d_0 sum_m m a_m w_{j; beta_hat - m delta} over the a_m available in e.
RatFunc memory_term(const CartanData& cd, const CriticalExpansion& e, int j, const RootVec& beta_hat, int skip_m) {
  RatFunc s;
  for (const auto& [m, am] : e.a) {
    if (m == skip_m) continue;
    const RootVec prev = minus_delta(cd, beta_hat, m);
    if (std::any_of(prev.begin(), prev.end(), [](int x) { return x < 0; })) break;
    const RatFunc& wp = e.coefficient(j, prev);
    if (!wp.is_zero()) s += RatFunc(MultiPoly(cd.d0() * m)) * am * wp;
  }
  return s;
}

RatFunc incoming(const CriticalExpansion& e, int j, const RootVec& beta_hat) {
  RatFunc s;
  for (std::size_t i = 0; i < beta_hat.size(); ++i) {
    if (!beta_hat[i]) continue;
    RootVec prev = beta_hat;
    prev[i] -= 1;
    s += e.coefficient(j, prev);
  }
  return s;
}

}  // namespace

RatFunc critical_residual(const CartanData& cd, const WeightParam& w, const CriticalExpansion& e, int j,
                          const RootVec& beta_hat) {
  const auto [b0, gamma] = affine_decompose(cd, beta_hat);
  RatFunc lhs = RatFunc(vertex_weight(cd, w, gamma)) * e.coefficient(j, beta_hat) +
                memory_term(cd, e, j, beta_hat, 0);
  RatFunc rhs = incoming(e, j, beta_hat);
  if (j > 0 && b0) rhs -= RatFunc(MultiPoly(cd.d0() * b0)) * e.coefficient(j - 1, beta_hat);
  return lhs - rhs;
}

CriticalExpansion critical_solve(const CartanData& cd, const WeightParam& w, int max_degree, int j_max,
                                 CriticalGauge gauge) {
  if (!cd.type.affine) throw ConfigError("critical_solve needs an affine type");
  if (max_degree < 0 || j_max < 0) throw ConfigError("critical_solve: negative range");
  const int size = cd.rank + 1;
  const int dh = height(cd.delta);
  const int top = gauge == CriticalGauge::Consistent ? j_max + 1 : j_max;
  const int d0 = cd.d0();
  CriticalExpansion e;
  e.max_degree = max_degree;
  e.j_max = j_max;
  e.gauge = gauge;
  std::vector<MultiPoly> factors;
  auto note = [&](MultiPoly v) {
    if (v.is_constant()) return;
    make_primitive(v);
    if (std::find(factors.begin(), factors.end(), v) == factors.end()) factors.push_back(std::move(v));
  };

  for (int n = 0; n <= max_degree; ++n) {
    const auto points = lattice_points(size, n);
    // Off-diagonal entries; diagonal ones start at zero.
    for (int j = 0; j <= top; ++j) {
      for (const auto& b : points) {
        if (is_diagonal(cd, b)) {
          e.w[{j, b}] = RatFunc(MultiPoly(n == 0 && j == 0 ? 1 : 0));
          continue;
        }
        const auto [b0, gamma] = affine_decompose(cd, b);
        const MultiPoly v = vertex_weight(cd, w, gamma);
        if (v.is_zero()) throw SingularWeight(b);
        note(v);
        RatFunc rhs = incoming(e, j, b) - memory_term(cd, e, j, b, 0);
        if (j > 0 && b0) rhs -= RatFunc(MultiPoly(d0 * b0)) * e.coefficient(j - 1, b);
        e.w[{j, b}] = rhs / RatFunc(v);
      }
    }
    if (n == 0 || n % dh != 0) continue;
    const int m = n / dh;
    const RootVec diag = minus_delta(cd, RootVec(size, 0), -m);
    // a_m from the order-0 equation at m delta.
    {
      RatFunc rhs = incoming(e, 0, diag) - memory_term(cd, e, 0, diag, m);
      e.a[m] = rhs / RatFunc(MultiPoly(d0 * m));
    }
    if (gauge == CriticalGauge::Consistent) {
      for (int j = 1; j <= top; ++j) {
        RatFunc rhs = incoming(e, j, diag) - memory_term(cd, e, j, diag, 0);
        e.w[{j - 1, diag}] = rhs / RatFunc(MultiPoly(d0 * m));
      }
    }
  }
  if (top > j_max)
    for (auto it = e.w.begin(); it != e.w.end();) it = it->first.first > j_max ? e.w.erase(it) : std::next(it);
  e.factors = std::move(factors);
  return e;
}

}  // namespace whittaker
