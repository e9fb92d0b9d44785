#include "whittaker/q_whittaker.hpp"

#include <algorithm>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

const QRatFunc& q_minus_qinv_sq() {
  static const QRatFunc v = [] {
    const QRatFunc d(QLaurent::monomial(1) - QLaurent::monomial(-1));
    return d * d;
  }();
  return v;
}

Rational pairing_lambda_minus_beta(const QContext& ctx, int i, const RootVec& beta) {
  Rational s = ctx.lambda[i - 1];
  for (int j = 1; j <= ctx.r; ++j) s -= beta[j - 1] * ctx.cartan.cartan[j - 1][i - 1];
  return s;
}

}  // namespace

std::vector<Rational> gamma_closed_form(std::vector<Rational> lambda) {
  for (auto& x : lambda) x.canonicalize();
  const int r = static_cast<int>(lambda.size());
  std::vector<Rational> g(r + 2, Rational(0));
  for (int i = 1; i <= r; ++i) {
    Rational lo = 0, hi = 0;
    for (int j = 1; j <= i; ++j) lo += j * lambda[j - 1];
    for (int j = i + 1; j <= r; ++j) hi += (r + 1 - j) * lambda[j - 1];
    g[i] = Rational(i * (r + 1 - i), 2) + ((r + 1 - i) * lo + i * hi) / (r + 1);
    g[i].canonicalize();
  }
  return g;
}

QContext QContext::make(const std::vector<Rational>& lambda) {
  if (lambda.empty()) throw ConfigError("quantum mode needs a specialized lambda");
  QContext ctx;
  ctx.r = static_cast<int>(lambda.size());
  ctx.lambda = lambda;
  for (auto& x : ctx.lambda) x.canonicalize();
  ctx.cartan = build_cartan(LieType{Family::A, ctx.r, false});
  ctx.gamma.assign(ctx.r + 2, Rational(0));
  for (int i = 1; i <= ctx.r; ++i)
    for (int j = 1; j <= ctx.r; ++j)
      ctx.gamma[i] += ctx.cartan.weight_gram[i - 1][j - 1] * (lambda[j - 1] + 1);
  if (ctx.gamma != gamma_closed_form(lambda)) throw Error("gamma: closed form disagrees with C^-1");
  return ctx;
}

Rational tau(const QContext& ctx, int i, const RootVec& beta) {
  return ctx.gamma[i + 1] - ctx.gamma[i - 1] + ctx.beta_at(beta, i - 1) - ctx.beta_at(beta, i + 1);
}

QRatFunc vq(const QContext& ctx, const RootVec& beta) {
  QLaurent s;
  for (int i = 0; i <= ctx.r; ++i) {
    const Rational e = 2 * (ctx.gamma[i] - ctx.gamma[i + 1]);
    const int db = ctx.beta_at(beta, i + 1) - ctx.beta_at(beta, i);
    if (db == 0) continue;
    s += QLaurent::monomial(e) - QLaurent::monomial(e + 2 * db);
  }
  return QRatFunc(s) / q_minus_qinv_sq();
}

QRatFunc edge_weight(const QContext& ctx, int i, const RootVec& beta) {
  return q_power(tau(ctx, i, beta)) * vq(ctx, beta);
}

QRatFunc q_pairing_number(const QContext& ctx, int i, const RootVec& beta) {
  return q_number(pairing_lambda_minus_beta(ctx, i, beta));
}

QRatFunc q_path_weight(const QContext& ctx, const Path& p) {
  QRatFunc den(1);
  RootVec b(ctx.r, 0);
  for (int step : p) {
    b.at(step) += 1;
    const QRatFunc v = edge_weight(ctx, step + 1, b);
    if (v.is_zero()) throw SingularWeight(b);
    den *= v;
  }
  return den.inverse();
}

const QRatFunc& QPartitionTable::operator()(const RootVec& beta) {
  auto it = memo_.find(beta);
  if (it != memo_.end()) return it->second;
  if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; })) {
    static const QRatFunc zero;
    return zero;
  }
  if (height(beta) > max_degree_) throw CapExceeded("beta beyond the table's max degree");
  if (height(beta) == 0) return memo_.emplace(beta, QRatFunc(1)).first->second;
  QRatFunc sum;
  for (int i = 1; i <= ctx_.r; ++i) {
    if (!beta[i - 1]) continue;
    RootVec prev = beta;
    prev[i - 1] -= 1;
    const QRatFunc& zp = (*this)(prev);
    if (!zp.is_zero()) sum += q_power(-tau(ctx_, i, beta)) * zp;
  }
  const QRatFunc v = vq(ctx_, beta);
  if (v.is_zero()) throw SingularWeight(beta);
  return memo_.emplace(beta, sum / v).first->second;
}

QRatFunc q_partition_bruteforce(const QContext& ctx, const RootVec& beta, int cap) {
  if (height(beta) == 0) return QRatFunc(1);
  QRatFunc sum;
  for (const auto& p : enumerate_paths(beta, cap)) sum += q_path_weight(ctx, p);
  return sum;
}

QRatFunc cancellation_ratio(const QContext& ctx, const RootVec& beta, int i, int j) {
  RootVec up = beta;
  up.at(i - 1) += 1;
  const QRatFunc den = edge_weight(ctx, j, up) * edge_weight(ctx, i, beta);
  if (den.is_zero()) throw SingularWeight(beta);
  return edge_weight(ctx, i, up) * edge_weight(ctx, j, beta) / den;
}

bool cancellation_check(const QContext& ctx, const RootVec& beta, int i, int j) {
  return cancellation_ratio(ctx, beta, i, j) == q_power((i - j) * ctx.cartan.cartan[j - 1][i - 1]);
}

bool edge_difference_check(const QContext& ctx, const RootVec& beta, int i) {
  RootVec up = beta;
  up.at(i - 1) += 1;
  return edge_weight(ctx, i, up) - edge_weight(ctx, i, beta) == q_pairing_number(ctx, i, beta);
}

bool tau_independence_check(const QContext& ctx, const RootVec& beta, int i) {
  RootVec up = beta;
  up.at(i - 1) += 1;
  return tau(ctx, i, up) == tau(ctx, i, beta);
}

bool q_eigencondition_check(const QContext& ctx, const Path& p, int i) {
  const auto verts = vertices(p, ctx.r);
  const int n = static_cast<int>(p.size());
  QRatFunc rhs;
  for (int k = 0; k <= n; ++k) {
    int e = 0;
    for (int l = k; l < n; ++l) {  // steps k+1..N of the 1-based formula
      const int il = p[l] + 1;
      e += (i - il) * ctx.cartan.cartan[il - 1][i - 1];
    }
    rhs += q_power(e) * q_pairing_number(ctx, i, verts[k]) * q_path_weight(ctx, augmented_path(p, k, i - 1));
  }
  return rhs == q_path_weight(ctx, p);
}

bool bar_invariance_check(QPartitionTable& table, const RootVec& beta) {
  const QRatFunc& z = table(beta);
  return bar(z) == z;
}

QRatFunc q_toda_eigenvalue(const QContext& ctx) {
  // (lambda+rho|omega_i) from the weight Gram matrix, omega_0 = omega_{r+1} = 0.
  std::vector<Rational> g(ctx.r + 2, Rational(0));
  for (int i = 1; i <= ctx.r; ++i)
    for (int j = 1; j <= ctx.r; ++j) g[i] += (ctx.lambda[j - 1] + 1) * ctx.cartan.weight_gram[j - 1][i - 1];
  QLaurent s;
  for (int i = 0; i <= ctx.r; ++i) s += QLaurent::monomial(2 * (g[i] - g[i + 1]));
  return QRatFunc(s);
}

QTodaCheck q_toda_check(QPartitionTable& table, const RootVec& beta) {
  const QContext& ctx = table.context();
  // S_i inserts q^{beta_i - gamma_i}; S_0 = S_{r+1} = 1.
  auto s_exp = [&](int i) -> Rational {
    if (i == 0 || i == ctx.r + 1) return 0;
    return ctx.beta_at(beta, i) - ctx.gamma[i];
  };
  auto t_exp = [&](int i) -> Rational { return s_exp(i + 1) - s_exp(i); };
  QTodaCheck c;
  QLaurent k;
  QLaurent e;
  for (int i = 0; i <= ctx.r; ++i) {
    const Rational base = 2 * (ctx.gamma[i] - ctx.gamma[i + 1]);
    e += QLaurent::monomial(base);
    k += QLaurent::monomial(base) - QLaurent::monomial(2 * t_exp(i));
  }
  c.insertion = QRatFunc(k) == q_minus_qinv_sq() * vq(ctx, beta);
  c.shift = true;
  for (int i = 1; i <= ctx.r; ++i) c.shift = c.shift && t_exp(i - 1) + t_exp(i) == -tau(ctx, i, beta);
  QRatFunc rhs;
  for (int i = 1; i <= ctx.r; ++i) {
    RootVec prev = beta;
    prev[i - 1] -= 1;
    if (prev[i - 1] >= 0) rhs += q_power(-tau(ctx, i, beta)) * table(prev);
  }
  c.recursion = height(beta) == 0 ? vq(ctx, beta).is_zero() : vq(ctx, beta) * table(beta) == rhs;
  c.eigenvalue = QRatFunc(e) == q_toda_eigenvalue(ctx);
  return c;
}

QRatFunc q_bump_sl3(const QContext& ctx, int b1, int b2) {
  if (ctx.r != 2) throw DimensionMismatch("q_bump_sl3 needs r = 2");
  const Rational l1 = ctx.lambda[0], l2 = ctx.lambda[1];
  const Rational s = l1 + l2 + 2;
  QRatFunc num(1), den(1);
  for (int j = 1; j <= b1 + b2; ++j) num *= q_number(s - j);
  for (int j = 1; j <= b1; ++j) den *= q_number(j) * q_number(l1 + 1 - j) * q_number(s - j);
  for (int j = 1; j <= b2; ++j) den *= q_number(j) * q_number(l2 + 1 - j) * q_number(s - j);
  if (den.is_zero()) throw SingularWeight({b1, b2});
  return num / den;
}

QRatFunc q_sl2_closed_form(const QContext& ctx, int b) {
  if (ctx.r != 1) throw DimensionMismatch("sl2 closed form needs r = 1");
  QRatFunc den(1);
  for (int j = 1; j <= b; ++j) den *= q_number(j) * q_number(ctx.lambda[0] + 1 - j);
  if (den.is_zero()) throw SingularWeight({b});
  return den.inverse();
}

}  // namespace whittaker
