#pragma once

#include <map>
#include <vector>

#include "whittaker/cartan.hpp"
#include "whittaker/path_model.hpp"
#include "whittaker/qlaurent.hpp"

namespace whittaker {

// U_q(sl_{r+1}) data at a rational highest weight. Directions i are 1-based
// (1..r); beta has r entries and beta_0 = beta_{r+1} = 0 implicitly.
struct QContext {
  int r = 0;
  std::vector<Rational> lambda;  // lambda_1..lambda_r
  std::vector<Rational> gamma;   // gamma_0..gamma_{r+1}
  CartanData cartan;             // A_r

  static QContext make(const std::vector<Rational>& lambda);
  int beta_at(const RootVec& beta, int i) const { return i >= 1 && i <= r ? beta[i - 1] : 0; }
};

// gamma_i = sum_j (C^-1)_ij (lambda_j + 1), evaluated from the explicit sum formula.
std::vector<Rational> gamma_closed_form(std::vector<Rational> lambda);

Rational tau(const QContext& ctx, int i, const RootVec& beta);
QRatFunc vq(const QContext& ctx, const RootVec& beta);
// v^{(i)}(beta) = q^{tau_i(beta)} v_q(beta)
QRatFunc edge_weight(const QContext& ctx, int i, const RootVec& beta);
// [(lambda - beta|alpha_i)]
QRatFunc q_pairing_number(const QContext& ctx, int i, const RootVec& beta);

// x_q(p) = prod_k 1/v^{(i_k)}(p_k); path steps are 0-based as in path_model.
QRatFunc q_path_weight(const QContext& ctx, const Path& p);

class QPartitionTable {
 public:
  QPartitionTable(const QContext& ctx, int max_degree) : ctx_(ctx), max_degree_(max_degree) {}
  const QRatFunc& operator()(const RootVec& beta);
  const QContext& context() const { return ctx_; }

 private:
  const QContext& ctx_;
  int max_degree_;
  std::map<RootVec, QRatFunc> memo_;
};

QRatFunc q_partition_bruteforce(const QContext& ctx, const RootVec& beta, int cap = kDefaultEnumerationCap);

// v^{(i)}(b+a_i) v^{(j)}(b) / (v^{(j)}(b+a_i) v^{(i)}(b))
QRatFunc cancellation_ratio(const QContext& ctx, const RootVec& beta, int i, int j);
// cancellation_ratio == q^{(i-j) C_{j,i}}. The ratio actually equals q^{(j-i) C_{j,i}}, so this
// holds only when alpha_i and alpha_j are not adjacent.
bool cancellation_check(const QContext& ctx, const RootVec& beta, int i, int j);
// v^{(i)}(beta+alpha_i) - v^{(i)}(beta) == [(lambda-beta|alpha_i)]
bool edge_difference_check(const QContext& ctx, const RootVec& beta, int i);
bool tau_independence_check(const QContext& ctx, const RootVec& beta, int i);
bool q_eigencondition_check(const QContext& ctx, const Path& p, int i);
bool bar_invariance_check(QPartitionTable& table, const RootVec& beta);

struct QTodaCheck {
  bool insertion = false;  // sum_i (q^{2(g_i-g_{i+1})} - T_i^2) inserts (q-q^-1)^2 v_q
  bool shift = false;      // T_{k-1} T_k inserts q^{-tau_k}
  bool recursion = false;  // v_q Z = sum_k q^{-tau_k} Z_{beta-alpha_k}
  bool eigenvalue = false; // E_q from (lambda+rho|omega_i - omega_{i+1})
  bool all() const { return insertion && shift && recursion && eigenvalue; }
};
QTodaCheck q_toda_check(QPartitionTable& table, const RootVec& beta);
QRatFunc q_toda_eigenvalue(const QContext& ctx);

QRatFunc q_bump_sl3(const QContext& ctx, int b1, int b2);
QRatFunc q_sl2_closed_form(const QContext& ctx, int b);

}  // namespace whittaker
