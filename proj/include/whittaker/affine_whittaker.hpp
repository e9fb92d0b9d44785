#pragma once

#include <map>
#include <utility>
#include <vector>

#include "whittaker/path_model.hpp"

namespace whittaker {

// v_hat(beta_hat) from the affine pairings equals d_0 eps beta_0 + v(beta - beta_0 theta).
bool deformed_toda_identity(const CartanData& cd, const WeightParam& w, const RootVec& beta_hat);

struct ExponentForms {
  std::vector<MultiPoly> lhs;  // coefficients of phi_0..phi_r in (Lambda+rho_hat-beta_hat|phi_hat)
  std::vector<MultiPoly> rhs;  // eps phi_0 + (lambda+rho-gamma|phi - phi_0 theta^vee)
  bool equal() const { return lhs == rhs; }
};
ExponentForms renormalized_exponent(const CartanData& cd, const WeightParam& w, const RootVec& beta_hat);

// Normalization of the diagonal coefficients w_{j; m delta}.
enum class CriticalGauge {
  // w_{0;0} = 1 and w_{j;m delta} = 0 otherwise.
  ZeroDiagonal,
  // w_{j;m delta} fixed by solvability of the order j+1 equation at m delta
  // (w_{j;0} = 0 for j >= 1).
  Consistent,
};

struct CriticalExpansion {
  int max_degree = 0;
  int j_max = 0;
  CriticalGauge gauge = CriticalGauge::ZeroDiagonal;
  std::map<int, RatFunc> a;                          // a_m
  std::map<std::pair<int, RootVec>, RatFunc> w;      // (j, beta_hat) -> w_{j;beta_hat}

  const RatFunc& coefficient(int j, const RootVec& beta_hat) const;
  // Factors met while solving (printing hints).
  std::vector<MultiPoly> factors;
};

// Solves the critical recursion for |beta_hat| <= max_degree and j <= j_max;
// a_m for every m with m |delta| <= max_degree. Throws SingularWeight when a
// specialized weight makes some v(beta - beta_0 theta) vanish off the diagonal.
CriticalExpansion critical_solve(const CartanData& cd, const WeightParam& w, int max_degree, int j_max,
                                 CriticalGauge gauge = CriticalGauge::ZeroDiagonal);

// LHS - RHS of the critical recursion at (j, beta_hat) using stored values.
RatFunc critical_residual(const CartanData& cd, const WeightParam& w, const CriticalExpansion& e, int j,
                          const RootVec& beta_hat);

bool is_diagonal(const CartanData& cd, const RootVec& beta_hat);

}  // namespace whittaker
