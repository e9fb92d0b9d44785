#pragma once

#include <vector>

#include "whittaker/path_model.hpp"

namespace whittaker {

struct WhittakerVectorTerm {
  Path path;             // word f_{i_N} ... f_{i_1}
  RatFunc coefficient;   // x(path)
  RootVec mu_degree;     // endpoint beta
};

// One term per path with |endpoint| <= max_degree, grouped by endpoint in
// graded order, paths lexicographic within a group.
std::vector<WhittakerVectorTerm> whittaker_vector(const CartanData& cd, const WeightParam& w, int max_degree,
                                                  int cap = kDefaultEnumerationCap);

struct WhittakerSeriesTerm {
  RootVec beta;
  RootVec nu_degree;
  // Coefficients of phi_i in (lambda-beta|phi) and in the rho-shifted form.
  std::vector<MultiPoly> exponent;
  std::vector<MultiPoly> modified_exponent;
  RatFunc coefficient;   // Z_beta
};

std::vector<WhittakerSeriesTerm> whittaker_series(PartitionTable& table, int max_degree);

// E = (lambda+rho|lambda+rho)/2
MultiPoly toda_eigenvalue(const CartanData& cd, const WeightParam& w);
// ((lambda+rho|lambda+rho) - (lambda+rho-beta|lambda+rho-beta))/2 == v(beta)
bool toda_eigen_identity(const CartanData& cd, const WeightParam& w, const RootVec& beta);

// Factorized A2 partition function.
RatFunc bump_closed_form(int b1, int b2, const WeightParam& w);

struct A2RecursionCheck {
  bool first = false;     // beta_1 (lambda_1+1-beta_1)(s-beta_1) Z = (s-|beta|) Z_{beta-alpha_1}
  bool second = false;    // mirror
  bool combined = false;  // (b1-b2) m1 m2 Z = m2 Z_{beta-alpha_1} - m1 Z_{beta-alpha_2}, m_i = lambda_i+1-b_i
  // Same relation with the right-hand side negated; holds only where both sides vanish.
  bool combined_as_printed = false;
  bool all() const { return first && second && combined; }
};
A2RecursionCheck a2_higher_recursion_check(PartitionTable& table, int b1, int b2);
// Sum of the two higher recursions equals (s-|beta|) times the basic one,
// as a polynomial identity in lambda_1, lambda_2, beta_1, beta_2.
bool a2_sum_identity();

}  // namespace whittaker
