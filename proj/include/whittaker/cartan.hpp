#pragma once

#include <string>
#include <utility>
#include <vector>

#include "whittaker/multipoly.hpp"
#include "whittaker/ratfunc.hpp"

namespace whittaker {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family = Family::A;
  int rank = 1;
  bool affine = false;

  std::string name() const;  // "A2", "B2~"
  // "A2", "G2", "A1~"; trailing 'q' is not accepted here.
  static LieType parse(const std::string& text);
  friend bool operator==(const LieType&, const LieType&) = default;
};

// Coordinates in the simple-root basis; affine vectors carry index 0 first.
using RootVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

struct CartanData {
  LieType type;
  int rank = 0;          // finite rank r
  IntMatrix cartan;      // C_ij = (alpha_i | alpha_j^vee), r x r
  std::vector<int> d;    // (alpha_i|alpha_i) = 2 d_i
  IntMatrix gram;        // (alpha_i|alpha_j) = d_j C_ij
  std::vector<std::vector<Rational>> weight_gram;  // (omega_i|omega_l)
  std::vector<RootVec> positive_roots;             // ascending height
  RootVec theta;                                   // highest root

  // Affine data (index 0 first); empty for finite types.
  IntMatrix affine_cartan;
  std::vector<int> affine_d;
  IntMatrix affine_gram;
  std::vector<int> marks;     // a_0 = 1, a_i = theta_i
  std::vector<int> comarks;   // a_i d_i / d_0
  int dual_coxeter = 0;       // sum of comarks
  RootVec delta;              // (1, a_1..a_r)

  int d0() const { return affine_d.empty() ? 1 : affine_d[0]; }
};

CartanData build_cartan(const LieType& type);

// (beta|gamma) using the finite or the affine form according to the length.
Rational inner_product(const CartanData& cd, const RootVec& beta, const RootVec& gamma);

// beta_hat = beta_0 delta + (beta - beta_0 theta)
std::pair<int, RootVec> affine_decompose(const CartanData& cd, const RootVec& beta_hat);
RootVec affine_recompose(const CartanData& cd, int beta0, const RootVec& finite_part);

// Highest weight in fundamental-weight coordinates; eps = k + h^vee.
struct WeightParam {
  std::vector<MultiPoly> lambda;
  MultiPoly eps;
  bool specialized = false;  // every entry is a constant

  static WeightParam symbolic(int rank);
  static WeightParam special(const std::vector<Rational>& lambda);
  static WeightParam special(const std::vector<Rational>& lambda, const Rational& eps);
  MultiPoly level(const CartanData& cd) const;  // k = eps - h^vee
};

// (lambda|beta) = sum_i lambda_i d_i beta_i
RatFunc weight_root_pairing(const CartanData& cd, const WeightParam& w, const RootVec& beta);
// (lambda+rho|beta) = sum_i (lambda_i+1) d_i beta_i
MultiPoly rho_pairing(const CartanData& cd, const WeightParam& w, const RootVec& beta);
// (mu|nu) for weights given in fundamental-weight coordinates.
MultiPoly weight_inner_product(const CartanData& cd, const std::vector<MultiPoly>& mu,
                               const std::vector<MultiPoly>& nu);
// Fundamental-weight coordinates of a root lattice vector: (beta|alpha_i^vee).
std::vector<int> root_to_weight(const CartanData& cd, const RootVec& beta);

int height(const RootVec& beta);
RootVec unit(int size, int i);

}  // namespace whittaker
