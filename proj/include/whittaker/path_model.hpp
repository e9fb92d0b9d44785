#pragma once

#include <map>
#include <string>
#include <vector>

#include "whittaker/cartan.hpp"
#include "whittaker/ratfunc.hpp"

namespace whittaker {

// Step indices into the coordinate vector (affine: 0 is alpha_0).
using Path = std::vector<int>;

// v(beta) = (lambda+rho|beta) - (beta|beta)/2; beta may have negative entries.
MultiPoly vertex_weight(const CartanData& cd, const WeightParam& w, const RootVec& beta);
// (Lambda+rho_hat|beta_hat) - (beta_hat|beta_hat)/2 from the affine pairings.
MultiPoly vertex_weight_affine_direct(const CartanData& cd, const WeightParam& w, const RootVec& beta_hat);
// d_0 eps beta_0 + v(beta - beta_0 theta); throws if it disagrees with the direct form.
MultiPoly vertex_weight_affine(const CartanData& cd, const WeightParam& w, const RootVec& beta_hat);

RootVec endpoint(const Path& p, int size);
std::vector<RootVec> vertices(const Path& p, int size);  // p_0 .. p_N
// x(p) = prod_k 1/v(p_k)
RatFunc path_weight(const CartanData& cd, const WeightParam& w, const Path& p, bool affine = false);

inline constexpr int kDefaultEnumerationCap = 10;
// All orderings of the multiset of steps, lexicographic.
std::vector<Path> enumerate_paths(const RootVec& beta, int cap = kDefaultEnumerationCap);
// All beta in Q_+ of the given size with |beta| = n, graded-lex descending
// order on coordinates (first coordinate most significant).
std::vector<RootVec> lattice_points(int size, int n);
std::vector<RootVec> lattice_points_upto(int size, int max_degree);

// "f2 f1" for the path (alpha_1 then alpha_2); affine paths use f0 for alpha_0.
std::string path_word(const Path& p, bool affine);

// Memoized Z_beta; single owner.
class PartitionTable {
 public:
  PartitionTable(const CartanData& cd, WeightParam w, bool affine, int max_degree);

  const RatFunc& operator()(const RootVec& beta);
  const MultiPoly& weight(const RootVec& beta);

  const CartanData& cartan() const { return cd_; }
  const WeightParam& param() const { return w_; }
  bool affine() const { return affine_; }
  int size() const { return affine_ ? cd_.rank + 1 : cd_.rank; }
  int max_degree() const { return max_degree_; }
  // Distinct nonconstant vertex weights met so far (printing hints).
  std::vector<MultiPoly> weight_factors() const;

 private:
  const CartanData& cd_;
  WeightParam w_;
  bool affine_;
  int max_degree_;
  std::map<RootVec, RatFunc> memo_;
  std::map<RootVec, MultiPoly> weights_;
};

RatFunc partition_bruteforce(const CartanData& cd, const WeightParam& w, const RootVec& beta,
                             bool affine = false, int cap = kDefaultEnumerationCap);

// v(beta+alpha_i) - v(beta) = (lambda-beta|alpha_i) (affine: Lambda-beta_hat).
bool verify_weight_difference(const CartanData& cd, const WeightParam& w, const RootVec& beta, int i,
                              bool affine = false);
// x(p) = sum_k (lambda - p_k|alpha_i) x(p_{k,i})
bool verify_eigencondition(const CartanData& cd, const WeightParam& w, const Path& p, int i);

// p_{k,i}: insert a step i after the k-th vertex.
Path augmented_path(const Path& p, int k, int i);

}  // namespace whittaker
