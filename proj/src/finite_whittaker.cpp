#include "whittaker/finite_whittaker.hpp"

#include "whittaker/errors.hpp"

namespace whittaker {

std::vector<WhittakerVectorTerm> whittaker_vector(const CartanData& cd, const WeightParam& w, int max_degree,
                                                  int cap) {
  if (max_degree > cap) throw CapExceeded("whittaker_vector: degree beyond the enumeration cap");
  std::vector<WhittakerVectorTerm> out;
  for (const auto& beta : lattice_points_upto(cd.rank, max_degree))
    for (const auto& p : enumerate_paths(beta, cap)) out.push_back({p, path_weight(cd, w, p), beta});
  return out;
}

std::vector<WhittakerSeriesTerm> whittaker_series(PartitionTable& table, int max_degree) {
  const CartanData& cd = table.cartan();
  const WeightParam& w = table.param();
  std::vector<WhittakerSeriesTerm> out;
  for (const auto& beta : lattice_points_upto(cd.rank, max_degree)) {
    WhittakerSeriesTerm t;
    t.beta = beta;
    t.nu_degree = beta;
    const auto shift = root_to_weight(cd, beta);
    for (int i = 0; i < cd.rank; ++i) {
      t.exponent.push_back(w.lambda[i] - MultiPoly(shift[i]));
      t.modified_exponent.push_back(t.exponent.back() + MultiPoly(1));
    }
    t.coefficient = table(beta);
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

std::vector<MultiPoly> lambda_rho(const WeightParam& w) {
  std::vector<MultiPoly> v;
  for (const auto& l : w.lambda) v.push_back(l + MultiPoly(1));
  return v;
}

}  // namespace

MultiPoly toda_eigenvalue(const CartanData& cd, const WeightParam& w) {
  const auto lr = lambda_rho(w);
  return weight_inner_product(cd, lr, lr) * MultiPoly(Rational(1, 2));
}

bool toda_eigen_identity(const CartanData& cd, const WeightParam& w, const RootVec& beta) {
  const auto lr = lambda_rho(w);
  const auto bw = root_to_weight(cd, beta);
  std::vector<MultiPoly> shifted = lr;
  for (int i = 0; i < cd.rank; ++i) shifted[i] -= MultiPoly(bw[i]);
  const MultiPoly lhs =
      (weight_inner_product(cd, lr, lr) - weight_inner_product(cd, shifted, shifted)) * MultiPoly(Rational(1, 2));
  return lhs == vertex_weight(cd, w, beta);
}

RatFunc bump_closed_form(int b1, int b2, const WeightParam& w) {
  if (w.lambda.size() != 2) throw DimensionMismatch("bump_closed_form is an A2 formula");
  const MultiPoly& l1 = w.lambda[0];
  const MultiPoly& l2 = w.lambda[1];
  const MultiPoly s = l1 + l2 + MultiPoly(2);
  MultiPoly num(1), den(1);
  for (int j = 1; j <= b1 + b2; ++j) num *= s - MultiPoly(j);
  for (int j = 1; j <= b1; ++j) den *= MultiPoly(j) * (l1 + MultiPoly(1 - j)) * (s - MultiPoly(j));
  for (int j = 1; j <= b2; ++j) den *= MultiPoly(j) * (l2 + MultiPoly(1 - j)) * (s - MultiPoly(j));
  return RatFunc(num, den);
}

A2RecursionCheck a2_higher_recursion_check(PartitionTable& table, int b1, int b2) {
  if (table.cartan().type.family != Family::A || table.cartan().rank != 2 || table.affine())
    throw ConfigError("A2 higher recursions need an A2 table");
  const MultiPoly& l1 = table.param().lambda[0];
  const MultiPoly& l2 = table.param().lambda[1];
  const MultiPoly s = l1 + l2 + MultiPoly(2);
  const MultiPoly m1 = l1 + MultiPoly(1 - b1);
  const MultiPoly m2 = l2 + MultiPoly(1 - b2);
  const MultiPoly rest = s - MultiPoly(b1 + b2);
  const RatFunc z = table({b1, b2});
  const RatFunc z1 = table({b1 - 1, b2});
  const RatFunc z2 = table({b1, b2 - 1});
  A2RecursionCheck r;
  r.first = RatFunc(MultiPoly(b1) * m1 * (s - MultiPoly(b1))) * z == RatFunc(rest) * z1;
  r.second = RatFunc(MultiPoly(b2) * m2 * (s - MultiPoly(b2))) * z == RatFunc(rest) * z2;
  // m2 * first - m1 * second, divided by (s - |beta|)
  const RatFunc lhs = RatFunc(MultiPoly(b1 - b2) * m1 * m2) * z;
  r.combined = lhs == RatFunc(m2) * z1 - RatFunc(m1) * z2;
  r.combined_as_printed = lhs == RatFunc(m1) * z2 - RatFunc(m2) * z1;
  return r;
}

bool a2_sum_identity() {
  // Slots 0,1: lambda; slots 2,3: beta as free variables.
  const MultiPoly l1 = MultiPoly::var(0), l2 = MultiPoly::var(1);
  const MultiPoly b1 = MultiPoly::var(2), b2 = MultiPoly::var(3);
  const MultiPoly one(1);
  const MultiPoly s = l1 + l2 + MultiPoly(2);
  const MultiPoly lhs = b1 * (l1 + one - b1) * (s - b1) + b2 * (l2 + one - b2) * (s - b2);
  const MultiPoly v = b1 * (l1 + one - b1) + b2 * (l2 + one - b2) + b1 * b2;
  return lhs == (s - b1 - b2) * v;
}

}  // namespace whittaker
