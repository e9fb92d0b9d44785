#include "whittaker/path_model.hpp"

#include <algorithm>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

bool is_delta_multiple(const CartanData& cd, const RootVec& b) {
  if (!cd.type.affine || b.size() != cd.delta.size() || b[0] <= 0) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != b[0] * cd.delta[i]) return false;
  return true;
}

MultiPoly checked(const CartanData& cd, MultiPoly v, const RootVec& beta) {
  if (v.is_zero() && height(beta) != 0) {
    if (is_delta_multiple(cd, beta)) throw CriticalSingularity(beta);
    throw SingularWeight(beta);
  }
  return v;
}

// Affine analogue of (lambda|.) on the simple roots: d_i lambda_hat_i.
std::vector<MultiPoly> affine_lambda(const CartanData& cd, const WeightParam& w) {
  MultiPoly l0 = w.level(cd);
  for (int i = 1; i <= cd.rank; ++i) l0 -= w.lambda[i - 1] * MultiPoly(cd.comarks[i]);
  std::vector<MultiPoly> out{l0};
  out.insert(out.end(), w.lambda.begin(), w.lambda.end());
  return out;
}

}  // namespace

MultiPoly vertex_weight(const CartanData& cd, const WeightParam& w, const RootVec& beta) {
  const Rational half_sq = inner_product(cd, beta, beta) / 2;
  return rho_pairing(cd, w, beta) - MultiPoly(half_sq);
}

MultiPoly vertex_weight_affine_direct(const CartanData& cd, const WeightParam& w, const RootVec& beta_hat) {
  if (!cd.type.affine || beta_hat.size() != static_cast<std::size_t>(cd.rank + 1))
    throw DimensionMismatch("vertex_weight_affine: expected an affine root vector");
  const auto lam = affine_lambda(cd, w);
  MultiPoly s;
  for (int i = 0; i <= cd.rank; ++i)
    if (beta_hat[i]) s += (lam[i] + MultiPoly(1)) * MultiPoly(cd.affine_d[i] * beta_hat[i]);
  return s - MultiPoly(Rational(inner_product(cd, beta_hat, beta_hat) / 2));
}

MultiPoly vertex_weight_affine(const CartanData& cd, const WeightParam& w, const RootVec& beta_hat) {
  const auto [b0, fin] = affine_decompose(cd, beta_hat);
  MultiPoly v = w.eps * MultiPoly(cd.d0() * b0) + vertex_weight(cd, w, fin);
  if (v != vertex_weight_affine_direct(cd, w, beta_hat))
    throw Error("affine vertex weight: decomposition disagrees with the direct form");
  return v;
}

RootVec endpoint(const Path& p, int size) {
  RootVec b(size, 0);
  for (int i : p) b.at(i) += 1;
  return b;
}

std::vector<RootVec> vertices(const Path& p, int size) {
  std::vector<RootVec> v{RootVec(size, 0)};
  for (int i : p) {
    RootVec next = v.back();
    next.at(i) += 1;
    v.push_back(std::move(next));
  }
  return v;
}

RatFunc path_weight(const CartanData& cd, const WeightParam& w, const Path& p, bool affine) {
  const int size = affine ? cd.rank + 1 : cd.rank;
  MultiPoly den(1);
  RootVec b(size, 0);
  for (int i : p) {
    b.at(i) += 1;
    den *= checked(cd, affine ? vertex_weight_affine(cd, w, b) : vertex_weight(cd, w, b), b);
  }
  return RatFunc(MultiPoly(1), den);
}

std::vector<Path> enumerate_paths(const RootVec& beta, int cap) {
  if (height(beta) > cap) throw CapExceeded("path enumeration beyond total degree " + std::to_string(cap));
  Path p;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] < 0) throw Error("enumerate_paths: negative coordinate");
    p.insert(p.end(), beta[i], static_cast<int>(i));
  }
  std::vector<Path> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<RootVec> lattice_points(int size, int n) {
  std::vector<RootVec> out;
  RootVec cur(size, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == size - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  if (size > 0) rec(rec, 0, n);
  return out;
}

std::vector<RootVec> lattice_points_upto(int size, int max_degree) {
  std::vector<RootVec> out;
  for (int n = 0; n <= max_degree; ++n) {
    auto pts = lattice_points(size, n);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

std::string path_word(const Path& p, bool affine) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += "f" + std::to_string(affine ? *it : *it + 1);
  }
  return s;
}

PartitionTable::PartitionTable(const CartanData& cd, WeightParam w, bool affine, int max_degree)
    : cd_(cd), w_(std::move(w)), affine_(affine), max_degree_(max_degree) {
  if (affine && !cd.type.affine) throw ConfigError("affine partition table needs affine Cartan data");
  if (w_.lambda.size() != static_cast<std::size_t>(cd.rank)) throw DimensionMismatch("weight rank mismatch");
}

const MultiPoly& PartitionTable::weight(const RootVec& beta) {
  auto it = weights_.find(beta);
  if (it != weights_.end()) return it->second;
  MultiPoly v = affine_ ? vertex_weight_affine(cd_, w_, beta) : vertex_weight(cd_, w_, beta);
  return weights_.emplace(beta, std::move(v)).first->second;
}

const RatFunc& PartitionTable::operator()(const RootVec& beta) {
  auto it = memo_.find(beta);
  if (it != memo_.end()) return it->second;
  if (beta.size() != static_cast<std::size_t>(size())) throw DimensionMismatch("partition_dp: dimension mismatch");
  if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; })) {
    static const RatFunc zero;
    return zero;
  }
  if (height(beta) > max_degree_) throw CapExceeded("beta beyond the table's max degree");
  if (height(beta) == 0) return memo_.emplace(beta, RatFunc(MultiPoly(1))).first->second;
  RatFunc sum;
  for (int i = 0; i < size(); ++i) {
    if (!beta[i]) continue;
    RootVec prev = beta;
    prev[i] -= 1;
    sum += (*this)(prev);
  }
  const MultiPoly v = checked(cd_, weight(beta), beta);
  RatFunc z = sum / RatFunc(v);
  return memo_.emplace(beta, std::move(z)).first->second;
}

std::vector<MultiPoly> PartitionTable::weight_factors() const {
  std::vector<MultiPoly> out;
  for (const auto& [b, v] : weights_) {
    if (v.is_constant()) continue;
    MultiPoly p = v;
    make_primitive(p);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

RatFunc partition_bruteforce(const CartanData& cd, const WeightParam& w, const RootVec& beta, bool affine,
                             int cap) {
  RatFunc sum;
  for (const auto& p : enumerate_paths(beta, cap)) sum += path_weight(cd, w, p, affine);
  if (height(beta) == 0) return RatFunc(MultiPoly(1));
  return sum;
}

bool verify_weight_difference(const CartanData& cd, const WeightParam& w, const RootVec& beta, int i,
                              bool affine) {
  RootVec next = beta;
  next.at(i) += 1;
  const RootVec ai = unit(static_cast<int>(beta.size()), i);
  if (!affine) {
    const MultiPoly lhs = vertex_weight(cd, w, next) - vertex_weight(cd, w, beta);
    const MultiPoly rhs = w.lambda[i] * MultiPoly(cd.d[i]) - MultiPoly(inner_product(cd, beta, ai));
    return lhs == rhs;
  }
  const auto lam = affine_lambda(cd, w);
  const MultiPoly lhs = vertex_weight_affine(cd, w, next) - vertex_weight_affine(cd, w, beta);
  const MultiPoly rhs = lam[i] * MultiPoly(cd.affine_d[i]) - MultiPoly(inner_product(cd, beta, ai));
  return lhs == rhs;
}

Path augmented_path(const Path& p, int k, int i) {
  Path q(p.begin(), p.begin() + k);
  q.push_back(i);
  q.insert(q.end(), p.begin() + k, p.end());
  return q;
}

bool verify_eigencondition(const CartanData& cd, const WeightParam& w, const Path& p, int i) {
  const auto verts = vertices(p, cd.rank);
  const RootVec ai = unit(cd.rank, i);
  RatFunc rhs;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    const MultiPoly pairing = w.lambda[i] * MultiPoly(cd.d[i]) - MultiPoly(inner_product(cd, verts[k], ai));
    rhs += RatFunc(pairing) * path_weight(cd, w, augmented_path(p, static_cast<int>(k), i));
  }
  return rhs == path_weight(cd, w, p);
}

}  // namespace whittaker
