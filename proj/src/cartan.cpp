#include "whittaker/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

const char kFamilies[] = "ABCDEFG";

bool admissible(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B: return r >= 2;
    case Family::C: return r >= 2;
    case Family::D: return r >= 4;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

void link(IntMatrix& b, int i, int j, int v) {
  b[i][j] = v;
  b[j][i] = v;
}

// Gram matrix of the simple roots, scaled so the shortest roots have square length 2.
IntMatrix finite_gram(Family f, int r) {
  IntMatrix b(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) b[i][i] = 2;
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(b, i, i + 1, -1);
      break;
    case Family::B:  // alpha_r short
      for (int i = 0; i < r; ++i) b[i][i] = i + 1 < r ? 4 : 2;
      for (int i = 0; i + 1 < r; ++i) link(b, i, i + 1, -2);
      break;
    case Family::C:  // alpha_r long
      b[r - 1][r - 1] = 4;
      for (int i = 0; i + 2 < r; ++i) link(b, i, i + 1, -1);
      link(b, r - 2, r - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) link(b, i, i + 1, -1);
      link(b, r - 3, r - 1, -1);
      break;
    case Family::E:  // chain 1-3-4-5-..., node 2 on node 4
      link(b, 0, 2, -1);
      link(b, 1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) link(b, i, i + 1, -1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      b[0][0] = b[1][1] = 4;
      link(b, 0, 1, -2);
      link(b, 1, 2, -2);
      link(b, 2, 3, -1);
      break;
    case Family::G:  // alpha_2 long, d = (1,3)
      b[1][1] = 6;
      link(b, 0, 1, -3);
      break;
  }
  return b;
}

IntMatrix cartan_from_gram(const IntMatrix& b) {
  const std::size_t n = b.size();
  IntMatrix c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = 2 * b[i][j] / b[j][j];
  return c;
}

std::vector<std::vector<Rational>> inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
std::vector<RootVec> positive_roots(const IntMatrix& c) {
  const int r = static_cast<int>(c.size());
  std::set<RootVec> seen;
  std::vector<RootVec> roots;
  for (int i = 0; i < r; ++i) {
    roots.push_back(unit(r, i));
    seen.insert(roots.back());
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const RootVec beta = roots[k];
    for (int i = 0; i < r; ++i) {
      int p = 0;
      RootVec down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < r; ++j) pairing += beta[j] * c[j][i];
      if (p - pairing > 0) {
        RootVec up = beta;
        up[i] += 1;
        if (seen.insert(up).second) roots.push_back(up);
      }
    }
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [](const RootVec& a, const RootVec& b) { return height(a) < height(b); });
  return roots;
}

}  // namespace

std::string LieType::name() const {
  return std::string(1, kFamilies[static_cast<int>(family)]) + std::to_string(rank) + (affine ? "~" : "");
}

LieType LieType::parse(const std::string& text) {
  std::string s = text;
  LieType t;
  if (!s.empty() && s.back() == '~') {
    t.affine = true;
    s.pop_back();
  }
  if (s.size() < 2) throw UnsupportedType("unknown Lie type '" + text + "'");
  const char* pos = std::find(kFamilies, kFamilies + 7, static_cast<char>(std::toupper(s[0])));
  if (pos == kFamilies + 7) throw UnsupportedType("unknown Lie family in '" + text + "'");
  t.family = static_cast<Family>(pos - kFamilies);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw UnsupportedType("bad rank in '" + text + "'");
  t.rank = std::stoi(s.substr(1));
  if (!admissible(t.family, t.rank)) throw UnsupportedType("inadmissible rank in '" + text + "'");
  return t;
}

CartanData build_cartan(const LieType& type) {
  if (!admissible(type.family, type.rank)) throw UnsupportedType("unsupported type " + type.name());
  CartanData cd;
  cd.type = type;
  const int r = type.rank;
  cd.rank = r;
  cd.gram = finite_gram(type.family, r);
  cd.cartan = cartan_from_gram(cd.gram);
  for (int i = 0; i < r; ++i) cd.d.push_back(cd.gram[i][i] / 2);
  const auto inv = inverse(cd.cartan);
  cd.weight_gram.assign(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < r; ++l) cd.weight_gram[i][l] = inv[i][l] * cd.d[l];
  cd.positive_roots = positive_roots(cd.cartan);
  cd.theta = cd.positive_roots.back();
  if (!type.affine) return cd;

  int theta_sq = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) theta_sq += cd.theta[i] * cd.theta[j] * cd.gram[i][j];
  const int d0 = theta_sq / 2;
  cd.affine_gram.assign(r + 1, std::vector<int>(r + 1, 0));
  cd.affine_gram[0][0] = theta_sq;
  for (int j = 0; j < r; ++j) {
    int th = 0;
    for (int i = 0; i < r; ++i) th += cd.theta[i] * cd.gram[i][j];
    cd.affine_gram[0][j + 1] = cd.affine_gram[j + 1][0] = -th;
    for (int i = 0; i < r; ++i) cd.affine_gram[i + 1][j + 1] = cd.gram[i][j];
  }
  cd.affine_cartan = cartan_from_gram(cd.affine_gram);
  cd.affine_d.push_back(d0);
  cd.affine_d.insert(cd.affine_d.end(), cd.d.begin(), cd.d.end());
  cd.marks.push_back(1);
  cd.marks.insert(cd.marks.end(), cd.theta.begin(), cd.theta.end());
  cd.delta = cd.marks;
  for (int i = 0; i <= r; ++i) {
    const int num = cd.marks[i] * cd.affine_d[i];
    if (num % d0) throw Error("non-integral comark");
    cd.comarks.push_back(num / d0);
  }
  cd.dual_coxeter = std::accumulate(cd.comarks.begin(), cd.comarks.end(), 0);
  return cd;
}

Rational inner_product(const CartanData& cd, const RootVec& beta, const RootVec& gamma) {
  const IntMatrix* g = nullptr;
  if (beta.size() == static_cast<std::size_t>(cd.rank) && gamma.size() == beta.size()) {
    g = &cd.gram;
  } else if (cd.type.affine && beta.size() == static_cast<std::size_t>(cd.rank + 1) &&
             gamma.size() == beta.size()) {
    g = &cd.affine_gram;
  } else {
    throw DimensionMismatch("inner_product: coordinate length does not match the Cartan data");
  }
  long s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < gamma.size(); ++j) s += static_cast<long>(beta[i]) * gamma[j] * (*g)[i][j];
  return Rational(s);
}

std::pair<int, RootVec> affine_decompose(const CartanData& cd, const RootVec& beta_hat) {
  if (!cd.type.affine || beta_hat.size() != static_cast<std::size_t>(cd.rank + 1))
    throw DimensionMismatch("affine_decompose: expected an affine root vector");
  const int b0 = beta_hat[0];
  RootVec fin(cd.rank);
  for (int i = 0; i < cd.rank; ++i) fin[i] = beta_hat[i + 1] - b0 * cd.theta[i];
  return {b0, fin};
}

RootVec affine_recompose(const CartanData& cd, int beta0, const RootVec& finite_part) {
  RootVec b(cd.rank + 1);
  b[0] = beta0;
  for (int i = 0; i < cd.rank; ++i) b[i + 1] = finite_part[i] + beta0 * cd.theta[i];
  return b;
}

WeightParam WeightParam::symbolic(int rank) {
  WeightParam w;
  for (int i = 0; i < rank; ++i) w.lambda.push_back(MultiPoly::var(i));
  w.eps = MultiPoly::var(kEpsSlot);
  return w;
}

WeightParam WeightParam::special(const std::vector<Rational>& lambda) {
  WeightParam w;
  for (const auto& x : lambda) w.lambda.emplace_back(x);
  w.eps = MultiPoly::var(kEpsSlot);
  w.specialized = true;
  return w;
}

WeightParam WeightParam::special(const std::vector<Rational>& lambda, const Rational& eps) {
  WeightParam w = special(lambda);
  w.eps = MultiPoly(eps);
  return w;
}

MultiPoly WeightParam::level(const CartanData& cd) const { return eps - MultiPoly(cd.dual_coxeter); }

RatFunc weight_root_pairing(const CartanData& cd, const WeightParam& w, const RootVec& beta) {
  if (beta.size() != static_cast<std::size_t>(cd.rank) || w.lambda.size() != beta.size())
    throw DimensionMismatch("weight_root_pairing: dimension mismatch");
  MultiPoly s;
  for (int i = 0; i < cd.rank; ++i)
    if (beta[i]) s += w.lambda[i] * MultiPoly(cd.d[i] * beta[i]);
  return RatFunc(s);
}

MultiPoly rho_pairing(const CartanData& cd, const WeightParam& w, const RootVec& beta) {
  if (beta.size() != static_cast<std::size_t>(cd.rank) || w.lambda.size() != beta.size())
    throw DimensionMismatch("rho_pairing: dimension mismatch");
  MultiPoly s;
  for (int i = 0; i < cd.rank; ++i)
    if (beta[i]) s += (w.lambda[i] + MultiPoly(1)) * MultiPoly(cd.d[i] * beta[i]);
  return s;
}

MultiPoly weight_inner_product(const CartanData& cd, const std::vector<MultiPoly>& mu,
                               const std::vector<MultiPoly>& nu) {
  MultiPoly s;
  for (int i = 0; i < cd.rank; ++i)
    for (int l = 0; l < cd.rank; ++l)
      if (cd.weight_gram[i][l] != 0) s += mu[i] * nu[l] * MultiPoly(cd.weight_gram[i][l]);
  return s;
}

std::vector<int> root_to_weight(const CartanData& cd, const RootVec& beta) {
  std::vector<int> w(cd.rank, 0);
  for (int i = 0; i < cd.rank; ++i)
    for (int j = 0; j < cd.rank; ++j) w[i] += beta[j] * cd.cartan[j][i];
  return w;
}

int height(const RootVec& beta) { return std::accumulate(beta.begin(), beta.end(), 0); }

RootVec unit(int size, int i) {
  RootVec v(size, 0);
  v[i] = 1;
  return v;
}

}  // namespace whittaker
