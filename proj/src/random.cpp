#include "whittaker/random.hpp"

namespace whittaker {

MultiPoly random_poly(std::mt19937& rng, int vars, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_deg), nterms(1, max_terms);
  std::vector<MultiPoly::Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    int budget = deg(rng);
    for (int v = 0; v < vars && budget > 0; ++v) {
      std::uniform_int_distribution<int> e(0, budget);
      const int x = e(rng);
      if (x) m = m * Monomial::var(v == vars - 1 && vars == 3 ? kEpsSlot : v, x);
      budget -= x;
    }
    terms.push_back({m, ratio(coeff(rng), 1 + static_cast<int>(rng() % 3))});
  }
  return MultiPoly::from_terms(std::move(terms));
}

RatFunc random_ratfunc(std::mt19937& rng) {
  MultiPoly d;
  while (d.is_zero()) d = random_poly(rng, 3, 2, 3);
  return RatFunc(random_poly(rng, 3, 2, 3), d);
}

QRatFunc random_qratfunc(std::mt19937& rng) {
  auto lp = [&] {
    std::vector<QLaurent::Term> t;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k)
      t.push_back({ratio(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 2)), Rational(static_cast<int>(rng() % 7) - 3)});
    return QLaurent::from_terms(std::move(t));
  };
  QLaurent d;
  while (d.is_zero()) d = lp();
  return QRatFunc(lp(), d);
}

}  // namespace whittaker
