#pragma once

#include <random>

#include "whittaker/qlaurent.hpp"
#include "whittaker/ratfunc.hpp"

namespace whittaker {

// Small random elements for property checks. With vars == 3 the last
// variable is eps.
MultiPoly random_poly(std::mt19937& rng, int vars, int max_deg, int max_terms);
RatFunc random_ratfunc(std::mt19937& rng);
// Ratio of q-Laurent sums with small half-integer exponents.
QRatFunc random_qratfunc(std::mt19937& rng);

}  // namespace whittaker
