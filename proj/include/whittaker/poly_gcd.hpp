#pragma once

#include <optional>

#include "whittaker/multipoly.hpp"

namespace whittaker {

// Rescale p in place to an integer primitive polynomial with positive
// leading coefficient; returns c with old p = c * new p. Zero stays zero (c=0).
Rational make_primitive(MultiPoly& p);

// Primitive integer gcd with positive leading coefficient; gcd(0,0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// a / b when b divides a in Q[x]; nullopt otherwise.
std::optional<MultiPoly> divide_if_exact(const MultiPoly& a, const MultiPoly& b);
// Throws Error when the division is not exact.
MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);

namespace detail {
// Recursive primitive PRS gcd; exposed for cross-checking the fast path.
MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b);
// Heuristic gcd only; nullopt when it gives up.
std::optional<MultiPoly> gcd_heuristic(const MultiPoly& a, const MultiPoly& b);
}  // namespace detail

}  // namespace whittaker
