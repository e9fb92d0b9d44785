#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "whittaker/fraction.hpp"
#include "whittaker/multipoly.hpp"
#include "whittaker/poly_gcd.hpp"

namespace whittaker {

// Integer coefficients, coprime contents, positive leading denominator coefficient.
void canonicalize_units(MultiPoly& num, MultiPoly& den);

using RatFunc = Fraction<MultiPoly>;

inline RatFunc rf_var(int slot) { return RatFunc(MultiPoly::var(slot)); }

Rational evaluate(const RatFunc& f, const std::map<int, Rational>& point);  // throws DivisionByZero
RatFunc substitute(const RatFunc& f, const std::map<int, Rational>& point);
bool is_constant(const RatFunc& f);
Rational constant_value(const RatFunc& f);

// Human-readable form with denominators (and numerators) split into the
// given factors where they divide, e.g. "(l1+l2)/(l1*l2*(l1+l2+1))".
std::string to_string(const RatFunc& f, const std::vector<MultiPoly>& factor_hints = {});
std::string to_string(const MultiPoly& p, const std::vector<MultiPoly>& factor_hints);

// Inverse of to_string: + - * / ^ (integer exponents), parentheses, rationals,
// variables l1..l15 and eps.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace whittaker
