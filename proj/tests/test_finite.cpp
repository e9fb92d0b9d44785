#include <doctest.h>

#include "whittaker/errors.hpp"
#include "whittaker/finite_whittaker.hpp"

using namespace whittaker;

namespace {

RatFunc rf(const char* s) { return parse_ratfunc(s); }

}  // namespace

TEST_CASE("Whittaker vector terms") {
  const auto a2 = build_cartan(LieType::parse("A2"));
  const auto terms = whittaker_vector(a2, WeightParam::symbolic(2), 2);
  CHECK(terms.size() == 1 + 2 + 4);
  CHECK(terms[0].path.empty());
  CHECK(terms[0].coefficient == RatFunc(1));
  RatFunc sum11;
  for (const auto& t : terms)
    if (t.mu_degree == RootVec{1, 1}) sum11 += t.coefficient;
  CHECK(sum11 == rf("(l1+l2)/(l1*l2*(l1+l2+1))"));

  const auto g2 = build_cartan(LieType::parse("G2"));
  for (const auto& t : whittaker_vector(g2, WeightParam::symbolic(2), 2))
    if (t.path == Path{1, 0}) CHECK(t.coefficient == rf("1/(3*l2*(l1+3*l2+3))"));
}

TEST_CASE("Whittaker series agrees with the partition table") {
  const auto b2 = build_cartan(LieType::parse("B2"));
  PartitionTable t(b2, WeightParam::symbolic(2), false, 4);
  const auto series = whittaker_series(t, 3);
  CHECK(series.size() == 10);
  for (const auto& s : series) {
    CHECK(s.coefficient == t(s.beta));
    CHECK(s.exponent.size() == 2);
  }
}

TEST_CASE("Toda eigenvalues") {
  const auto w1 = WeightParam::symbolic(1);
  CHECK(RatFunc(toda_eigenvalue(build_cartan(LieType::parse("A1")), w1)) == rf("(l1+1)^2/4"));
  const auto w2 = WeightParam::symbolic(2);
  CHECK(RatFunc(toda_eigenvalue(build_cartan(LieType::parse("A2")), w2)) ==
        rf("(l1^2+l1*l2+l2^2)/3+l1+l2+1"));
  for (const char* t : {"A2", "B2", "C2", "G2", "A3", "B3", "D4"}) {
    const auto cd = build_cartan(LieType::parse(t));
    const auto w = WeightParam::symbolic(cd.rank);
    for (const auto& b : lattice_points_upto(cd.rank, 4)) CHECK(toda_eigen_identity(cd, w, b));
  }
}

TEST_CASE("A2 closed form and higher recursions") {
  const auto a2 = build_cartan(LieType::parse("A2"));
  const auto w = WeightParam::symbolic(2);
  PartitionTable t(a2, w, false, 8);
  for (int b1 = 0; b1 <= 4; ++b1)
    for (int b2 = 0; b2 <= 4; ++b2) {
      CAPTURE(b1);
      CAPTURE(b2);
      CHECK(bump_closed_form(b1, b2, w) == t({b1, b2}));
      CHECK(a2_higher_recursion_check(t, b1, b2).all());
    }
  CHECK(a2_sum_identity());
}
