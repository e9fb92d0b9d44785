#include <doctest.h>

#include "whittaker/cartan.hpp"
#include "whittaker/errors.hpp"
#include "whittaker/path_model.hpp"

using namespace whittaker;

namespace {

const char* const kTypes[] = {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C4",
                              "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("rank-2 Cartan data") {
  const auto a2 = build_cartan(LieType::parse("A2"));
  CHECK(a2.cartan == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(a2.d == std::vector<int>{1, 1});
  CHECK(build_cartan(LieType::parse("B2")).d == std::vector<int>{2, 1});
  CHECK(build_cartan(LieType::parse("C2")).d == std::vector<int>{1, 2});
  CHECK(build_cartan(LieType::parse("G2")).d == std::vector<int>{1, 3});
  const auto a1 = build_cartan(LieType::parse("A1~"));
  CHECK(a1.dual_coxeter == 2);
  CHECK(a1.comarks == std::vector<int>{1, 1});
}

TEST_CASE("standard counts and dual Coxeter numbers") {
  struct Row {
    const char* type;
    std::size_t positive;
    int hv;
  };
  for (const Row& r : {Row{"A3", 6, 4}, Row{"B3", 9, 5}, Row{"C3", 9, 4}, Row{"D4", 12, 6}, Row{"E6", 36, 12},
                       Row{"E7", 63, 18}, Row{"E8", 120, 30}, Row{"F4", 24, 9}, Row{"G2", 6, 4}}) {
    CAPTURE(r.type);
    const auto cd = build_cartan(LieType::parse(std::string(r.type) + "~"));
    CHECK(cd.positive_roots.size() == r.positive);
    CHECK(cd.dual_coxeter == r.hv);
  }
}

TEST_CASE("inner products") {
  const auto a2 = build_cartan(LieType::parse("A2"));
  CHECK(inner_product(a2, {1, 0}, {1, 0}) == 2);
  CHECK(inner_product(a2, {1, 0}, {0, 1}) == -1);
  CHECK(inner_product(build_cartan(LieType::parse("B2")), {1, 0}, {1, 0}) == 4);
  CHECK_THROWS_AS(inner_product(a2, {1, 0}, {1, 0, 0}), DimensionMismatch);
}

TEST_CASE("symmetrizability, symmetry and the null root") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    const auto cd = build_cartan(LieType::parse(std::string(t) + "~"));
    const int r = cd.rank;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) CHECK(cd.cartan[i][j] * cd.d[j] == cd.cartan[j][i] * cd.d[i]);
    for (int i = 0; i <= r; ++i) CHECK(inner_product(cd, cd.delta, unit(r + 1, i)) == 0);
    CHECK(inner_product(cd, cd.delta, cd.delta) == 0);
    // theta is the unique root of maximal height
    for (const auto& a : cd.positive_roots) CHECK(height(a) <= height(cd.theta));
  }
  const auto g2 = build_cartan(LieType::parse("G2"));
  for (const auto& b : lattice_points_upto(2, 4))
    for (const auto& c : lattice_points_upto(2, 4)) CHECK(inner_product(g2, b, c) == inner_product(g2, c, b));
}

TEST_CASE("weight pairings") {
  const auto w = WeightParam::symbolic(2);
  CHECK(weight_root_pairing(build_cartan(LieType::parse("A2")), w, {1, 0}) == RatFunc(MultiPoly::var(0)));
  CHECK(weight_root_pairing(build_cartan(LieType::parse("B2")), w, {1, 0}) == RatFunc(MultiPoly(2) * MultiPoly::var(0)));
  CHECK(weight_root_pairing(build_cartan(LieType::parse("G2")), w, {0, 1}) == RatFunc(MultiPoly(3) * MultiPoly::var(1)));
}

TEST_CASE("affine decomposition") {
  const auto a1 = build_cartan(LieType::parse("A1~"));
  CHECK(affine_decompose(a1, {1, 1}) == std::pair<int, RootVec>{1, {0}});
  CHECK(affine_decompose(a1, {1, 2}) == std::pair<int, RootVec>{1, {1}});
  const auto a2 = build_cartan(LieType::parse("A2~"));
  CHECK(affine_decompose(a2, {2, 3, 2}) == std::pair<int, RootVec>{2, {1, 0}});
  for (const char* t : {"A2~", "B3~", "G2~", "F4~"}) {
    const auto cd = build_cartan(LieType::parse(t));
    for (const auto& b : lattice_points_upto(cd.rank + 1, 3)) {
      const auto [b0, fin] = affine_decompose(cd, b);
      CHECK(affine_recompose(cd, b0, fin) == b);
    }
  }
}

TEST_CASE("type parsing") {
  CHECK(LieType::parse("E8").rank == 8);
  CHECK(LieType::parse("C3~").affine);
  CHECK_THROWS_AS(LieType::parse("Z2"), UnsupportedType);
  CHECK_THROWS_AS(LieType::parse("E5"), UnsupportedType);
  CHECK_THROWS_AS(LieType::parse("G3"), UnsupportedType);
}
