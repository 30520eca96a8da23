#include "doctest.h"

#include "oracles.hpp"
#include "swinv/cone.hpp"

#include <random>

using namespace swinv;

TEST_CASE("cone membership basics") {
  const std::vector<RatVector> quadrant{{1, 0}, {0, 1}};
  CHECK(cone::contains(quadrant, {2, 3}));
  CHECK_FALSE(cone::contains(quadrant, {-1, 3}));
  CHECK(cone::contains(quadrant, {0, 0}));
  CHECK(cone::contains({}, {0, 0}));
  CHECK_FALSE(cone::contains({}, {1, 0}));
  CHECK(cone::contains({{1}}, {Rational(5, 2)}));
  CHECK_FALSE(cone::contains({{1}}, {-1}));

  const std::vector<RatVector> g{{1, 1}, {1, -1}};
  const auto lambda = cone::combination(g, {3, 1});
  REQUIRE(lambda);
  CHECK((*lambda)[0] == 2);
  CHECK((*lambda)[1] == 1);
}

TEST_CASE("cone membership agrees with subset enumeration") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(1, 3), count(0, 5), entry(-3, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const int d = dim(rng), n = count(rng);
    std::vector<RatVector> gens(n, RatVector(d));
    for (auto &g : gens)
      for (auto &x : g)
        x = entry(rng);
    RatVector t(d);
    for (auto &x : t)
      x = entry(rng);
    const bool got = cone::contains(gens, t);
    CHECK(got == oracle::cone_contains(gens, t));
    if (got) {
      const auto lambda = cone::combination(gens, t);
      REQUIRE(lambda);
      for (int i = 0; i < d; ++i) {
        Rational s = 0;
        for (int j = 0; j < n; ++j) {
          CHECK((*lambda)[j] >= 0);
          s += (*lambda)[j] * gens[j][i];
        }
        CHECK(s == t[i]);
      }
    }
  }
}
