#pragma once

#include "swinv/kahler.hpp"

namespace fixture {

inline swinv::ManifoldTopology cp2() {
  swinv::ManifoldTopology m;
  m.name = "CP2";
  m.bplus = 1;
  m.euler = 3;
  m.signature = 1;
  m.form = {{1}};
  m.w2 = {1};
  m.triple_cup = swinv::zero_triple_cup(0, 1);
  return m;
}

// S^2 x S^2, or T^2 x S^2 when b1 = 2 (alpha_1 u alpha_2 u y = 1).
inline swinv::ManifoldTopology hyperbolic(long b1 = 0, long cup = 1) {
  swinv::ManifoldTopology m;
  m.name = "H";
  m.b1 = b1;
  m.bplus = 1;
  m.bminus = 1;
  m.euler = 4 - 2 * b1;
  m.signature = 0;
  m.form = {{0, 1}, {1, 0}};
  m.w2 = {0, 0};
  m.triple_cup = swinv::zero_triple_cup(b1, 2);
  if (b1 >= 2) {
    m.triple_cup[0][1][1] = cup;
    m.triple_cup[1][0][1] = -cup;
  }
  return m;
}

inline swinv::KahlerFacts cp2_kahler() {
  const auto m = cp2();
  return swinv::KahlerFacts{{-3}, {{1}}, {{1}}, true,
                            swinv::PeriodRay(m, {1})};
}

} // namespace fixture
