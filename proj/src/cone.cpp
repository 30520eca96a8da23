#include "swinv/cone.hpp"

#include <optional>

namespace swinv::cone {

std::optional<RatVector> combination(const std::vector<RatVector> &generators,
                                     const RatVector &target) {
  const std::size_t rows = target.size();
  const std::size_t n = generators.size();
  for (const auto &g : generators)
    if (g.size() != rows)
      throw DomainError("cone generator has length " + std::to_string(g.size()) +
                        ", expected " + std::to_string(rows));

  // Columns: n structural variables, then one artificial per row, then rhs.
  const std::size_t width = n + rows + 1;
  RatMatrix t(rows, RatVector(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = flip ? Rational(-generators[j][i]) : generators[j][i];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? Rational(-target[i]) : target[i];
    basis[i] = n + i;
  }
  auto cost = [&](std::size_t j) { return j >= n ? Rational(1) : Rational(0); };

  while (true) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      Rational d = cost(j);
      for (std::size_t i = 0; i < rows; ++i)
        if (t[i][j] != 0)
          d -= cost(basis[i]) * t[i][j];
      if (d < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width)
      break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0)
        continue;
      const Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // The phase-one objective is bounded below by zero.
    if (leave == rows)
      throw std::logic_error("phase-one simplex reported unbounded");

    const Rational pivot = t[leave][enter];
    for (auto &x : t[leave])
      x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0)
        continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] >= n && t[i][width - 1] != 0)
      return std::nullopt;
  RatVector lambda(n);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < n)
      lambda[basis[i]] = t[i][width - 1];
  return lambda;
}

bool contains(const std::vector<RatVector> &generators,
              const RatVector &target) {
  return combination(generators, target).has_value();
}

} // namespace swinv::cone
