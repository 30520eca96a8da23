#include "swinv/lattice.hpp"

#include <utility>

namespace swinv::lattice {

Integer dot(const IntVector &x, const IntVector &y) {
  if (x.size() != y.size())
    throw DomainError("dimension mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += x[i] * y[i];
  return s;
}

IntVector multiply(const IntMatrix &q, const IntVector &x) {
  if (q.size() != x.size())
    throw DomainError("vector length " + std::to_string(x.size()) +
                      " does not match form rank " + std::to_string(q.size()));
  IntVector out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    out[i] = dot(q[i], x);
  return out;
}

Integer pairing(const IntMatrix &q, const IntVector &x, const IntVector &y) {
  return dot(x, multiply(q, y));
}

Integer square(const IntMatrix &q, const IntVector &x) {
  return pairing(q, x, x);
}

Rational pairing(const IntMatrix &q, const RatVector &x, const RatVector &y) {
  if (x.size() != q.size() || y.size() != q.size())
    throw DomainError("vector length does not match form rank " +
                      std::to_string(q.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (x[i] == 0)
      continue;
    Rational row = 0;
    for (std::size_t j = 0; j < q.size(); ++j)
      row += Rational(q[i][j]) * y[j];
    s += x[i] * row;
  }
  return s;
}

bool is_square(const IntMatrix &q) {
  for (const auto &row : q)
    if (row.size() != q.size())
      return false;
  return true;
}

bool is_symmetric(const IntMatrix &q) {
  if (!is_square(q))
    return false;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (q[i][j] != q[j][i])
        return false;
  return true;
}

Congruence diagonalize(const IntMatrix &q) {
  if (!is_symmetric(q))
    throw DomainError("diagonalize: matrix is not symmetric");
  const std::size_t n = q.size();
  RatMatrix a(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = q[i][j];

  Congruence out;
  out.determinant = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (a[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // Zero diagonal on the trailing block; look for any off-diagonal entry.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        out.inertia.zero += n - k;
        out.determinant = 0;
        return out;
      }
      // e_pi <- e_pi + e_pj: row and column operation.
      for (std::size_t j = k; j < n; ++j)
        a[pi][j] += a[pj][j];
      for (std::size_t i = k; i < n; ++i)
        a[i][pi] += a[i][pj];
      pivot = pi;
    }
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      for (auto &row : a)
        std::swap(row[pivot], row[k]);
    }
    const Rational d = a[k][k];
    out.determinant *= d;
    if (d > 0)
      ++out.inertia.positive;
    else
      ++out.inertia.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0)
        continue;
      const Rational f = a[i][k] / d;
      for (std::size_t j = k; j < n; ++j)
        a[i][j] -= f * a[k][j];
    }
    // Keep the trailing block symmetric.
    for (std::size_t i = k + 1; i < n; ++i)
      a[k][i] = 0;
  }
  return out;
}

std::optional<IntVector> characteristic_mod2(const IntMatrix &q) {
  if (!is_symmetric(q))
    return std::nullopt;
  // Solve (Q mod 2) w = diag(Q) mod 2 over F_2.
  const std::size_t n = q.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = is_even(q[i][j]) ? 0 : 1;
    m[i][n] = is_even(q[i][i]) ? 0 : 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0)
      ++piv;
    if (piv == n)
      return std::nullopt;
    std::swap(m[piv], m[col]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != col && m[i][col])
        for (std::size_t j = col; j <= n; ++j)
          m[i][j] ^= m[col][j];
  }
  IntVector w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = m[i][n];
  return w;
}

std::optional<RatVector> solve_in_span(const std::vector<IntVector> &columns,
                                       const RatVector &target) {
  const std::size_t rows = target.size();
  const std::size_t cols = columns.size();
  for (const auto &c : columns)
    if (c.size() != rows)
      throw DomainError("basis vector length does not match target length");

  RatMatrix a(rows, RatVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = columns[j][i];
    a[i][cols] = target[i];
  }

  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      throw DomainError("basis vectors are linearly dependent");
    std::swap(a[piv], a[r]);
    const Rational lead = a[r][c];
    for (auto &x : a[r])
      x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j)
        a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0)
      return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < r; ++i)
    x[pivot_col[i]] = a[i][cols];
  return x;
}

} // namespace swinv::lattice
