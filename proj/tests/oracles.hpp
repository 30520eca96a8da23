#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// arithmetic paths; they are deliberately naive.

#include "swinv/arith.hpp"
#include "swinv/topology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using I64Matrix = std::vector<std::vector<std::int64_t>>;
using I64Vector = std::vector<std::int64_t>;

inline std::int64_t square(const I64Matrix &q, const I64Vector &x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      s += x[i] * q[i][j] * x[j];
  return s;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  return ((a % m) + m) % m;
}

// A unimodular form built as a sum of <+1>, <-1> and hyperbolic blocks, then
// conjugated by random elementary integer operations. Its signature and a
// characteristic vector are known by construction.
struct RandomLattice {
  I64Matrix q;
  I64Vector w2; // 0/1 entries
  long bplus = 0, bminus = 0;
};

inline RandomLattice random_lattice(std::mt19937_64 &rng, std::size_t max_size,
                                    int conjugations = 6) {
  RandomLattice out;
  std::vector<int> blocks; // 1, -1, or 0 for a hyperbolic block
  std::size_t size = 0;
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> target(1, max_size);
  const std::size_t n_target = target(rng);
  while (size < n_target) {
    int k = kind(rng);
    if (k == 2 && size + 2 > max_size)
      k = 0;
    blocks.push_back(k == 0 ? 1 : k == 1 ? -1 : 0);
    size += k == 2 ? 2 : 1;
  }
  out.q.assign(size, I64Vector(size, 0));
  out.w2.assign(size, 0);
  std::size_t at = 0;
  for (int b : blocks) {
    if (b == 0) {
      out.q[at][at + 1] = out.q[at + 1][at] = 1;
      ++out.bplus;
      ++out.bminus;
      at += 2;
    } else {
      out.q[at][at] = b;
      out.w2[at] = 1;
      (b > 0 ? out.bplus : out.bminus)++;
      ++at;
    }
  }
  // Basis change e_i <- e_i + s e_j. Q' = P^T Q P; characteristic coordinates
  // transform with P^{-1}: w'_j <- w'_j - s w'_i.
  std::uniform_int_distribution<std::size_t> idx(0, size - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int step = 0; step < conjugations && size > 1; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    const int s = coef(rng);
    if (i == j || s == 0)
      continue;
    for (std::size_t k = 0; k < size; ++k)
      out.q[i][k] += s * out.q[j][k];
    for (std::size_t k = 0; k < size; ++k)
      out.q[k][i] += s * out.q[k][j];
    out.w2[j] = floor_mod(out.w2[j] - s * out.w2[i], 2);
  }
  return out;
}

inline swinv::ManifoldTopology to_topology(const RandomLattice &l, long b1) {
  swinv::ManifoldTopology m;
  m.name = "random";
  m.b1 = b1;
  m.bplus = l.bplus;
  m.bminus = l.bminus;
  m.signature = l.bplus - l.bminus;
  m.euler = 2 - 2 * b1 + static_cast<long>(l.q.size());
  for (const auto &row : l.q)
    m.form.emplace_back(row.begin(), row.end());
  m.w2.assign(l.w2.begin(), l.w2.end());
  m.triple_cup = swinv::zero_triple_cup(b1, l.q.size());
  return m;
}

// A random characteristic vector with entries in [-5, 5].
inline I64Vector random_characteristic(std::mt19937_64 &rng,
                                       const I64Vector &w2) {
  I64Vector c(w2.size());
  std::uniform_int_distribution<int> half(-2, 2);
  std::uniform_int_distribution<int> odd(-3, 2);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = w2[i] ? 2 * odd(rng) + 1 : 2 * half(rng);
  return c;
}

// Exterior algebra with explicit sorted index lists; signs come from counting
// inversions of the concatenated list.
using Multivector = std::map<std::vector<int>, std::int64_t>;

inline int permutation_sign(const std::vector<int> &seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j])
        ++inv;
  return inv % 2 ? -1 : 1;
}

inline Multivector wedge(const Multivector &x, const Multivector &y) {
  Multivector out;
  for (const auto &[a, ca] : x)
    for (const auto &[b, cb] : y) {
      std::vector<int> seq = a;
      seq.insert(seq.end(), b.begin(), b.end());
      std::vector<int> sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;
      out[sorted] += permutation_sign(seq) * ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Caratheodory: target lies in cone(G) iff it is a nonnegative combination of
// some linearly independent subset of G. Enumerates all subsets (small inputs).
inline bool cone_contains(const std::vector<swinv::RatVector> &gens,
                          const swinv::RatVector &target) {
  using swinv::Rational;
  const std::size_t n = gens.size(), d = target.size();
  if (std::all_of(target.begin(), target.end(),
                  [](const Rational &x) { return x == 0; }))
    return true;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1u << j))
        cols.push_back(j);
    if (cols.size() > d)
      continue;
    // Gaussian elimination on [G_S | t].
    const std::size_t k = cols.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < k; ++j)
        a[i][j] = gens[cols[j]][i];
      a[i][k] = target[i];
    }
    std::size_t r = 0;
    bool independent = true;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = r;
      while (p < d && a[p][c] == 0)
        ++p;
      if (p == d) {
        independent = false;
        break;
      }
      std::swap(a[p], a[r]);
      for (std::size_t i = 0; i < d; ++i)
        if (i != r && a[i][c] != 0) {
          const Rational f = a[i][c] / a[r][c];
          for (std::size_t j = 0; j <= k; ++j)
            a[i][j] -= f * a[r][j];
        }
      piv.push_back(c);
      ++r;
    }
    if (!independent)
      continue;
    bool consistent = true;
    for (std::size_t i = r; i < d; ++i)
      if (a[i][k] != 0)
        consistent = false;
    if (!consistent)
      continue;
    bool nonneg = true;
    for (std::size_t i = 0; i < r; ++i)
      if (a[i][k] / a[i][piv[i]] < 0)
        nonneg = false;
    if (nonneg)
      return true;
  }
  return false;
}

// Sign of P(n) - Q(n) at a large integer point; coefficients ascending.
inline int eval_sign(const swinv::RatVector &p, const swinv::RatVector &q,
                     long n = 1000000) {
  swinv::Rational x = n, acc = 0, pw = 1;
  const std::size_t top = std::max(p.size(), q.size());
  for (std::size_t k = 0; k < top; ++k) {
    const swinv::Rational a = k < p.size() ? p[k] : 0;
    const swinv::Rational b = k < q.size() ? q[k] : 0;
    acc += (a - b) * pw;
    pw *= x;
  }
  return acc < 0 ? -1 : acc > 0 ? 1 : 0;
}

} // namespace oracle
