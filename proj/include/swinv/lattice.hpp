#pragma once

#include "swinv/arith.hpp"

#include <optional>

namespace swinv::lattice {

Integer dot(const IntVector &x, const IntVector &y);

// x^T Q y over the integers.
Integer pairing(const IntMatrix &q, const IntVector &x, const IntVector &y);
Integer square(const IntMatrix &q, const IntVector &x);
// x^T Q y with rational arguments.
Rational pairing(const IntMatrix &q, const RatVector &x, const RatVector &y);

IntVector multiply(const IntMatrix &q, const IntVector &x);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const {
    return static_cast<long>(positive) - static_cast<long>(negative);
  }
};

struct Congruence {
  Inertia inertia;
  Rational determinant;
};

// Symmetric LDL^T over Q. When no nonzero diagonal pivot remains, an
// off-diagonal entry is folded onto the diagonal with e_i <- e_i + e_j, which
// is a unimodular congruence and leaves inertia and determinant unchanged.
Congruence diagonalize(const IntMatrix &q);

bool is_square(const IntMatrix &q);
bool is_symmetric(const IntMatrix &q);

// The unique w in (Z/2)^n with x^T Q x = w^T Q x (mod 2) for all x, if Q is
// invertible mod 2.
std::optional<IntVector> characteristic_mod2(const IntMatrix &q);

// Coordinates of `target` in the column span of `columns` (each entry of
// `columns` is one basis vector), when the representation exists and is
// unique. Throws DomainError if the vectors are linearly dependent.
std::optional<RatVector> solve_in_span(const std::vector<IntVector> &columns,
                                       const RatVector &target);

} // namespace swinv::lattice
