#pragma once

#include "swinv/arith.hpp"

#include <optional>

namespace swinv::cone {

// Decides whether `target` is a nonnegative rational combination of
// `generators` (all of the same length), i.e. whether {lambda >= 0 :
// G lambda = target} is nonempty. Exact phase-one simplex over Q with Bland's
// rule, so it terminates without cycling.
bool contains(const std::vector<RatVector> &generators, const RatVector &target);

// A certificate lambda >= 0 with G lambda = target, when one exists.
std::optional<RatVector> combination(const std::vector<RatVector> &generators,
                                     const RatVector &target);

} // namespace swinv::cone
