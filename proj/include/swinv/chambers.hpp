#pragma once

#include "swinv/topology.hpp"

namespace swinv {

// A ray in the positive cone {h : h^2 > 0} of H^2(X;R), kept unnormalized.
// `component_sign` is +1 when h lies in the chosen component H0 of the
// hyperboloid {h^2 = 1}, and -1 when it lies in -H0.
class PeriodRay {
public:
  // Throws DomainError unless h has the right length and h^T Q h > 0.
  PeriodRay(const ManifoldTopology &m, RatVector h, int component_sign = 1);

  const RatVector &direction() const { return h_; }
  int component_sign() const { return sign_; }
  // The same ray expressed relative to H0: component_sign * h.
  RatVector in_chosen_component() const;

  bool operator==(const PeriodRay &) const = default;

private:
  RatVector h_;
  int sign_;
};

struct OrientationData {
  int o1_sign = 1; // l_O1 = o1_sign * alpha_1 ^ ... ^ alpha_b1
  PeriodRay h0;
};

// `plus` is C_{H0,+} = {(c - b).h < 0}, `minus` is C_{H0,-} = {(c - b).h > 0}.
enum class Chamber { plus, minus, on_wall };

const char *to_string(Chamber c);

// Both require bplus(m) == 1.
Chamber classify_chamber(const ManifoldTopology &m,
                         const CharacteristicElement &c, const PeriodRay &h,
                         const RatVector &b);
bool is_c_good(const ManifoldTopology &m, const CharacteristicElement &c,
               const PeriodRay &h, const RatVector &b);

// (c - b)^T Q h, the wall pairing.
Rational wall_pairing(const ManifoldTopology &m, const IntVector &c,
                      const RatVector &h, const RatVector &b);

} // namespace swinv
