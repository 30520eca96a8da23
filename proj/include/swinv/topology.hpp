#pragma once

#include "swinv/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swinv {

// Topological input for a closed connected oriented 4-manifold X. Classes in
// H^2(X;Z)/Tors are integer coordinate vectors in a fixed basis e_1..e_b2;
// classes in H_1/Tors use a fixed basis alpha_1..alpha_b1.
struct ManifoldTopology {
  std::string name;
  long b1 = 0;
  long bplus = 0;
  long bminus = 0;
  Integer euler = 0;
  Integer signature = 0;
  IntMatrix form;     // intersection form, b2 x b2
  IntVector w2;       // mod-2 coordinates of an integral lift of w2(X)
  Integer tors2_order = 1;
  // triple_cup[i][j][k] = <alpha_i u alpha_j u e_k, [X]>, dims b1 x b1 x b2.
  std::vector<std::vector<IntVector>> triple_cup;

  std::size_t b2() const { return static_cast<std::size_t>(bplus + bminus); }

  bool operator==(const ManifoldTopology &) const = default;
};

// All-zero triple cup tensor of the right shape for `m`.
std::vector<std::vector<IntVector>> zero_triple_cup(long b1, std::size_t b2);

struct Violation {
  std::string invariant;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate_topology(const ManifoldTopology &m);

// Throws DomainError listing the first violation.
void require_valid(const ManifoldTopology &m);

bool is_characteristic(const ManifoldTopology &m, const IntVector &c);

// An integer vector c with c = w2 (mod 2).
class CharacteristicElement {
public:
  // Throws DomainError when c is not characteristic for m.
  CharacteristicElement(const ManifoldTopology &m, IntVector c);

  const IntVector &coords() const { return c_; }

private:
  IntVector c_;
};

// (c^2 - 3 sigma - 2 e) / 4, the abelian expected dimension w_c.
Integer expected_dim_abelian(const ManifoldTopology &m,
                             const CharacteristicElement &c);

enum class SpinorSign { plus, minus };

// c_2(Sigma^+-) = (c^2 - 3 sigma -+ 2 e) / 4.
Integer c2_spinor_bundle(const ManifoldTopology &m,
                         const CharacteristicElement &c, SpinorSign sign);

// Number of Spin^c classes sharing one Chern class.
Integer spinc_count_per_chern(const ManifoldTopology &m);

bool spin_sp1_admissible(const ManifoldTopology &m, const Integer &p);
bool spin_u2_admissible(const ManifoldTopology &m, const Integer &p,
                        const IntVector &c);

// chi = (-3 p1 + c1^2)/2 - (3e + 4 sigma)/2 for an admissible (p1, c1).
Integer expected_dim_pu2(const ManifoldTopology &m, const Integer &p1,
                         const IntVector &c1);

struct UhlenbeckStratum {
  long level;        // l, number of points bubbled off
  Integer p1;        // p1 + 4l of the lower moduli space
  Integer dimension; // chi(p1 + 4l) + 4l = chi - 2l

  bool operator==(const UhlenbeckStratum &) const = default;
};

// Strata with nonnegative dimension, l = 0, 1, ..., optionally capped at
// max_level.
std::vector<UhlenbeckStratum> uhlenbeck_strata(const ManifoldTopology &m,
                                               const Integer &p1,
                                               const IntVector &c1,
                                               std::optional<long> max_level = {});

// max(0, sup_X(-s + |4 pi beta^+|)).
Rational spinor_sup_bound(const Rational &sup_term);

} // namespace swinv
