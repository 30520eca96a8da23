#pragma once

#include "swinv/chambers.hpp"
#include "swinv/extalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swinv {

// Complex-geometric facts about a Kahler surface. The effective cone is a
// finite list of rational generators written in coordinates of `ns_basis`;
// surfaces whose effective cone is not finitely generated cannot be described.
struct KahlerFacts {
  IntVector canonical_class;            // c1(K_X)
  std::vector<IntVector> ns_basis;      // Z-basis of NS(X) in H^2/Tors
  std::vector<RatVector> effective_cone; // generators, NS coordinates
  bool pg_zero = false;
  PeriodRay kahler_ray;                 // [omega_g]

  bool operator==(const KahlerFacts &) const = default;
};

ValidationReport validate_kahler(const ManifoldTopology &m,
                                 const KahlerFacts &kf);

enum class SolvabilitySide { dou_m, dou_K_minus_m, on_wall };

const char *to_string(SolvabilitySide s);

// Sign of (2m - K - b).[omega]: negative identifies the abelian moduli space
// with Dou(m), positive with Dou(K - m).
SolvabilitySide abelian_solvability_side(const ManifoldTopology &m,
                                         const KahlerFacts &kf,
                                         const IntVector &line_class,
                                         const RatVector &b);

// Dou(m) is nonempty iff m is an integral class of NS(X) lying in the
// effective cone.
bool douady_nonempty(const KahlerFacts &kf, const IntVector &line_class);

struct SWPair {
  Integer plus;
  Integer minus;

  bool operator==(const SWPair &) const = default;
};

struct PgZeroInvariants {
  IntVector c;   // 2m - K
  Integer w_c;
  bool douady_nonempty;
  SWPair values; // oriented by the component containing the Kahler class
  // (-1)^chi(M) relating the complex orientation of Dou(K - m) to the
  // monopole orientation. Reported only; never folded into `values`.
  int dou_k_minus_m_twist;
};

// Invariants of the Spin^c structure c_M (c = 2m - K) on a Kahler surface
// with p_g = 0 and b1 = 0.
PgZeroInvariants sw_pg0_invariants(const ManifoldTopology &m,
                                   const KahlerFacts &kf,
                                   const IntVector &line_class);

struct SWFacts {
  std::optional<PeriodRay> psc_ray;
  std::optional<KahlerFacts> kahler;
};

enum class TablePath { automatic, psc, kahler };

struct SWRow {
  IntVector c;
  Integer w_c;
  std::optional<Integer> sw_plus; // nullopt: undetermined
  std::optional<Integer> sw_minus;
  Integer wall_delta;             // wall_crossing_delta at r = 0
  std::string source;             // dimension | psc | kahler | psc+kahler | undetermined
};

// SW^+- for every characteristic class in `classes` (b1 = 0, bplus = 1),
// oriented by the component H0 that the supplied rays declare. Rows are
// sorted by c and deduplicated. Throws DomainError when no applicable facts
// exist or when two applicable rules disagree.
std::vector<SWRow> sw_table(const ManifoldTopology &m, const SWFacts &facts,
                            std::vector<IntVector> classes,
                            TablePath path = TablePath::automatic);

} // namespace swinv
