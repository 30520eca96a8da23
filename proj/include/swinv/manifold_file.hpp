#pragma once

#include "swinv/kahler.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace swinv {

// One manifold per file. Sections, in any order:
//
//   [manifold]           name, b1, bplus, bminus, euler, signature (key = value)
//   [intersection_form]  b2 rows of b2 whitespace-separated integers
//   [w2]                 one row of b2 entries, each 0 or 1
//   [torsion]            tors2_order = n            (optional, default 1)
//   [triple_cup]         rows "i j k value", 1-based (optional); an entry
//                        (i,j,k) implies T[j][i][k] = -value unless (j,i,k)
//                        is listed too
//   [kahler]             canonical_class, ns_basis (repeatable),
//                        effective_cone (repeatable), pg_zero,
//                        kahler_ray, kahler_component (optional, default 1)
//   [psc]                psc_ray, component (optional, default 1)
//
// Vector values are comma-separated; '#' starts a comment line.
struct ManifoldFile {
  ManifoldTopology topology;
  std::optional<KahlerFacts> kahler;
  std::optional<PeriodRay> psc_ray;

  SWFacts facts() const { return {psc_ray, kahler}; }

  bool operator==(const ManifoldFile &) const = default;
};

// Throws ParseError (with line/column) for malformed text and DomainError
// when a period ray is not in the positive cone.
ManifoldFile parse_manifold_file(std::string_view text);
ManifoldFile read_manifold_file(const std::filesystem::path &path);

// Canonical text form; parse_manifold_file(write_manifold_file(f)) == f for
// every file whose triple cup tensor is antisymmetric.
std::string write_manifold_file(const ManifoldFile &f);

} // namespace swinv
