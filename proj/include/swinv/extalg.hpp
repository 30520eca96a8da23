#pragma once

#include "swinv/chambers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace swinv {

// Element of the integer exterior algebra on Z^b1 (H_1/Tors with basis
// alpha_1..alpha_b1). A basis multivector is stored as a bitmask of its
// (0-based) indices; zero coefficients are never stored.
class ExtForm {
public:
  using Blade = std::uint64_t;
  static constexpr long max_rank = 63;

  explicit ExtForm(long b1);

  static ExtForm scalar(long b1, const Integer &value);
  // coefficient * alpha_{i1} ^ ... ^ alpha_{ik}, 0-based indices in any order
  // (the sign of the sorting permutation is applied; repeats give zero).
  static ExtForm blade(long b1, const std::vector<int> &indices,
                       const Integer &coefficient = 1);

  long rank() const { return b1_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Blade, Integer> &terms() const { return terms_; }

  Integer coefficient(const std::vector<int> &increasing) const;
  // The degree if every term has the same degree; nullopt for the zero form
  // and for mixed forms.
  std::optional<int> degree() const;
  ExtForm homogeneous_part(int degree) const;
  // Coefficient of alpha_1 ^ ... ^ alpha_b1.
  Integer top_coefficient() const;

  ExtForm &operator+=(const ExtForm &other);
  ExtForm &operator-=(const ExtForm &other);
  ExtForm &operator*=(const Integer &k);
  friend ExtForm operator+(ExtForm a, const ExtForm &b) { return a += b; }
  friend ExtForm operator-(ExtForm a, const ExtForm &b) { return a -= b; }
  friend ExtForm operator*(const Integer &k, ExtForm a) { return a *= k; }

  bool operator==(const ExtForm &) const = default;

  // Terms ordered by degree, then lexicographically by index set; e.g.
  // "2,-3*a1^a2". The zero form renders as "0".
  std::string str() const;
  static ExtForm parse(long b1, std::string_view text);

  // Adds c to the coefficient of an already-sorted blade.
  void add_term(Blade blade, const Integer &c);

private:
  long b1_;
  std::map<Blade, Integer> terms_;
};

// Sign of alpha_A ^ alpha_B relative to alpha_{A u B} for disjoint blades.
int shuffle_sign(ExtForm::Blade a, ExtForm::Blade b);

ExtForm wedge(const ExtForm &x, const ExtForm &y);
ExtForm wedge_power(const ExtForm &x, long k);

// u_c(alpha_i ^ alpha_j) = (1/2) sum_k c_k T[i][j][k].
ExtForm u_c(const ManifoldTopology &m, const CharacteristicElement &c);

// Jump SW^+ - SW^- evaluated on lambda:
//   (-1)^k / k! <lambda ^ u_c^k, l_O1>,  k = (b1 - r)/2,
// when r <= min(b1, w_c), and 0 otherwise. Requires bplus = 1 and
// r = w_c (mod 2). The zero form evaluates to 0.
Integer wall_crossing_delta(const ManifoldTopology &m,
                            const CharacteristicElement &c,
                            const ExtForm &lambda,
                            const OrientationData &orientation);

} // namespace swinv
