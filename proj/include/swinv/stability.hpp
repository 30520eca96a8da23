#pragma once

#include "swinv/arith.hpp"

#include <optional>
#include <string>
#include <vector>

// Exact inequality engine for slope and Hilbert-polynomial stability of
// (oriented) holomorphic pairs.
//
// Every predicate here works on witness data supplied by the caller: slopes,
// Hilbert polynomials, and the destabilizing-subsheaf candidates. The
// mathematical definitions quantify over all subsheaves; the answers below are
// relative to the supplied witnesses, and completeness of those lists is the
// caller's responsibility.
namespace swinv::stability {

struct SlopeData {
  Rational degree; // c1(det F) . [omega]^(n-1)
  long rank = 1;
};

Rational slope(const SlopeData &d);

// Rational polynomial, coefficients stored from the constant term upwards,
// with no trailing zeros.
class HilbertPoly {
public:
  HilbertPoly() = default;
  explicit HilbertPoly(RatVector ascending);

  // Highest-degree coefficient first, as written by hand: {1, 0, -2} is x^2-2.
  static HilbertPoly from_descending(const RatVector &descending);

  const RatVector &coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coefficient(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }
  Rational operator()(const Rational &x) const;

  HilbertPoly &operator+=(const HilbertPoly &o);
  HilbertPoly &operator-=(const HilbertPoly &o);
  HilbertPoly &operator*=(const Rational &k);
  friend HilbertPoly operator+(HilbertPoly a, const HilbertPoly &b) { return a += b; }
  friend HilbertPoly operator-(HilbertPoly a, const HilbertPoly &b) { return a -= b; }
  friend HilbertPoly operator*(const Rational &k, HilbertPoly a) { return a *= k; }

  bool operator==(const HilbertPoly &) const = default;

  // Descending comma list, e.g. "1/2,1,0".
  std::string str() const;

private:
  void trim();
  RatVector c_;
};

enum class Order { less, equal, greater };

const char *to_string(Order o);

// Eventual dominance: P < Q iff P(n) < Q(n) for all n >> 0, i.e.
// lexicographic comparison from the top coefficient down.
Order poly_compare(const HilbertPoly &p, const HilbertPoly &q);

enum class EStability { stable, polystable, neither };
enum class PairStatus { stable, polystable, neither };

const char *to_string(PairStatus s);

// Rank-2 oriented pair. `mu_div` is the slope of O(D_phi) and must be present
// exactly when phi != 0.
PairStatus oriented_pair_status_rank2(bool phi_zero, EStability e_stability,
                                      const std::optional<Rational> &mu_div,
                                      const Rational &mu_e);

// Open interval (lo, hi); hi = nullopt means +infinity.
struct OpenInterval {
  Rational lo;
  std::optional<Rational> hi;

  bool contains(const Rational &x) const { return x > lo && (!hi || x < *hi); }
  bool operator==(const OpenInterval &) const = default;
};

// The rho with m_under < rho < m_over, or nullopt when there is none.
std::optional<OpenInterval> rho_interval(const Rational &m_under,
                                         const std::optional<Rational> &m_over);

struct RhoBounds {
  Rational m_under;
  std::optional<Rational> m_over; // inf over an empty witness list is +inf
};

// m_under = max(mu(E), slopes of the supplied subsheaves);
// m_over = min of the supplied quotient slopes mu(E/F), F containing phi.
RhoBounds rho_bounds(const Rational &mu_e, const RatVector &subsheaf_slopes,
                     const RatVector &quotient_slopes);

// P_E - (rk_E / rk_ker) P_ker.
HilbertPoly delta_e_phi(const HilbertPoly &p_e, long rk_e,
                        const HilbertPoly &p_ker, long rk_ker);

struct SheafData {
  long rank = 1;
  HilbertPoly hilbert;
};

struct PairProfile {
  long rk_e = 1;
  HilbertPoly p_e;
  bool phi_injective = false;
  std::optional<SheafData> kermax;   // ker(phi)_max
  std::vector<SheafData> subsheaves; // test subsheaves F of E
  bool epsilon_iso = false;
};

// Empty when the profile is well formed.
std::vector<std::string> validate_profile(const PairProfile &p);

// Semistable iff phi is injective, or epsilon is an isomorphism, delta >= 0,
// and every supplied F satisfies
//   P_F/rk F - delta/rk F <= P_E/rk E - delta/rk E.
// Throws DomainError for a malformed profile, including a non-injective phi
// without ker(phi)_max.
bool oriented_sheaf_semistable(const PairProfile &p);

} // namespace swinv::stability
