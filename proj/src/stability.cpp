#include "swinv/stability.hpp"

#include <algorithm>

namespace swinv::stability {

Rational slope(const SlopeData &d) {
  if (d.rank < 1)
    throw DomainError("slope of a sheaf of rank " + std::to_string(d.rank));
  return d.degree / d.rank;
}

HilbertPoly::HilbertPoly(RatVector ascending) : c_(std::move(ascending)) {
  trim();
}

HilbertPoly HilbertPoly::from_descending(const RatVector &descending) {
  return HilbertPoly(RatVector(descending.rbegin(), descending.rend()));
}

void HilbertPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

Rational HilbertPoly::operator()(const Rational &x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

HilbertPoly &HilbertPoly::operator+=(const HilbertPoly &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

HilbertPoly &HilbertPoly::operator-=(const HilbertPoly &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  trim();
  return *this;
}

HilbertPoly &HilbertPoly::operator*=(const Rational &k) {
  for (auto &x : c_)
    x *= k;
  trim();
  return *this;
}

std::string HilbertPoly::str() const {
  if (c_.empty())
    return "0";
  return render(RatVector(c_.rbegin(), c_.rend()));
}

const char *to_string(Order o) {
  switch (o) {
  case Order::less:
    return "less";
  case Order::equal:
    return "equal";
  case Order::greater:
    return "greater";
  }
  return "?";
}

Order poly_compare(const HilbertPoly &p, const HilbertPoly &q) {
  const std::size_t top = std::max(p.coeffs().size(), q.coeffs().size());
  for (std::size_t k = top; k-- > 0;) {
    const Rational a = p.coefficient(k), b = q.coefficient(k);
    if (a < b)
      return Order::less;
    if (a > b)
      return Order::greater;
  }
  return Order::equal;
}

const char *to_string(PairStatus s) {
  switch (s) {
  case PairStatus::stable:
    return "stable";
  case PairStatus::polystable:
    return "polystable";
  case PairStatus::neither:
    return "neither";
  }
  return "?";
}

PairStatus oriented_pair_status_rank2(bool phi_zero, EStability e_stability,
                                      const std::optional<Rational> &mu_div,
                                      const Rational &mu_e) {
  if (phi_zero) {
    if (mu_div)
      throw DomainError("phi = 0 has no divisorial component; omit mu_div");
    if (e_stability == EStability::stable)
      return PairStatus::stable;
    if (e_stability == EStability::polystable)
      return PairStatus::polystable;
    return PairStatus::neither;
  }
  if (!mu_div)
    throw DomainError("phi != 0 needs the slope of O(D_phi)");
  return *mu_div < mu_e ? PairStatus::stable : PairStatus::neither;
}

std::optional<OpenInterval> rho_interval(const Rational &m_under,
                                         const std::optional<Rational> &m_over) {
  if (m_over && !(m_under < *m_over))
    return std::nullopt;
  return OpenInterval{m_under, m_over};
}

RhoBounds rho_bounds(const Rational &mu_e, const RatVector &subsheaf_slopes,
                     const RatVector &quotient_slopes) {
  RhoBounds out{mu_e, std::nullopt};
  for (const auto &s : subsheaf_slopes)
    out.m_under = std::max(out.m_under, s);
  for (const auto &s : quotient_slopes)
    if (!out.m_over || s < *out.m_over)
      out.m_over = s;
  return out;
}

HilbertPoly delta_e_phi(const HilbertPoly &p_e, long rk_e,
                        const HilbertPoly &p_ker, long rk_ker) {
  if (rk_ker < 1)
    throw DomainError("ker(phi)_max must have positive rank");
  if (rk_e < 1)
    throw DomainError("E must have positive rank");
  return p_e - Rational(rk_e, rk_ker) * p_ker;
}

std::vector<std::string> validate_profile(const PairProfile &p) {
  std::vector<std::string> out;
  if (p.rk_e < 1)
    out.push_back("rk E must be positive");
  if (p.p_e.leading() <= 0)
    out.push_back("P_E must have positive leading coefficient");
  if (p.kermax) {
    if (p.kermax->rank < 1 || p.kermax->rank >= p.rk_e)
      out.push_back("rank of ker(phi)_max must lie in [1, rk E)");
    if (p.kermax->hilbert.leading() <= 0)
      out.push_back("P of ker(phi)_max must have positive leading coefficient");
  }
  for (std::size_t i = 0; i < p.subsheaves.size(); ++i) {
    const auto &f = p.subsheaves[i];
    if (f.rank < 1 || f.rank >= p.rk_e)
      out.push_back("subsheaf " + std::to_string(i + 1) +
                    ": rank must lie in (0, rk E)");
    if (f.hilbert.leading() <= 0)
      out.push_back("subsheaf " + std::to_string(i + 1) +
                    ": P must have positive leading coefficient");
  }
  return out;
}

bool oriented_sheaf_semistable(const PairProfile &p) {
  if (const auto problems = validate_profile(p); !problems.empty())
    throw DomainError("malformed pair profile: " + problems.front());
  if (p.phi_injective)
    return true;
  if (!p.kermax)
    throw DomainError("phi is not injective but ker(phi)_max is missing");
  if (!p.epsilon_iso)
    return false;
  const HilbertPoly delta =
      delta_e_phi(p.p_e, p.rk_e, p.kermax->hilbert, p.kermax->rank);
  if (poly_compare(delta, HilbertPoly{}) == Order::less)
    return false;
  const HilbertPoly rhs = Rational(1, p.rk_e) * (p.p_e - delta);
  return std::all_of(p.subsheaves.begin(), p.subsheaves.end(),
                     [&](const SheafData &f) {
                       const HilbertPoly lhs =
                           Rational(1, f.rank) * (f.hilbert - delta);
                       return poly_compare(lhs, rhs) != Order::greater;
                     });
}

} // namespace swinv::stability
