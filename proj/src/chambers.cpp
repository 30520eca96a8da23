#include "swinv/chambers.hpp"

#include "swinv/lattice.hpp"

namespace swinv {

PeriodRay::PeriodRay(const ManifoldTopology &m, RatVector h, int component_sign)
    : h_(std::move(h)), sign_(component_sign) {
  if (sign_ != 1 && sign_ != -1)
    throw DomainError("component sign must be +1 or -1");
  if (h_.size() != m.b2())
    throw DomainError("period ray has length " + std::to_string(h_.size()) +
                      ", expected b2=" + std::to_string(m.b2()));
  if (lattice::pairing(m.form, h_, h_) <= 0)
    throw DomainError("period ray (" + render(h_) + ") has h^2 <= 0");
}

RatVector PeriodRay::in_chosen_component() const {
  if (sign_ == 1)
    return h_;
  RatVector out = h_;
  for (auto &x : out)
    x = -x;
  return out;
}

const char *to_string(Chamber c) {
  switch (c) {
  case Chamber::plus:
    return "C_plus";
  case Chamber::minus:
    return "C_minus";
  case Chamber::on_wall:
    return "on_wall";
  }
  return "?";
}

Rational wall_pairing(const ManifoldTopology &m, const IntVector &c,
                      const RatVector &h, const RatVector &b) {
  if (b.size() != m.b2())
    throw DomainError("twisting class has length " + std::to_string(b.size()) +
                      ", expected b2=" + std::to_string(m.b2()));
  RatVector diff = to_rational(c);
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] -= b[i];
  return lattice::pairing(m.form, diff, h);
}

namespace {

void require_bplus_one(const ManifoldTopology &m) {
  if (m.bplus != 1)
    throw DomainError("chamber structure needs bplus = 1, got bplus = " +
                      std::to_string(m.bplus));
}

} // namespace

Chamber classify_chamber(const ManifoldTopology &m,
                         const CharacteristicElement &c, const PeriodRay &h,
                         const RatVector &b) {
  require_bplus_one(m);
  const Rational s = wall_pairing(m, c.coords(), h.direction(), b);
  if (s < 0)
    return Chamber::plus;
  if (s > 0)
    return Chamber::minus;
  return Chamber::on_wall;
}

bool is_c_good(const ManifoldTopology &m, const CharacteristicElement &c,
               const PeriodRay &h, const RatVector &b) {
  require_bplus_one(m);
  return wall_pairing(m, c.coords(), h.direction(), b) != 0;
}

} // namespace swinv
