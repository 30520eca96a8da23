#include "swinv/topology.hpp"

#include "swinv/lattice.hpp"

namespace swinv {

std::vector<std::vector<IntVector>> zero_triple_cup(long b1, std::size_t b2) {
  const auto n = static_cast<std::size_t>(b1 < 0 ? 0 : b1);
  return std::vector<std::vector<IntVector>>(
      n, std::vector<IntVector>(n, IntVector(b2, 0)));
}

namespace {

bool shape_ok(const ManifoldTopology &m, ValidationReport &out) {
  bool ok = true;
  auto fail = [&](std::string inv, std::string detail) {
    out.push_back({std::move(inv), std::move(detail)});
    ok = false;
  };
  if (m.b1 < 0 || m.bplus < 0 || m.bminus < 0)
    fail("Betti numbers are nonnegative", "b1=" + std::to_string(m.b1) +
                                              " bplus=" + std::to_string(m.bplus) +
                                              " bminus=" + std::to_string(m.bminus));
  if (!ok)
    return false;
  const std::size_t b2 = m.b2();
  if (m.form.size() != b2 || !lattice::is_square(m.form))
    fail("intersection form is b2 x b2",
         "expected " + std::to_string(b2) + "x" + std::to_string(b2) +
             " matrix, got " + std::to_string(m.form.size()) + " rows");
  if (m.w2.size() != b2)
    fail("w2 has length b2", "expected " + std::to_string(b2) + ", got " +
                                 std::to_string(m.w2.size()));
  for (const auto &x : m.w2)
    if (x != 0 && x != 1) {
      fail("w2 entries are 0 or 1", "found " + x.str());
      break;
    }
  const auto nb1 = static_cast<std::size_t>(m.b1);
  bool tensor_ok = m.triple_cup.size() == nb1;
  for (const auto &row : m.triple_cup) {
    tensor_ok = tensor_ok && row.size() == nb1;
    for (const auto &fibre : row)
      tensor_ok = tensor_ok && fibre.size() == b2;
  }
  if (!tensor_ok)
    fail("triple cup tensor is b1 x b1 x b2",
         "expected " + std::to_string(nb1) + "x" + std::to_string(nb1) + "x" +
             std::to_string(b2));
  return ok;
}

} // namespace

ValidationReport validate_topology(const ManifoldTopology &m) {
  ValidationReport out;
  if (!shape_ok(m, out))
    return out;
  const std::size_t b2 = m.b2();

  if (m.tors2_order < 1)
    out.push_back({"tors2_order is positive", "got " + m.tors2_order.str()});
  else if ((m.tors2_order & (m.tors2_order - 1)) != 0)
    out.push_back(
        {"tors2_order is a power of two", "got " + m.tors2_order.str()});

  const Integer betti_euler = 2 - 2 * Integer(m.b1) + Integer(b2);
  if (m.euler != betti_euler)
    out.push_back({"euler = 2 - 2 b1 + b2",
                   "euler=" + m.euler.str() + " but 2-2b1+b2=" +
                       betti_euler.str()});

  if (!lattice::is_symmetric(m.form)) {
    auto entry = [&](std::size_t i, std::size_t j) {
      return "Q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
             "]=" + m.form[i][j].str();
    };
    for (std::size_t i = 0; i < b2; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (m.form[i][j] != m.form[j][i]) {
          out.push_back({"intersection form is symmetric",
                         entry(i, j) + " but " + entry(j, i)});
          return out;
        }
  } else {
    const auto cong = lattice::diagonalize(m.form);
    const Rational absdet = cong.determinant < 0 ? Rational(-cong.determinant)
                                                 : cong.determinant;
    if (absdet != 1)
      out.push_back({"intersection form is unimodular",
                     "det=" + render(cong.determinant)});
    if (Integer(cong.inertia.signature()) != m.signature)
      out.push_back({"signature(Q) = signature",
                     "signature(Q)=" +
                         std::to_string(cong.inertia.signature()) +
                         " but signature=" + m.signature.str()});
    if (cong.inertia.positive != static_cast<std::size_t>(m.bplus))
      out.push_back({"positive index of Q = bplus",
                     "positive index " +
                         std::to_string(cong.inertia.positive) +
                         " but bplus=" + std::to_string(m.bplus)});
    if (cong.inertia.negative != static_cast<std::size_t>(m.bminus))
      out.push_back({"negative index of Q = bminus",
                     "negative index " +
                         std::to_string(cong.inertia.negative) +
                         " but bminus=" + std::to_string(m.bminus)});

    // x^T Q x = sum Q_ii x_i^2 = sum Q_ii x_i (mod 2), so the parity identity
    // holds for all x iff it holds on the basis vectors.
    const IntVector qw = lattice::multiply(m.form, m.w2);
    for (std::size_t i = 0; i < b2; ++i)
      if (!is_even(m.form[i][i] - qw[i])) {
        IntVector x(b2, 0);
        x[i] = 1;
        out.push_back({"w2 is characteristic for Q",
                       "x=(" + render(x) + "): x.Q.x=" + m.form[i][i].str() +
                           " but w2.Q.x=" + qw[i].str()});
        break;
      }
  }

  const auto nb1 = static_cast<std::size_t>(m.b1);
  for (std::size_t i = 0; i < nb1; ++i)
    for (std::size_t j = i; j < nb1; ++j)
      for (std::size_t k = 0; k < b2; ++k)
        if (m.triple_cup[i][j][k] != -m.triple_cup[j][i][k]) {
          out.push_back(
              {"triple cup antisymmetric in (i,j)",
               "T[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                   "][" + std::to_string(k + 1) +
                   "]=" + m.triple_cup[i][j][k].str() + ", T[" +
                   std::to_string(j + 1) + "][" + std::to_string(i + 1) +
                   "][" + std::to_string(k + 1) +
                   "]=" + m.triple_cup[j][i][k].str()});
          return out;
        }
  return out;
}

void require_valid(const ManifoldTopology &m) {
  const auto report = validate_topology(m);
  if (!report.empty())
    throw DomainError("invalid topology: " + report.front().invariant + " (" +
                      report.front().detail + ")");
}

bool is_characteristic(const ManifoldTopology &m, const IntVector &c) {
  if (c.size() != m.b2())
    throw DomainError("class has length " + std::to_string(c.size()) +
                      ", expected b2=" + std::to_string(m.b2()));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!is_even(c[i] - m.w2[i]))
      return false;
  return true;
}

CharacteristicElement::CharacteristicElement(const ManifoldTopology &m,
                                             IntVector c)
    : c_(std::move(c)) {
  if (!is_characteristic(m, c_))
    throw DomainError("(" + render(c_) + ") is not characteristic (c != w2 mod 2)");
}

Integer expected_dim_abelian(const ManifoldTopology &m,
                             const CharacteristicElement &c) {
  return exact_div(lattice::square(m.form, c.coords()) - 3 * m.signature -
                       2 * m.euler,
                   4, "w_c not integral; inconsistent topology data");
}

Integer c2_spinor_bundle(const ManifoldTopology &m,
                         const CharacteristicElement &c, SpinorSign sign) {
  const Integer e_term = sign == SpinorSign::plus ? 2 * m.euler : -2 * m.euler;
  return exact_div(lattice::square(m.form, c.coords()) - 3 * m.signature -
                       e_term,
                   4, "c2 of spinor bundle not integral; inconsistent topology data");
}

Integer spinc_count_per_chern(const ManifoldTopology &m) {
  return m.tors2_order;
}

bool spin_sp1_admissible(const ManifoldTopology &m, const Integer &p) {
  return mod(p - lattice::square(m.form, m.w2), 4) == 0;
}

bool spin_u2_admissible(const ManifoldTopology &m, const Integer &p,
                        const IntVector &c) {
  if (c.size() != m.b2())
    throw DomainError("class has length " + std::to_string(c.size()) +
                      ", expected b2=" + std::to_string(m.b2()));
  IntVector w = m.w2;
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] += c[i];
  return mod(p - lattice::square(m.form, w), 4) == 0;
}

Integer expected_dim_pu2(const ManifoldTopology &m, const Integer &p1,
                         const IntVector &c1) {
  if (!spin_u2_admissible(m, p1, c1))
    throw DomainError("(p1=" + p1.str() + ", c1=(" + render(c1) +
                      ")) is not Spin^U(2)-admissible: p1 != (w2+c1)^2 mod 4");
  return exact_div(-3 * p1 + lattice::square(m.form, c1) - 3 * m.euler -
                       4 * m.signature,
                   2, "PU(2) expected dimension not integral");
}

std::vector<UhlenbeckStratum> uhlenbeck_strata(const ManifoldTopology &m,
                                               const Integer &p1,
                                               const IntVector &c1,
                                               std::optional<long> max_level) {
  const Integer chi = expected_dim_pu2(m, p1, c1);
  std::vector<UhlenbeckStratum> out;
  for (long l = 0; !max_level || l <= *max_level; ++l) {
    // The lower moduli space has dimension chi - 6l; S^l(X) adds 4l.
    const Integer dim = chi - 6 * Integer(l) + 4 * Integer(l);
    if (dim < 0)
      break;
    out.push_back({l, p1 + 4 * Integer(l), dim});
  }
  return out;
}

Rational spinor_sup_bound(const Rational &sup_term) {
  return sup_term > 0 ? sup_term : Rational(0);
}

} // namespace swinv
