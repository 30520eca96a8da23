#include "swinv/kahler.hpp"

#include "swinv/cone.hpp"
#include "swinv/lattice.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace swinv {

ValidationReport validate_kahler(const ManifoldTopology &m,
                                 const KahlerFacts &kf) {
  ValidationReport out;
  const std::size_t b2 = m.b2();
  if (kf.canonical_class.size() != b2) {
    out.push_back({"canonical class has length b2",
                   "got " + std::to_string(kf.canonical_class.size())});
  } else if (!is_characteristic(m, kf.canonical_class)) {
    out.push_back({"canonical class is characteristic",
                   "K=(" + render(kf.canonical_class) + ") != w2 mod 2"});
  }
  bool basis_ok = true;
  for (const auto &v : kf.ns_basis)
    if (v.size() != b2) {
      out.push_back({"NS basis vectors have length b2",
                     "got (" + render(v) + ")"});
      basis_ok = false;
      break;
    }
  if (basis_ok && !kf.ns_basis.empty()) {
    try {
      lattice::solve_in_span(kf.ns_basis, RatVector(b2));
    } catch (const DomainError &) {
      out.push_back({"NS basis is linearly independent", "dependent rows"});
    }
  }
  for (const auto &g : kf.effective_cone)
    if (g.size() != kf.ns_basis.size()) {
      out.push_back({"effective cone generators lie in NS coordinates",
                     "generator (" + render(g) + ") has length " +
                         std::to_string(g.size()) + ", NS rank is " +
                         std::to_string(kf.ns_basis.size())});
      break;
    }
  return out;
}

const char *to_string(SolvabilitySide s) {
  switch (s) {
  case SolvabilitySide::dou_m:
    return "dou_m";
  case SolvabilitySide::dou_K_minus_m:
    return "dou_K_minus_m";
  case SolvabilitySide::on_wall:
    return "on_wall";
  }
  return "?";
}

namespace {

IntVector spinc_class(const KahlerFacts &kf, const IntVector &line_class) {
  if (line_class.size() != kf.canonical_class.size())
    throw DomainError("line bundle class has length " +
                      std::to_string(line_class.size()) + ", expected " +
                      std::to_string(kf.canonical_class.size()));
  IntVector c(line_class.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = 2 * line_class[i] - kf.canonical_class[i];
  return c;
}

} // namespace

SolvabilitySide abelian_solvability_side(const ManifoldTopology &m,
                                         const KahlerFacts &kf,
                                         const IntVector &line_class,
                                         const RatVector &b) {
  const Rational s = wall_pairing(m, spinc_class(kf, line_class),
                                  kf.kahler_ray.direction(), b);
  if (s < 0)
    return SolvabilitySide::dou_m;
  if (s > 0)
    return SolvabilitySide::dou_K_minus_m;
  return SolvabilitySide::on_wall;
}

bool douady_nonempty(const KahlerFacts &kf, const IntVector &line_class) {
  if (kf.ns_basis.empty())
    return std::all_of(line_class.begin(), line_class.end(),
                       [](const Integer &x) { return x == 0; });
  const auto coords = lattice::solve_in_span(kf.ns_basis, to_rational(line_class));
  if (!coords)
    return false;
  if (!std::all_of(coords->begin(), coords->end(), is_integral))
    return false;
  return cone::contains(kf.effective_cone, *coords);
}

PgZeroInvariants sw_pg0_invariants(const ManifoldTopology &m,
                                   const KahlerFacts &kf,
                                   const IntVector &line_class) {
  if (m.b1 != 0 || m.bplus != 1)
    throw DomainError("p_g = 0 rule needs b1 = 0 and bplus = 1");
  if (!kf.pg_zero)
    throw DomainError("p_g = 0 rule applied to a surface with p_g > 0");
  PgZeroInvariants out;
  out.c = spinc_class(kf, line_class);
  const CharacteristicElement c(m, out.c);
  out.w_c = expected_dim_abelian(m, c);
  out.douady_nonempty = douady_nonempty(kf, line_class);

  // chi(M) = chi(O_X) + m.(m - K)/2 with chi(O_X) = (e + sigma)/4.
  IntVector m_minus_k(line_class.size());
  for (std::size_t i = 0; i < m_minus_k.size(); ++i)
    m_minus_k[i] = line_class[i] - kf.canonical_class[i];
  const Integer chi_o = exact_div(m.euler + m.signature, 4, "chi(O_X)");
  const Integer chi_m =
      chi_o + exact_div(lattice::pairing(m.form, line_class, m_minus_k), 2,
                        "m.(m-K)/2");
  out.dou_k_minus_m_twist = is_even(chi_m) ? 1 : -1;

  if (out.w_c < 0)
    out.values = {0, 0};
  else if (out.douady_nonempty)
    out.values = {1, 0};
  else
    out.values = {0, -1};
  return out;
}

namespace {

struct Candidate {
  std::optional<Integer> plus, minus;
  bool determined() const { return plus && minus; }
};

SWRow table_row(const ManifoldTopology &m, const SWFacts &facts,
                const IntVector &coords, bool use_psc, bool use_kahler) {
  const CharacteristicElement c(m, coords);
  SWRow row;
  row.c = coords;
  row.w_c = expected_dim_abelian(m, c);

  // b1 = 0, so lambda is the unit scalar in degree 0. The jump does not
  // depend on H0, so any ray serves as the orientation witness.
  const PeriodRay &witness =
      use_psc ? *facts.psc_ray : facts.kahler->kahler_ray;
  row.wall_delta = wall_crossing_delta(m, c, ExtForm::scalar(0, 1),
                                       OrientationData{1, witness});

  if (row.w_c < 0) {
    row.sw_plus = 0;
    row.sw_minus = 0;
    row.source = "dimension";
    return row;
  }

  Candidate psc, kahler;
  if (use_psc) {
    // The invariant vanishes in the chamber of (psc metric, b = 0); the jump
    // fills the other one.
    const PeriodRay h0_ray(m, facts.psc_ray->in_chosen_component(), 1);
    switch (classify_chamber(m, c, h0_ray, RatVector(m.b2()))) {
    case Chamber::plus:
      psc = {Integer(0), Integer(-row.wall_delta)};
      break;
    case Chamber::minus:
      psc = {row.wall_delta, Integer(0)};
      break;
    case Chamber::on_wall:
      break;
    }
  }
  if (use_kahler) {
    const KahlerFacts &kf = *facts.kahler;
    IntVector line(coords.size());
    for (std::size_t i = 0; i < line.size(); ++i)
      line[i] = exact_div(coords[i] + kf.canonical_class[i], 2,
                          "line bundle class (c + K)/2");
    const SWPair v = sw_pg0_invariants(m, kf, line).values;
    // SW^+-_{-H0} = -SW^-+_{H0}.
    if (kf.kahler_ray.component_sign() == 1)
      kahler = {v.plus, v.minus};
    else
      kahler = {Integer(-v.minus), Integer(-v.plus)};
  }

  if (psc.determined() && kahler.determined()) {
    if (*psc.plus != *kahler.plus || *psc.minus != *kahler.minus)
      throw DomainError("positive scalar curvature and Kahler rules disagree at "
                        "c=(" + render(coords) + ")");
    row.source = "psc+kahler";
  } else if (psc.determined()) {
    row.source = "psc";
  } else if (kahler.determined()) {
    psc = kahler;
    row.source = "kahler";
  } else {
    row.source = "undetermined";
    return row;
  }
  row.sw_plus = psc.plus;
  row.sw_minus = psc.minus;
  if (*row.sw_plus - *row.sw_minus != row.wall_delta)
    throw std::logic_error("SW+ - SW- differs from the wall-crossing jump at c=(" +
                           render(coords) + ")");
  return row;
}

} // namespace

std::vector<SWRow> sw_table(const ManifoldTopology &m, const SWFacts &facts,
                            std::vector<IntVector> classes, TablePath path) {
  if (m.b1 != 0 || m.bplus != 1)
    throw DomainError("invariant tables need b1 = 0 and bplus = 1");
  const bool have_psc = facts.psc_ray.has_value();
  const bool have_kahler = facts.kahler.has_value() && facts.kahler->pg_zero;
  bool use_psc = have_psc && path != TablePath::kahler;
  bool use_kahler = have_kahler && path != TablePath::psc;
  if (path == TablePath::psc && !have_psc)
    throw DomainError("no positive scalar curvature ray supplied");
  if (path == TablePath::kahler && !have_kahler)
    throw DomainError("no Kahler facts with p_g = 0 supplied");
  if (!use_psc && !use_kahler)
    throw DomainError("insufficient facts: supply a positive scalar curvature "
                      "ray or Kahler facts with p_g = 0");

  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  std::vector<SWRow> rows(classes.size());
  std::vector<std::exception_ptr> errors(classes.size());
  auto fill = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < classes.size(); i += step) {
      try {
        rows[i] = table_row(m, facts, classes[i], use_psc, use_kahler);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      classes.size() < 256
          ? 1
          : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  if (workers == 1) {
    fill(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(fill, w, workers);
  }
  // Report the error of the smallest failing class, independent of timing.
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return rows;
}

} // namespace swinv
