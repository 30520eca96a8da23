#include "swinv/commands.hpp"

#include "swinv/chambers.hpp"
#include "swinv/extalg.hpp"
#include "swinv/kahler.hpp"
#include "swinv/lattice.hpp"
#include "swinv/manifold_file.hpp"
#include "swinv/report.hpp"
#include "swinv/stability.hpp"
#include "swinv/topology.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

namespace swinv::cli {

namespace {

const char *yes_no(bool b) { return b ? "true" : "false"; }

// Wraps argument parsing so errors name the offending option.
template <class F> auto arg(const std::string &option, F &&f) {
  try {
    return f();
  } catch (const ParseError &e) {
    throw ParseError(option + ": " + e.what(), 0, e.column());
  }
}

ManifoldFile load(const std::string &path) {
  ManifoldFile f = read_manifold_file(path);
  require_valid(f.topology);
  if (f.kahler) {
    const auto report = validate_kahler(f.topology, *f.kahler);
    if (!report.empty())
      throw DomainError("invalid Kahler facts: " + report.front().invariant +
                        " (" + report.front().detail + ")");
  }
  return f;
}

// Holds every option value; one instance per run().
struct Options {
  std::string format = "text";
  std::string file;

  bool echo = false;

  std::string c, b, h, c1, m, lambda;
  std::string p, p1;
  bool pu2 = false;
  int component = 1;
  int o1 = 1;
  long max_l = -1;
  std::string cmin, cmax;
  std::string via = "auto";
  std::string sup;

  // stability
  std::string degree, mu_e, mu_div, e_stability = "neither", m_under, m_over;
  long rank = 1;
  bool phi_zero = false;
  std::string sub_slopes, quot_slopes;
  std::string poly_p, poly_q, pe, pker;
  long rk_e = 1, rk_ker = 1;
  bool injective = false, eps_iso = false;
  std::string ker;
  std::vector<std::string> subs;
};

struct Outcome {
  Report report;
  int code = ok;
  std::string raw; // emitted verbatim in text mode when non-empty
};

Outcome cmd_validate(const Options &o) {
  ManifoldFile f = read_manifold_file(o.file);
  ValidationReport violations = validate_topology(f.topology);
  if (f.kahler && violations.empty())
    for (auto &v : validate_kahler(f.topology, *f.kahler))
      violations.push_back(std::move(v));

  Outcome out;
  out.report.command = "validate";
  if (!violations.empty()) {
    out.report.tabular = true;
    out.report.columns = {"violation", "detail"};
    for (const auto &v : violations)
      out.report.add_row({v.invariant, v.detail});
    out.code = domain_error;
    return out;
  }
  const ManifoldTopology &t = f.topology;
  if (o.echo) {
    out.raw = write_manifold_file(f);
    out.report.columns = {"file"};
    out.report.add_row({out.raw});
    return out;
  }
  out.report.columns = {"name",   "valid",     "b1",          "bplus",
                        "bminus", "euler",     "signature",   "tors2_order",
                        "kahler", "psc"};
  out.report.add_row({t.name, "true", std::to_string(t.b1),
                      std::to_string(t.bplus), std::to_string(t.bminus),
                      render(t.euler), render(t.signature),
                      render(t.tors2_order), f.kahler ? "present" : "absent",
                      f.psc_ray ? "present" : "absent"});
  return out;
}

Outcome cmd_dim(const Options &o) {
  const ManifoldFile f = load(o.file);
  const ManifoldTopology &t = f.topology;
  Outcome out;
  out.report.command = "dim";
  if (o.pu2 == !o.c.empty())
    throw ParseError("dim: give exactly one of --c or --pu2");
  if (o.pu2) {
    if (o.p1.empty() || o.c1.empty())
      throw ParseError("dim --pu2 needs --p1 and --c1");
    const Integer p1 = arg("--p1", [&] { return parse_integer(o.p1); });
    const IntVector c1 = arg("--c1", [&] { return parse_int_vector(o.c1); });
    const Integer chi = expected_dim_pu2(t, p1, c1);
    out.report.columns = {"p1", "c1", "c1_squared", "admissible", "chi"};
    out.report.add_row({render(p1), render(c1),
                        render(lattice::square(t.form, c1)), "true",
                        render(chi)});
    return out;
  }
  const IntVector cv = arg("--c", [&] { return parse_int_vector(o.c); });
  const CharacteristicElement c(t, cv);
  out.report.columns = {"c",       "c_squared", "w_c",
                        "c2_plus", "c2_minus",  "spinc_per_chern"};
  out.report.add_row({render(cv), render(lattice::square(t.form, cv)),
                      render(expected_dim_abelian(t, c)),
                      render(c2_spinor_bundle(t, c, SpinorSign::plus)),
                      render(c2_spinor_bundle(t, c, SpinorSign::minus)),
                      render(spinc_count_per_chern(t))});
  return out;
}

Outcome cmd_admissible(const Options &o) {
  const ManifoldFile f = load(o.file);
  const Integer p = arg("--p", [&] { return parse_integer(o.p); });
  Outcome out;
  out.report.command = "admissible";
  if (o.c.empty()) {
    out.report.columns = {"structure", "p", "admissible"};
    out.report.add_row(
        {"Spin^Sp(1)", render(p), yes_no(spin_sp1_admissible(f.topology, p))});
  } else {
    const IntVector c = arg("--c", [&] { return parse_int_vector(o.c); });
    out.report.columns = {"structure", "p", "c", "admissible"};
    out.report.add_row({"Spin^U(2)", render(p), render(c),
                        yes_no(spin_u2_admissible(f.topology, p, c))});
  }
  return out;
}

Outcome cmd_strata(const Options &o) {
  const ManifoldFile f = load(o.file);
  const Integer p1 = arg("--p1", [&] { return parse_integer(o.p1); });
  const IntVector c1 = arg("--c1", [&] { return parse_int_vector(o.c1); });
  std::optional<long> cap;
  if (o.max_l >= 0)
    cap = o.max_l;
  Outcome out;
  out.report.command = "strata";
  out.report.tabular = true;
  out.report.notes = {{"chi", render(expected_dim_pu2(f.topology, p1, c1))}};
  out.report.columns = {"l", "p1_l", "dim"};
  for (const auto &s : uhlenbeck_strata(f.topology, p1, c1, cap))
    out.report.add_row({std::to_string(s.level), render(s.p1),
                        render(s.dimension)});
  return out;
}

Outcome cmd_chamber(const Options &o) {
  const ManifoldFile f = load(o.file);
  const ManifoldTopology &t = f.topology;
  const IntVector cv = arg("--c", [&] { return parse_int_vector(o.c); });
  const RatVector hv = arg("--h", [&] { return parse_rat_vector(o.h); });
  const RatVector b = o.b.empty() ? RatVector(t.b2())
                                  : arg("--b", [&] { return parse_rat_vector(o.b); });
  const CharacteristicElement c(t, cv);
  const PeriodRay ray(t, hv, o.component);
  const Chamber local = classify_chamber(t, c, ray, b);
  const Chamber in_h0 =
      classify_chamber(t, c, PeriodRay(t, ray.in_chosen_component(), 1), b);
  Outcome out;
  out.report.command = "chamber";
  out.report.columns = {"c",       "b",        "h",    "component",
                        "pairing", "chamber",  "c_good", "chamber_H0"};
  out.report.add_row({render(cv), render(b), render(hv),
                      std::to_string(o.component),
                      render(wall_pairing(t, cv, hv, b)), to_string(local),
                      yes_no(is_c_good(t, c, ray, b)), to_string(in_h0)});
  return out;
}

Outcome cmd_uc(const Options &o) {
  const ManifoldFile f = load(o.file);
  const IntVector cv = arg("--c", [&] { return parse_int_vector(o.c); });
  const CharacteristicElement c(f.topology, cv);
  Outcome out;
  out.report.command = "uc";
  out.report.columns = {"c", "u_c"};
  out.report.add_row({render(cv), u_c(f.topology, c).str()});
  return out;
}

Outcome cmd_wallcross(const Options &o) {
  const ManifoldFile f = load(o.file);
  const ManifoldTopology &t = f.topology;
  const IntVector cv = arg("--c", [&] { return parse_int_vector(o.c); });
  const CharacteristicElement c(t, cv);
  const ExtForm lambda =
      arg("--lambda", [&] { return ExtForm::parse(t.b1, o.lambda); });
  if (o.o1 != 1 && o.o1 != -1)
    throw DomainError("--o1 must be 1 or -1");
  // The jump is independent of H0; any positive ray witnesses it.
  std::optional<PeriodRay> h0 = f.psc_ray;
  if (!h0 && f.kahler)
    h0 = f.kahler->kahler_ray;
  if (!h0) {
    for (std::size_t i = 0; i < t.b2() && !h0; ++i)
      if (t.form[i][i] > 0) {
        RatVector e(t.b2());
        e[i] = 1;
        h0 = PeriodRay(t, e, 1);
      }
  }
  if (!h0)
    throw DomainError("wallcross: supply a [psc] or [kahler] ray to fix H0");
  const Integer delta = wall_crossing_delta(t, c, lambda, OrientationData{o.o1, *h0});
  Outcome out;
  out.report.command = "wallcross";
  out.report.columns = {"c", "w_c", "lambda", "u_c", "o1", "delta"};
  out.report.add_row({render(cv), render(expected_dim_abelian(t, c)),
                      lambda.str(), u_c(t, c).str(), std::to_string(o.o1),
                      render(delta)});
  return out;
}

std::vector<IntVector> box_classes(const ManifoldTopology &t,
                                   const Integer &lo, const Integer &hi) {
  if (lo > hi)
    throw DomainError("--cmin must not exceed --cmax");
  const Integer width = hi - lo + 1;
  Integer total = 1;
  for (std::size_t i = 0; i < t.b2(); ++i)
    total *= width;
  if (total > 1000000)
    throw DomainError("class range too large (" + total.str() + " vectors)");
  std::vector<IntVector> out;
  IntVector v(t.b2(), lo);
  while (true) {
    if (is_characteristic(t, v))
      out.push_back(v);
    std::size_t i = t.b2();
    while (i > 0) {
      --i;
      if (v[i] < hi) {
        ++v[i];
        break;
      }
      v[i] = lo;
      if (i == 0) {
        i = t.b2() + 1;
        break;
      }
    }
    if (i == t.b2() + 1 || t.b2() == 0)
      break;
  }
  return out;
}

Outcome cmd_sw_table(const Options &o) {
  const ManifoldFile f = load(o.file);
  const ManifoldTopology &t = f.topology;
  const Integer lo = arg("--cmin", [&] { return parse_integer(o.cmin); });
  const Integer hi = arg("--cmax", [&] { return parse_integer(o.cmax); });
  TablePath path = TablePath::automatic;
  if (o.via == "psc")
    path = TablePath::psc;
  else if (o.via == "kahler")
    path = TablePath::kahler;
  const auto rows = sw_table(t, f.facts(), box_classes(t, lo, hi), path);

  Outcome out;
  out.report.command = "sw-table";
  out.report.tabular = true;
  out.report.notes = {{"manifold", t.name}, {"orientation", "O1 standard, H0 from supplied rays"}};
  out.report.columns = {"c", "w_c", "SW+", "SW-", "delta", "source"};
  auto value = [](const std::optional<Integer> &v) {
    return v ? render(*v) : std::string("undetermined");
  };
  for (const auto &r : rows)
    out.report.add_row({render(r.c), render(r.w_c), value(r.sw_plus),
                        value(r.sw_minus), render(r.wall_delta), r.source});
  return out;
}

Outcome cmd_kahler(const Options &o) {
  const ManifoldFile f = load(o.file);
  const ManifoldTopology &t = f.topology;
  if (!f.kahler)
    throw DomainError("kahler: the file has no [kahler] section");
  const KahlerFacts &kf = *f.kahler;
  const IntVector mv = arg("--m", [&] { return parse_int_vector(o.m); });
  const RatVector b = o.b.empty() ? RatVector(t.b2())
                                  : arg("--b", [&] { return parse_rat_vector(o.b); });
  Outcome out;
  out.report.command = "kahler";
  out.report.columns = {"m", "b", "side", "douady_nonempty"};
  std::vector<std::string> row = {
      render(mv), render(b),
      to_string(abelian_solvability_side(t, kf, mv, b)),
      yes_no(douady_nonempty(kf, mv))};
  if (kf.pg_zero && t.b1 == 0 && t.bplus == 1) {
    const auto inv = sw_pg0_invariants(t, kf, mv);
    for (const char *col : {"c", "w_c", "SW+", "SW-", "dou_K_minus_m_twist"})
      out.report.columns.emplace_back(col);
    row.push_back(render(inv.c));
    row.push_back(render(inv.w_c));
    row.push_back(render(inv.values.plus));
    row.push_back(render(inv.values.minus));
    row.push_back(std::to_string(inv.dou_k_minus_m_twist));
  }
  out.report.add_row(std::move(row));
  return out;
}

Outcome cmd_spinor_bound(const Options &o) {
  const Rational s = arg("--sup", [&] { return parse_rational(o.sup); });
  Outcome out;
  out.report.command = "spinor-bound";
  out.report.columns = {"sup_term", "bound"};
  out.report.add_row({render(s), render(spinor_sup_bound(s))});
  return out;
}

stability::HilbertPoly poly_arg(const std::string &option,
                                const std::string &text) {
  return stability::HilbertPoly::from_descending(
      arg(option, [&] { return parse_rat_vector(text); }));
}

// "rank:c_d,...,c_0"
stability::SheafData sheaf_arg(const std::string &option,
                               const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError(option + ": expected rank:coefficients, got '" + text + "'");
  const Integer rk = arg(option, [&] { return parse_integer(text.substr(0, colon)); });
  if (rk < 1 || rk > 1000000)
    throw DomainError(option + ": rank must be positive");
  return {static_cast<long>(rk), poly_arg(option, text.substr(colon + 1))};
}

Outcome cmd_stab_slope(const Options &o) {
  const Rational d = arg("--degree", [&] { return parse_rational(o.degree); });
  Outcome out;
  out.report.command = "stability slope";
  out.report.columns = {"degree", "rank", "slope"};
  out.report.add_row({render(d), std::to_string(o.rank),
                      render(stability::slope({d, o.rank}))});
  return out;
}

Outcome cmd_stab_pair(const Options &o) {
  using stability::EStability;
  EStability es;
  if (o.e_stability == "stable")
    es = EStability::stable;
  else if (o.e_stability == "polystable")
    es = EStability::polystable;
  else if (o.e_stability == "neither")
    es = EStability::neither;
  else
    throw ParseError("--e-stability must be stable, polystable or neither");
  const Rational mu_e = arg("--mu-e", [&] { return parse_rational(o.mu_e); });
  std::optional<Rational> mu_div;
  if (!o.mu_div.empty())
    mu_div = arg("--mu-div", [&] { return parse_rational(o.mu_div); });
  Outcome out;
  out.report.command = "stability pair";
  out.report.columns = {"phi_zero", "e_stability", "mu_div", "mu_e", "status"};
  out.report.add_row(
      {yes_no(o.phi_zero), o.e_stability, mu_div ? render(*mu_div) : "-",
       render(mu_e),
       stability::to_string(
           stability::oriented_pair_status_rank2(o.phi_zero, es, mu_div, mu_e))});
  return out;
}

Outcome cmd_stab_rho(const Options &o) {
  Rational lo;
  std::optional<Rational> hi;
  if (!o.m_under.empty()) {
    lo = arg("--m-under", [&] { return parse_rational(o.m_under); });
    if (!o.m_over.empty())
      hi = arg("--m-over", [&] { return parse_rational(o.m_over); });
  } else {
    if (o.mu_e.empty())
      throw ParseError("stability rho needs --m-under or --mu-e");
    const auto bounds = stability::rho_bounds(
        arg("--mu-e", [&] { return parse_rational(o.mu_e); }),
        arg("--sub-slopes", [&] { return parse_rat_vector(o.sub_slopes); }),
        arg("--quot-slopes", [&] { return parse_rat_vector(o.quot_slopes); }));
    lo = bounds.m_under;
    hi = bounds.m_over;
  }
  const auto iv = stability::rho_interval(lo, hi);
  Outcome out;
  out.report.command = "stability rho";
  out.report.columns = {"m_under", "m_over", "nonempty", "interval"};
  out.report.add_row(
      {render(lo), hi ? render(*hi) : "inf", yes_no(iv.has_value()),
       iv ? "(" + render(iv->lo) + ", " + (iv->hi ? render(*iv->hi) : "inf") + ")"
          : "empty"});
  return out;
}

Outcome cmd_stab_compare(const Options &o) {
  const auto p = poly_arg("--p", o.poly_p);
  const auto q = poly_arg("--q", o.poly_q);
  Outcome out;
  out.report.command = "stability compare";
  out.report.columns = {"p", "q", "order"};
  out.report.add_row(
      {p.str(), q.str(), stability::to_string(stability::poly_compare(p, q))});
  return out;
}

Outcome cmd_stab_delta(const Options &o) {
  const auto pe = poly_arg("--pe", o.pe);
  const auto pk = poly_arg("--pker", o.pker);
  Outcome out;
  out.report.command = "stability delta";
  out.report.columns = {"delta"};
  out.report.add_row({stability::delta_e_phi(pe, o.rk_e, pk, o.rk_ker).str()});
  return out;
}

Outcome cmd_stab_semistable(const Options &o) {
  stability::PairProfile p;
  p.rk_e = o.rk_e;
  p.p_e = poly_arg("--pe", o.pe);
  p.phi_injective = o.injective;
  p.epsilon_iso = o.eps_iso;
  if (!o.ker.empty())
    p.kermax = sheaf_arg("--ker", o.ker);
  for (const auto &s : o.subs)
    p.subsheaves.push_back(sheaf_arg("--sub", s));
  const bool ss = stability::oriented_sheaf_semistable(p);
  Outcome out;
  out.report.command = "stability semistable";
  out.report.columns = {"delta", "semistable"};
  out.report.add_row(
      {p.kermax ? stability::delta_e_phi(p.p_e, p.rk_e, p.kermax->hilbert,
                                         p.kermax->rank)
                      .str()
                : "-",
       yes_no(ss)});
  return out;
}

void setup(CLI::App &app, Options &o,
           std::function<Outcome(const Options &)> &handler) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.footer("Vectors are comma-separated coordinates in the basis of the "
             "intersection form, e.g. --c 3 or --c=-1,3. Rationals are p or p/q.\n"
             "Exit codes: 0 ok, 1 internal error, 2 domain error, 3 parse error.");

  auto file_cmd = [&](const char *name, const char *help,
                      Outcome (*fn)(const Options &)) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Manifold file")->required();
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  auto *validate = file_cmd("validate", "Check a manifold file", cmd_validate);
  validate->add_flag("--echo", o.echo, "Print the canonical form of the file");

  auto *dim = file_cmd("dim", "Expected dimensions", cmd_dim);
  dim->add_option("--c", o.c, "Characteristic class");
  dim->add_flag("--pu2", o.pu2, "PU(2) expected dimension");
  dim->add_option("--p1", o.p1, "p1 of the PU(2) bundle");
  dim->add_option("--c1", o.c1, "c1 of the determinant line");

  auto *adm = file_cmd("admissible", "Spin^Sp(1) / Spin^U(2) admissibility",
                       cmd_admissible);
  adm->add_option("--p", o.p, "p1 value")->required();
  adm->add_option("--c", o.c, "Determinant class (selects Spin^U(2))");

  auto *strata = file_cmd("strata", "Uhlenbeck strata", cmd_strata);
  strata->add_option("--p1", o.p1)->required();
  strata->add_option("--c1", o.c1)->required();
  strata->add_option("--max-l", o.max_l, "Highest level to list");

  auto *chamber = file_cmd("chamber", "Chamber of (h, b) for class c", cmd_chamber);
  // --h names the period ray here, so help is --help only.
  chamber->set_help_flag("--help", "Print this help message and exit");
  chamber->add_option("--c", o.c)->required();
  chamber->add_option("--h", o.h, "Period ray")->required();
  chamber->add_option("--b", o.b, "Twisting class (default 0)");
  chamber->add_option("--component", o.component, "1 if h lies in H0, -1 otherwise")
      ->check(CLI::IsMember({1, -1}));

  auto *uc = file_cmd("uc", "The degree-2 class u_c", cmd_uc);
  uc->add_option("--c", o.c)->required();

  auto *wc = file_cmd("wallcross", "Wall-crossing jump on a form", cmd_wallcross);
  wc->add_option("--c", o.c)->required();
  wc->add_option("--lambda", o.lambda, "Form, e.g. 1 or 2*a1^a2,-1*a3^a4")
      ->required();
  wc->add_option("--o1", o.o1, "Orientation of H^1");

  auto *table = file_cmd("sw-table", "SW+- table over a class range", cmd_sw_table);
  table->add_option("--cmin", o.cmin)->required();
  table->add_option("--cmax", o.cmax)->required();
  table->add_option("--via", o.via)->check(CLI::IsMember({"auto", "psc", "kahler"}));

  auto *kahler = file_cmd("kahler", "Kahler-side data for a line bundle class",
                          cmd_kahler);
  kahler->add_option("--m", o.m, "c1 of the line bundle")->required();
  kahler->add_option("--b", o.b, "Twisting class (default 0)");

  auto *bound = app.add_subcommand("spinor-bound", "max(0, sup(-s + |4 pi beta+|))");
  bound->add_option("--sup", o.sup)->required();
  bound->callback([&handler] { handler = cmd_spinor_bound; });

  auto *stab = app.add_subcommand("stability", "Stability predicates");
  stab->require_subcommand(1);
  stab->footer("Polynomials are descending coefficient lists: 1/2,1,0 is x^2/2 + x.");

  auto *slope = stab->add_subcommand("slope", "degree / rank");
  slope->add_option("--degree", o.degree)->required();
  slope->add_option("--rank", o.rank)->required();
  slope->callback([&handler] { handler = cmd_stab_slope; });

  auto *pair = stab->add_subcommand("pair", "Rank-2 oriented pair status");
  pair->add_flag("--phi-zero", o.phi_zero);
  pair->add_option("--e-stability", o.e_stability);
  pair->add_option("--mu-div", o.mu_div, "Slope of O(D_phi)");
  pair->add_option("--mu-e", o.mu_e)->required();
  pair->callback([&handler] { handler = cmd_stab_pair; });

  auto *rho = stab->add_subcommand("rho", "rho-stability interval");
  rho->add_option("--m-under", o.m_under);
  rho->add_option("--m-over", o.m_over);
  rho->add_option("--mu-e", o.mu_e);
  rho->add_option("--sub-slopes", o.sub_slopes);
  rho->add_option("--quot-slopes", o.quot_slopes);
  rho->callback([&handler] { handler = cmd_stab_rho; });

  auto *cmp = stab->add_subcommand("compare", "Eventual order of polynomials");
  cmp->add_option("--p", o.poly_p)->required();
  cmp->add_option("--q", o.poly_q)->required();
  cmp->callback([&handler] { handler = cmd_stab_compare; });

  auto *delta = stab->add_subcommand("delta", "P_E - (rk E / rk K) P_K");
  delta->add_option("--pe", o.pe)->required();
  delta->add_option("--rk-e", o.rk_e)->required();
  delta->add_option("--pker", o.pker)->required();
  delta->add_option("--rk-ker", o.rk_ker)->required();
  delta->callback([&handler] { handler = cmd_stab_delta; });

  auto *semi = stab->add_subcommand("semistable", "Oriented pair semistability");
  semi->add_option("--pe", o.pe)->required();
  semi->add_option("--rk-e", o.rk_e)->required();
  semi->add_flag("--injective", o.injective);
  semi->add_flag("--eps-iso", o.eps_iso);
  semi->add_option("--ker", o.ker, "rank:coefficients of ker(phi)_max");
  semi->add_option("--sub", o.subs, "rank:coefficients of a test subsheaf");
  semi->callback([&handler] { handler = cmd_stab_semistable; });
}

void print_parse_error(std::ostream &err, const ParseError &e) {
  err << "parse error";
  if (e.line())
    err << " at line " << e.line() << ", column " << e.column();
  else if (e.column())
    err << " at column " << e.column();
  err << ": " << e.what() << "\n";
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Seiberg-Witten invariant arithmetic for 4-manifolds", "swinv"};
  Options o;
  std::function<Outcome(const Options &)> handler;
  setup(app, o, handler);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  }

  try {
    Outcome result = handler(o);
    if (o.format == "json")
      out << render_json(result.report);
    else if (!result.raw.empty())
      out << result.raw;
    else
      out << render_text(result.report);
    return result.code;
  } catch (const ParseError &e) {
    print_parse_error(err, e);
    return parse_error;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

} // namespace swinv::cli
