#include "ptkdv/runner.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptkdv/conserved.hpp"
#include "ptkdv/errors.hpp"
#include "ptkdv/numerics.hpp"
#include "ptkdv/profile.hpp"
#include "ptkdv/stability.hpp"
#include "ptkdv/variational.hpp"

namespace ptkdv {

namespace {

using nlohmann::json;

ModelParams params_of(const RunConfig& cfg) {
  return make_params(cfg.l, cfg.p, cfg.m, cfg.c);
}

// P(c) is monotone in c away from the marginal case, so the momentum target
// is resolved by bracketed root finding rather than the closed-form exponent.
double resolve_velocity(const RunConfig& cfg) {
  if (!cfg.momentum) return cfg.c;
  const double target = *cfg.momentum;
  if (target <= 0) throw InvalidConfig("momentum must be positive");
  ModelParams probe = make_params(cfg.l, cfg.p, cfg.m, 1.0);
  const auto ex = scaling_exponents(probe);
  if (std::abs(ex.i2) < 1e-14)
    throw InadmissibleParams(
        "momentum is independent of velocity here; specify c directly");
  const double sign = ex.i2 > 0 ? 1.0 : -1.0;  // orient P(c) increasing
  auto P_of_c = [&](double cv) {
    ModelParams mp = probe;
    mp.c = cv;
    return sign * conserved_analytic(mp).P;
  };
  return invert_monotone(P_of_c, sign * target, 1e-6, 1e6, 1e-13);
}

json params_json(const ModelParams& mp) {
  return json{{"l", mp.l}, {"p", mp.p}, {"m", mp.m}, {"alpha", mp.alpha}, {"c", mp.c}};
}

json conserved_json(const ConservedSet& cs) {
  json j{{"M", cs.M}, {"P", cs.P}, {"E", cs.E}};
  if (cs.r)
    j["r"] = *cs.r;
  else
    j["r"] = nullptr;
  return j;
}

double rel_gap(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0 ? 0.0 : std::abs(a - b) / s;
}

ProfileFamily pick_family(const RunConfig& cfg, const ModelParams& mp) {
  if (cfg.family.empty()) return default_family(mp);
  return family_from_name(cfg.family);
}

json trial_json(const TrialFunction& t) {
  return json{{"family", trial_family_name(t.family)}, {"shape", t.shape},
              {"A", t.A},       {"beta", t.beta},
              {"P", t.P},       {"H", t.H},
              {"c", t.c},       {"iterations", t.iterations}};
}

int cmd_profile(const RunConfig& cfg, std::ostream& os) {
  ModelParams mp = params_of(cfg);
  mp.c = resolve_velocity(cfg);
  const ProfileFamily fam = pick_family(cfg, mp);
  const CompactonProfile prof = build_profile(mp, fam, cfg.grid_points);
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "csv") {
    write_csv(prof, os);
    return 0;
  }
  if (format != "json") throw InvalidConfig("format must be csv or json");
  const WeakSolutionCheck wk = weak_solution_check(prof);
  json j;
  j["params"] = params_json(mp);
  if (cfg.momentum) j["resolved_from_momentum"] = *cfg.momentum;
  j["family"] = family_name(prof.family);
  j["A"] = prof.A;
  j["beta_w"] = prof.beta_w;
  j["y_half"] = prof.y_half;
  j["a_exp"] = prof.a_exp;
  j["tau"] = prof.tau;
  j["first_integral_residual"] = first_integral_residual(prof);
  j["weak_solution"] = {
      {"continuous", wk.continuous}, {"edge_flux", wk.edge_flux}, {"ok", wk.ok}};
  j["grid"] = {{"y", prof.grid.y}, {"f", prof.grid.f}, {"fprime", prof.grid.fp}};
  os << j.dump(2) << "\n";
  return 0;
}

int cmd_conserved(const RunConfig& cfg, std::ostream& os) {
  ModelParams mp = params_of(cfg);
  mp.c = resolve_velocity(cfg);
  const CompactonProfile prof = build_profile(mp, pick_family(cfg, mp), cfg.grid_points);
  const ConservedSet an = conserved_analytic(mp);
  const ConservedSet qu = conserved_quadrature(prof, cfg.tol);
  const IntegralSet ints = integral_set(prof, cfg.tol);
  const RelationResiduals rr = check_relations(mp, ints);
  json j;
  j["params"] = params_json(mp);
  if (cfg.momentum) j["resolved_from_momentum"] = *cfg.momentum;
  j["analytic"] = conserved_json(an);
  j["quadrature"] = conserved_json(qu);
  j["agreement"] = {{"M", rel_gap(an.M, qu.M)},
                    {"P", rel_gap(an.P, qu.P)},
                    {"E", rel_gap(an.E, qu.E)}};
  j["integrals"] = {{"I2", ints.I2}, {"Il", ints.Il}, {"J", ints.J}};
  j["relations"] = {{"balance", rr.balance},
                    {"gradient_vs_momentum", rr.gradient_vs_momentum},
                    {"potential_vs_momentum", rr.potential_vs_momentum}};
  os << j.dump(2) << "\n";
  return 0;
}

int cmd_stability(const RunConfig& cfg, std::ostream& os) {
  ModelParams mp = params_of(cfg);
  mp.c = resolve_velocity(cfg);
  const ProfileFamily fam = pick_family(cfg, mp);
  const StabilityReport rep = stability_report(mp, fam, cfg.grid_points);
  const double lc = lc_derivative_identity(mp, fam, 1e-3 * mp.c, cfg.grid_points);
  json j;
  j["params"] = params_json(mp);
  if (cfg.momentum) j["resolved_from_momentum"] = *cfg.momentum;
  j["regime"] = {{"compacton_admissible", rep.regime.compacton_admissible},
                 {"width_independent", rep.regime.width_independent},
                 {"stable_window", rep.regime.stable_window},
                 {"marginal", rep.regime.marginal}};
  j["dPdc_exponent"] = rep.dPdc_exponent;
  j["phi2_rho_half"] = {{"formula", rep.phi2_formula}, {"numeric", rep.phi2_numeric}};
  j["derrick"] = {{"oracle", rep.derrick_oracle}, {"closed_form", rep.derrick_closed}};
  j["lyapunov_gap"] = rep.lyapunov;
  j["goldstone_residual"] = rep.goldstone;
  j["dfdc_identity_residual"] = lc;
  j["stable"] = rep.stable;
  os << j.dump(2) << "\n";
  return 0;
}

int cmd_variational(const RunConfig& cfg, std::ostream& os) {
  ModelParams mp = params_of(cfg);
  mp.c = resolve_velocity(cfg);
  const double P = cfg.momentum ? *cfg.momentum : conserved_analytic(mp).P;
  const CompactonProfile exact = build_profile(mp, pick_family(cfg, mp), cfg.grid_points);
  json j;
  j["params"] = params_json(mp);
  j["momentum"] = P;
  j["exact"] = {{"A", exact.A},
                {"beta_w", exact.beta_w},
                {"y_half", exact.y_half},
                {"E", conserved_analytic(mp).E}};
  auto add = [&](TrialFamily fam) {
    const TrialFunction t = fam == TrialFamily::post_gaussian
                                ? optimize_post_gaussian(mp, P)
                                : optimize_cos_power(mp, P);
    json tj = trial_json(t);
    const ProfileDistance d = compare_profiles(exact, t);
    tj["distance_to_exact"] = {{"l2", d.l2}, {"sup", d.sup}};
    j["trials"][trial_family_name(fam)] = tj;
  };
  if (cfg.trial == "both") {
    add(TrialFamily::post_gaussian);
    add(TrialFamily::cos_power);
  } else {
    add(trial_family_from_name(cfg.trial));
  }
  os << j.dump(2) << "\n";
  return 0;
}

int cmd_scaling(const RunConfig& cfg, std::ostream& os) {
  ModelParams mp = params_of(cfg);
  mp.c = resolve_velocity(cfg);
  const auto ex = scaling_exponents(mp);
  const RegimeReport reg = classify(mp);
  json j;
  j["params"] = params_json(mp);
  j["exponents"] = {
      {"beta", ex.beta_scale ? json(*ex.beta_scale) : json(nullptr)},
      {"eta", ex.eta ? json(*ex.eta) : json(nullptr)},
      {"i1", ex.i1},
      {"i2", ex.i2},
      {"r", ex.r ? json(*ex.r) : json(nullptr)}};
  j["regime"] = {{"compacton_admissible", reg.compacton_admissible},
                 {"width_independent", reg.width_independent},
                 {"stable_window", reg.stable_window},
                 {"marginal", reg.marginal}};

  // numeric check across velocities: width ~ c^i1, P ~ c^i2, E = c P / r
  const std::vector<double> cs = {mp.c / 2.0, mp.c, 2.0 * mp.c};
  double dev_w = 0, dev_p = 0, dev_e = 0;
  double w0 = 0, p0 = 0;
  bool first = true;
  for (double cv : cs) {
    ModelParams q = mp;
    q.c = cv;
    const HyperellipticParams hp = hyperelliptic_params(q);
    const ConservedSet an = conserved_analytic(q);
    const double w = z_halfwidth(hp.tau, q.m) / hp.beta * std::pow(cv, -ex.i1);
    const double pn = an.P * std::pow(cv, -ex.i2);
    if (first) {
      w0 = w;
      p0 = pn;
      first = false;
    }
    dev_w = std::max(dev_w, rel_gap(w, w0));
    dev_p = std::max(dev_p, rel_gap(pn, p0));
    if (ex.r) dev_e = std::max(dev_e, rel_gap(an.E, cv * an.P / *ex.r));
  }
  j["verification"] = {{"width_scaling_deviation", dev_w},
                       {"momentum_scaling_deviation", dev_p},
                       {"energy_relation_deviation", ex.r ? json(dev_e) : json(nullptr)}};
  os << j.dump(2) << "\n";
  return 0;
}

struct SweepRow {
  double axis_value;
  double A, width, M, P, E;
};

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
  if (cfg.steps < 2) throw InvalidConfig("sweep needs at least 2 steps");
  std::vector<SweepRow> rows;
  if (cfg.axis == "c") {
    if (cfg.from <= 0 || cfg.to <= cfg.from)
      throw InvalidConfig("sweep over c needs 0 < from < to");
    for (int k = 0; k < cfg.steps; ++k) {
      const double t = static_cast<double>(k) / (cfg.steps - 1);
      const double cv = cfg.from * std::pow(cfg.to / cfg.from, t);
      ModelParams mp = make_params(cfg.l, cfg.p, cfg.m, cv);
      const HyperellipticParams hp = hyperelliptic_params(mp);
      const ConservedSet an = conserved_analytic(mp);
      rows.push_back({cv, hp.A, z_halfwidth(hp.tau, mp.m) / hp.beta, an.M, an.P, an.E});
    }
  } else if (cfg.axis == "m") {
    const int m_lo = static_cast<int>(cfg.from), m_hi = static_cast<int>(cfg.to);
    if (m_lo < 2 || m_hi < m_lo || m_lo % 2 != 0)
      throw InvalidConfig("sweep over m needs even 2 <= from <= to");
    for (int mv = m_lo; mv <= m_hi; mv += 2) {
      ModelParams mp = make_params(cfg.l, cfg.p, mv, cfg.c);
      const HyperellipticParams hp = hyperelliptic_params(mp);
      const ConservedSet an = conserved_analytic(mp);
      rows.push_back({static_cast<double>(mv), hp.A,
                      z_halfwidth(hp.tau, mv) / hp.beta, an.M, an.P, an.E});
    }
  } else {
    throw InvalidConfig("sweep axis must be c or m");
  }

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "csv") {
    char buf[256];
    os << cfg.axis << ",A,width,M,P,E\n";
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    r.axis_value, r.A, r.width, r.M, r.P, r.E);
      os << buf;
    }
    return 0;
  }
  if (format != "json") throw InvalidConfig("format must be csv or json");

  json j;
  j["axis"] = cfg.axis;
  j["params"] = params_json(make_params(cfg.l, cfg.p, cfg.m, cfg.c));
  json jr = json::array();
  for (const auto& r : rows)
    jr.push_back({{cfg.axis, r.axis_value}, {"A", r.A}, {"width", r.width},
                  {"M", r.M},  {"P", r.P},  {"E", r.E}});
  j["rows"] = jr;

  if (cfg.axis == "c") {
    // log-log slope fits against the predicted exponents
    auto slope = [&](auto get) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const int n = static_cast<int>(rows.size());
      for (const auto& r : rows) {
        const double x = std::log(r.axis_value), y = std::log(std::abs(get(r)));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
      }
      return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const auto ex = scaling_exponents(make_params(cfg.l, cfg.p, cfg.m, cfg.c));
    json fits;
    fits["width"] = {{"fit", slope([](const SweepRow& r) { return r.width; })},
                     {"predicted", ex.i1}};
    fits["P"] = {{"fit", slope([](const SweepRow& r) { return r.P; })},
                 {"predicted", ex.i2}};
    if (rows.front().E != 0)
      fits["E"] = {{"fit", slope([](const SweepRow& r) { return r.E; })},
                   {"predicted", 1.0 + ex.i2}};
    j["scaling_fits"] = fits;
  }
  os << j.dump(2) << "\n";
  return 0;
}

int dispatch(const RunConfig& cfg, std::ostream& os) {
  if (cfg.command == "profile") return cmd_profile(cfg, os);
  if (cfg.command == "conserved") return cmd_conserved(cfg, os);
  if (cfg.command == "stability") return cmd_stability(cfg, os);
  if (cfg.command == "variational") return cmd_variational(cfg, os);
  if (cfg.command == "scaling") return cmd_scaling(cfg, os);
  if (cfg.command == "sweep") return cmd_sweep(cfg, os);
  throw InvalidConfig("unknown command: " + cfg.command);
}

void emit_error(std::ostream& err, const char* type, const std::string& msg) {
  err << json{{"error", {{"type", type}, {"message", msg}}}}.dump() << "\n";
}

}  // namespace

RunConfig parse_config_json(std::istream& is) {
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    cfg.command = j.at("command").get<std::string>();
    cfg.l = j.value("l", cfg.l);
    cfg.p = j.value("p", cfg.p);
    cfg.m = j.value("m", cfg.m);
    cfg.c = j.value("c", cfg.c);
    if (j.contains("momentum")) cfg.momentum = j["momentum"].get<double>();
    cfg.grid_points = j.value("grid_points", cfg.grid_points);
    cfg.family = j.value("family", cfg.family);
    cfg.trial = j.value("trial", cfg.trial);
    cfg.format = j.value("format", cfg.format);
    cfg.out_path = j.value("out", cfg.out_path);
    cfg.tol = j.value("tol", cfg.tol);
    cfg.axis = j.value("axis", cfg.axis);
    cfg.from = j.value("from", cfg.from);
    cfg.to = j.value("to", cfg.to);
    cfg.steps = j.value("steps", cfg.steps);
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("bad config field: ") + e.what());
  }
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.out_path.empty()) {
      std::ofstream of(cfg.out_path);
      if (!of) throw InvalidConfig("cannot open output file: " + cfg.out_path);
      return dispatch(cfg, of);
    }
    return dispatch(cfg, out);
  } catch (const InvalidConfig& e) {
    emit_error(err, "invalid_config", e.what());
    return 2;
  } catch (const InadmissibleParams& e) {
    emit_error(err, "inadmissible_params", e.what());
    return 2;
  } catch (const DomainError& e) {
    emit_error(err, "domain_error", e.what());
    return 2;
  } catch (const ConvergenceFailure& e) {
    emit_error(err, "convergence_failure", e.what());
    return 3;
  } catch (const Error& e) {
    emit_error(err, "numerical_error", e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error(err, "internal_error", e.what());
    return 3;
  }
}

}  // namespace ptkdv
