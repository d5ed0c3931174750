#include "ptkdv/stability.hpp"

#include <cmath>

#include "ptkdv/errors.hpp"

namespace ptkdv {

namespace {

bool usable(const CompactonProfile& prof, std::size_t i) {
  const double y = prof.grid.y[i];
  if (std::abs(y) > 0.98 * prof.y_half) return false;
  if (prof.grid.f[i] < 1e-8 * prof.A) return false;
  // for m > 2 the profile is only C^1 at the crest: f'' diverges there, the
  // c1 coefficient carries (f')^{m-3} f'', and grid differences of f' lose
  // their accuracy, so a center band is excluded along with the edge band
  if (prof.params.m > 2 && std::abs(y) < 0.08 * prof.y_half) return false;
  return true;
}

}  // namespace

DPdcCriterion dPdc_criterion(const ModelParams& mp) {
  validate_params(mp);
  DPdcCriterion out;
  out.exponent = (mp.p + 3.0 * mp.m - mp.l) / (mp.m * (mp.l - 2.0));
  out.positive = out.exponent > 0;
  return out;
}

SecondVariation phi2_rho_half(const ModelParams& mp, const IntegralSet& ints) {
  const double l = mp.l, p = mp.p, c = mp.c;
  const int m = mp.m;
  SecondVariation out;
  const double P = ints.I2 / 2.0;
  out.formula = P * c * (l - 2.0) * (3.0 * m + p - l) * (3.0 * m + p - 2.0) /
                (4.0 * (l * (m - 1.0) + m + p));
  const double s1 = m - 1.0 + (m + p) / 2.0;
  const double s2 = l / 2.0 - 1.0;
  out.numeric = s1 * (s1 - 1.0) * ints.J / (m - 1.0) -
                s2 * (s2 - 1.0) * ints.Il / (l * (l - 1.0));
  return out;
}

DerrickSecond derrick_d2(const ModelParams& mp, const IntegralSet& ints) {
  const double l = mp.l, p = mp.p, c = mp.c;
  const int m = mp.m;
  DerrickSecond out;
  out.oracle = (m - 2.0) * ints.J - 2.0 * ints.Il / (l * (l - 1.0)) + c * ints.I2;
  out.closed_form =
      c * ints.I2 * m * (m - 1.0) * (l - 2.0) / (2.0 * (p + m + (m - 1.0) * l));
  return out;
}

double lyapunov_gap(const ModelParams& mp, const IntegralSet& ints) {
  const double l = mp.l, p = mp.p;
  const int m = mp.m;
  const double bound = (l - p - 3.0 * m) * ints.J / ((m - 1.0) * (l - 2.0));
  return hamiltonian(mp, ints) - bound;
}

LOperatorCoeffs build_L(const CompactonProfile& prof) {
  const ModelParams& mp = prof.params;
  const double l = mp.l, p = mp.p, c = mp.c;
  const int m = mp.m;
  LOperatorCoeffs out;
  const std::size_t n = prof.grid.y.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!usable(prof, i)) continue;
    const double y = prof.grid.y[i];
    const double f = prof.grid.f[i];
    const double g = prof.grid.fp[i];
    const double h = prof.fpp(y);

    double c0 = c - std::pow(f, l - 2.0);
    if (p * (p - 1.0) != 0.0)
      c0 -= p * (p - 1.0) * std::pow(f, p - 2.0) * std::pow(g, m);
    if (p != 0.0)
      c0 -= m * p * std::pow(f, p - 1.0) * std::pow(g, m - 2) * h;

    double c1 = 0.0;
    if (p != 0.0) c1 -= m * p * std::pow(f, p - 1.0) * std::pow(g, m - 1);
    if (m != 2) c1 -= m * (m - 2.0) * std::pow(f, p) * std::pow(g, m - 3) * h;

    const double c2 = -m * std::pow(f, p) * std::pow(g, m - 2);

    if (!std::isfinite(c0) || !std::isfinite(c1) || !std::isfinite(c2))
      throw SingularCoefficient("build_L: non-finite coefficient at y=" + std::to_string(y));
    out.y.push_back(y);
    out.c0.push_back(c0);
    out.c1.push_back(c1);
    out.c2.push_back(c2);
    out.grid_index.push_back(i);
  }
  return out;
}

double goldstone_residual(const CompactonProfile& prof) {
  const LOperatorCoeffs L = build_L(prof);
  const std::size_t n = prof.grid.y.size();
  const double h = prof.grid.y[1] - prof.grid.y[0];
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < L.y.size(); ++k) {
    const std::size_t i = L.grid_index[k];
    if (i == 0 || i + 1 >= n) continue;
    const double g = prof.grid.fp[i];
    const double gp = (prof.grid.fp[i + 1] - prof.grid.fp[i - 1]) / (2.0 * h);
    const double gpp = (prof.grid.fp[i + 1] - 2.0 * g + prof.grid.fp[i - 1]) / (h * h);
    const double Lg = L.c0[k] * g + L.c1[k] * gp + L.c2[k] * gpp;
    num += Lg * Lg;
    den += (prof.params.c * g) * (prof.params.c * g);
  }
  if (den == 0) throw SingularCoefficient("goldstone_residual: empty interior mask");
  return std::sqrt(num / den);
}

double lc_derivative_identity(const ModelParams& mp, ProfileFamily fam, double dc,
                              int n_grid) {
  if (dc <= 0 || dc >= mp.c) throw DomainError("lc_derivative_identity: need 0 < dc < c");
  const CompactonProfile base = build_profile(mp, fam, n_grid);
  ModelParams hi = mp, lo = mp;
  hi.c = mp.c + dc / 2.0;
  lo.c = mp.c - dc / 2.0;
  const CompactonProfile plus = build_profile(hi, fam, n_grid);
  const CompactonProfile minus = build_profile(lo, fam, n_grid);
  const LOperatorCoeffs L = build_L(base);

  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < L.y.size(); ++k) {
    const double y = L.y[k];
    const double f = base.grid.f[L.grid_index[k]];
    const double g = (plus.f(y) - minus.f(y)) / dc;
    const double gp = (plus.fp(y) - minus.fp(y)) / dc;
    const double gpp = (plus.fpp(y) - minus.fpp(y)) / dc;
    const double resid = L.c0[k] * g + L.c1[k] * gp + L.c2[k] * gpp + f;
    num += resid * resid;
    den += f * f;
  }
  if (den == 0) throw SingularCoefficient("lc_derivative_identity: empty interior mask");
  return std::sqrt(num / den);
}

StabilityReport stability_report(const ModelParams& mp, ProfileFamily fam, int n_grid) {
  StabilityReport rep;
  rep.regime = classify(mp);
  const CompactonProfile prof = build_profile(mp, fam, n_grid);
  const IntegralSet ints = integral_set(prof);
  rep.dPdc_exponent = dPdc_criterion(mp).exponent;
  const SecondVariation sv = phi2_rho_half(mp, ints);
  rep.phi2_formula = sv.formula;
  rep.phi2_numeric = sv.numeric;
  const DerrickSecond dd = derrick_d2(mp, ints);
  rep.derrick_oracle = dd.oracle;
  rep.derrick_closed = dd.closed_form;
  rep.lyapunov = lyapunov_gap(mp, ints);
  rep.goldstone = goldstone_residual(prof);
  rep.stable = rep.dPdc_exponent > 0 && rep.phi2_numeric > 0 && rep.regime.stable_window;
  return rep;
}

StabilityReport stability_report(const ModelParams& mp, int n_grid) {
  return stability_report(mp, default_family(mp), n_grid);
}

}  // namespace ptkdv
