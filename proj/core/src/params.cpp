#include "ptkdv/params.hpp"

#include <cmath>
#include <string>

namespace ptkdv {

namespace {

// l, p are real parameters; regime boundaries like l == p+m are exact
// relations between them, compared with a scale-free slack.
bool nearly(double x, double y) { return std::fabs(x - y) <= 1e-12 * (1 + std::fabs(x) + std::fabs(y)); }

}  // namespace

void validate_params(const ModelParams& mp) {
  if (!(mp.l > 2))
    throw InadmissibleParams("l must exceed 2, got l=" + std::to_string(mp.l));
  if (mp.m < 2 || mp.m % 2 != 0)
    throw OddM("m must be even and >= 2, got m=" + std::to_string(mp.m));
  if (!(mp.c > 0))
    throw InadmissibleParams("wave speed c must be positive, got c=" + std::to_string(mp.c));
  if (!(mp.p >= 0))
    throw InadmissibleParams("p must be non-negative, got p=" + std::to_string(mp.p));
  if (!std::isfinite(mp.l) || !std::isfinite(mp.p) || !std::isfinite(mp.c) || !std::isfinite(mp.alpha))
    throw InadmissibleParams("parameters must be finite");
}

double alpha_real(int m) {
  if (m < 2 || m % 2 != 0)
    throw OddM("reality convention -alpha(m-1)i^m = 1 requires even m >= 2, got m=" + std::to_string(m));
  // i^m = (-1)^{m/2} for even m.
  const double im = (m / 2) % 2 == 0 ? 1.0 : -1.0;
  return -1.0 / ((m - 1) * im);
}

ModelParams make_params(double l, double p, int m, double c) {
  return make_params(l, p, m, c, alpha_real(m));
}

ModelParams make_params(double l, double p, int m, double c, double alpha) {
  ModelParams mp{l, p, m, alpha, c};
  validate_params(mp);
  return mp;
}

ScalingExponents scaling_exponents(const ModelParams& mp) {
  validate_params(mp);
  const double l = mp.l, p = mp.p, m = mp.m;
  ScalingExponents se;
  se.i1 = (p + m - l) / (m * (l - 2));
  se.i2 = (p + 3 * m - l) / (m * (l - 2));
  if (!nearly(l, p + m)) {
    se.beta_scale = m / (p + m - l);
    se.eta = 1 - *se.beta_scale * (l - 2);
  }
  if (!nearly(l, p + 3 * m)) se.r = -(l * m + p + m - l) / (p + 3 * m - l);
  return se;
}

RegimeReport classify(const ModelParams& mp) {
  validate_params(mp);
  RegimeReport rr;
  rr.compacton_admissible = mp.p <= 2 + 1e-12 && mp.p <= mp.l + 1e-12;
  rr.width_independent = nearly(mp.l, mp.p + mp.m);
  rr.marginal = nearly(mp.l, mp.p + 3 * mp.m);
  rr.stable_window = mp.l > 2 && mp.l < mp.p + 3 * mp.m && !rr.marginal;
  return rr;
}

}  // namespace ptkdv
