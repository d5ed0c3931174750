#include "ptkdv/conserved.hpp"

#include <cmath>

#include "ptkdv/errors.hpp"
#include "ptkdv/numerics.hpp"
#include "ptkdv/specfun.hpp"

namespace ptkdv {

namespace {

double gamma_pos(double x) {
  if (x <= 0) throw GammaPole("gamma argument must be positive here");
  return std::exp(ln_gamma(x));
}

double rel_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace

ConservedSet conserved_analytic(const ModelParams& mp) {
  const HyperellipticParams hp = hyperelliptic_params(mp);
  const double l = mp.l, p = mp.p, c = mp.c;
  const int m = mp.m;
  const double a = hp.a, tau = hp.tau, A = hp.A, b = hp.beta;
  const double q = 1.0 - 1.0 / m;

  ConservedSet out;
  out.M = A * gamma_pos(q) * gamma_pos((a + 1.0) / (2.0 * tau)) /
          (b * tau * gamma_pos(q + (a + 1.0) / (2.0 * tau)));
  out.P = A * A * gamma_pos(q) * gamma_pos((2.0 * a + 1.0) / (2.0 * tau)) /
          (2.0 * b * tau * gamma_pos(q + (2.0 * a + 1.0) / (2.0 * tau)));
  const double D = p + m + (m - 1.0) * l;
  out.E = c * out.P * (l - p - 3.0 * m) / D;
  out.r = scaling_exponents(mp).r;
  return out;
}

IntegralSet integral_set(const CompactonProfile& prof, double tol) {
  const double yh = prof.y_half;
  const double l = prof.params.l, p = prof.params.p;
  const int m = prof.params.m;
  IntegralSet s;
  s.I2 = 2.0 * integrate([&](double y) { const double f = prof.f(y); return f * f; },
                         0.0, yh, tol).value;
  s.Il = 2.0 * integrate([&](double y) { return std::pow(prof.f(y), l); },
                         0.0, yh, tol).value;
  s.J = 2.0 * integrate(
                  [&](double y) {
                    const double f = prof.f(y);
                    if (f <= 0) return 0.0;
                    return std::pow(prof.fp(y), m) * std::pow(f, p);
                  },
                  0.0, yh, tol)
                  .value;
  return s;
}

ConservedSet conserved_quadrature(const CompactonProfile& prof, double tol) {
  ConservedSet out;
  out.M = 2.0 * integrate([&](double y) { return prof.f(y); }, 0.0, prof.y_half, tol).value;
  const IntegralSet s = integral_set(prof, tol);
  out.P = s.I2 / 2.0;
  out.E = hamiltonian(prof.params, s);
  out.r = scaling_exponents(prof.params).r;
  return out;
}

double hamiltonian(const ModelParams& mp, const IntegralSet& ints) {
  const double l = mp.l;
  return ints.J / (mp.m - 1.0) - ints.Il / (l * (l - 1.0));
}

RelationResiduals check_relations(const ModelParams& mp, const IntegralSet& ints) {
  const double l = mp.l, p = mp.p, c = mp.c;
  const int m = mp.m;
  const double D = p + m + (m - 1.0) * l;
  RelationResiduals out;
  out.balance = rel_gap(ints.J, (c / 2.0) * ints.I2 - ints.Il / (l * (l - 1.0)));
  out.gradient_vs_momentum = rel_gap(ints.J, (l - 2.0) * (m - 1.0) * c * ints.I2 / (2.0 * D));
  out.potential_vs_momentum =
      rel_gap(ints.Il, l * (l - 1.0) * (p + 3.0 * m - 2.0) * c * ints.I2 / (2.0 * D));
  return out;
}

}  // namespace ptkdv
