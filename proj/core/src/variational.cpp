#include "ptkdv/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ptkdv/errors.hpp"
#include "ptkdv/numerics.hpp"
#include "ptkdv/specfun.hpp"

namespace ptkdv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double gamma_pos(double x) {
  if (x <= 0) throw GammaPole("gamma argument must be positive here");
  return std::exp(ln_gamma(x));
}

double beta_fn(double a, double b) {
  return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double rel_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0.0 : std::abs(a - b) / scale;
}

void check_shape(const ModelParams& mp, TrialFamily fam, double shape) {
  if (fam == TrialFamily::post_gaussian) {
    if (shape <= 0) throw DomainError("post_gaussian: shape n must be positive");
    if (shape <= (mp.m - 1.0) / (2.0 * mp.m))
      throw DivergentMoment("post_gaussian: gradient moment diverges for n <= (m-1)/(2m)");
  } else {
    if (shape < 1.0) throw DomainError("cos_power: shape gamma must be >= 1");
  }
}

}  // namespace

const char* trial_family_name(TrialFamily fam) {
  switch (fam) {
    case TrialFamily::post_gaussian: return "post_gaussian";
    case TrialFamily::cos_power: return "cos_power";
  }
  throw InvalidConfig("unknown trial family");
}

TrialFamily trial_family_from_name(const std::string& name) {
  if (name == "post_gaussian") return TrialFamily::post_gaussian;
  if (name == "cos_power") return TrialFamily::cos_power;
  throw InvalidConfig("unknown trial family: " + name);
}

CConstants c_constants(const ModelParams& mp, TrialFamily fam, double shape) {
  validate_params(mp);
  check_shape(mp, fam, shape);
  const double l = mp.l, p = mp.p;
  const int m = mp.m;
  CConstants cc;

  if (fam == TrialFamily::post_gaussian) {
    const double n = shape;
    const double s = 1.0 / (2.0 * n);
    auto w = [n](double z) { return std::exp(-std::pow(z, 2.0 * n)); };
    // split at z=1: the gradient integrand behaves like z^{m(2n-1)} at the
    // origin, which the finite-interval rule resolves far better than the
    // half-infinite one
    auto half_line = [](const std::function<double(double)>& f) {
      return integrate(f, 0.0, 1.0).value + integrate(f, 1.0, kInf).value;
    };
    cc.C1 = 2.0 * half_line([&](double z) { return std::pow(w(z), l); });
    cc.C5 = 2.0 * half_line([&](double z) { const double v = w(z); return v * v; });
    cc.C2 = 2.0 * half_line([&](double z) {
      if (z <= 0) return 0.0;
      return std::pow(2.0 * n * std::pow(z, 2.0 * n - 1.0), m) *
             std::exp(-(m + p) * std::pow(z, 2.0 * n));
    });
    cc.C1_closed = 2.0 * std::pow(l, -s) * gamma_pos(1.0 + s);
    cc.C5_closed = 2.0 * std::pow(2.0, -s) * gamma_pos(1.0 + s);
    cc.C2_closed = (1.0 / n) * std::pow(2.0 * n, m) *
                   std::pow(m + p, (m - 2.0 * n * m - 1.0) / (2.0 * n)) *
                   gamma_pos(m - (m - 1.0) / (2.0 * n));
  } else {
    const double g = shape;
    auto w = [g](double z) { return std::pow(std::cos(z), g); };
    cc.C1 = 2.0 * integrate([&](double z) { return std::pow(w(z), l); }, 0.0, kPi / 2).value;
    cc.C5 = 2.0 * integrate([&](double z) { const double v = w(z); return v * v; },
                            0.0, kPi / 2).value;
    cc.C2 = 2.0 * integrate(
                      [&](double z) {
                        const double cz = std::cos(z);
                        if (cz <= 0) return 0.0;
                        return std::pow(g, m) * std::pow(cz, (g - 1.0) * m + g * p) *
                               std::pow(std::sin(z), m);
                      },
                      0.0, kPi / 2)
                      .value;
    cc.C1_closed = std::sqrt(kPi) * gamma_pos((g * l + 1.0) / 2.0) / gamma_pos(g * l / 2.0 + 1.0);
    cc.C5_closed = std::sqrt(kPi) * gamma_pos(g + 0.5) / gamma_pos(g + 1.0);
    cc.C2_closed = std::pow(g, m) * beta_fn((m + 1.0) / 2.0, (g * (p + m) - m + 1.0) / 2.0);
  }

  cc.discrepant = rel_gap(cc.C1, cc.C1_closed) > 1e-8 ||
                  rel_gap(cc.C2, cc.C2_closed) > 1e-8 ||
                  rel_gap(cc.C5, cc.C5_closed) > 1e-8;

  cc.C3 = cc.C1 / (l * (l - 1.0)) * std::pow(2.0 / cc.C5, l / 2.0);
  cc.C4 = cc.C2 / (m - 1.0) * std::pow(2.0 / cc.C5, (p + m) / 2.0);
  return cc;
}

double reduced_hamiltonian(const ModelParams& mp, const CConstants& cc, double P,
                           double beta) {
  const double l = mp.l, p = mp.p, m = mp.m;
  if (P <= 0 || beta <= 0) throw DomainError("reduced_hamiltonian: need P > 0, beta > 0");
  return -cc.C3 * std::pow(P, l / 2.0) * std::pow(beta, (l - 2.0) / 2.0) +
         cc.C4 * std::pow(P, (p + m) / 2.0) * std::pow(beta, (p + 3.0 * m - 2.0) / 2.0);
}

double beta_star(const ModelParams& mp, const CConstants& cc, double P) {
  const double l = mp.l, p = mp.p, m = mp.m;
  if (P <= 0) throw DomainError("beta_star: need P > 0");
  const double gap = l - p - 3.0 * m;
  if (gap >= 0)
    throw NoInteriorMinimum("beta_star: reduced Hamiltonian unbounded below for l >= p+3m");
  return std::pow(P, (p + m - l) / gap) *
         std::pow(cc.C4 * (p + 3.0 * m - 2.0) / (cc.C3 * (l - 2.0)), 2.0 / gap);
}

double trial_eval(const TrialFunction& t, double y) {
  const double z = t.beta * std::abs(y);
  if (t.family == TrialFamily::post_gaussian)
    return t.A * std::exp(-std::pow(z, 2.0 * t.shape));
  if (z >= kPi / 2) return 0.0;
  return t.A * std::pow(std::cos(z), t.shape);
}

namespace {

TrialFunction optimize_trial(const ModelParams& mp, TrialFamily fam, double P,
                             double shape_lo, double shape_hi) {
  if (P <= 0) throw DomainError("optimize: need P > 0");
  if (mp.l - mp.p - 3.0 * mp.m >= 0)
    throw NoInteriorMinimum("optimize: bounded regime l < p+3m required");

  auto objective = [&](double shape) {
    const CConstants cc = c_constants(mp, fam, shape);
    const double b = beta_star(mp, cc, P);
    return reduced_hamiltonian(mp, cc, P, b);
  };
  const MinimizeResult res = minimize_1d(objective, shape_lo, shape_hi, 1e-9, 28);

  TrialFunction t;
  t.family = fam;
  t.shape = res.argmin;
  const CConstants cc = c_constants(mp, fam, t.shape);
  t.P = P;
  t.beta = beta_star(mp, cc, P);
  t.A = std::sqrt(2.0 * t.beta * P / cc.C5);
  t.H = reduced_hamiltonian(mp, cc, P, t.beta);
  const auto ex = scaling_exponents(mp);
  t.c = ex.r.value() * t.H / P;
  t.iterations = res.iterations;
  return t;
}

}  // namespace

TrialFunction optimize_post_gaussian(const ModelParams& mp, double P) {
  const double lo = std::max(0.3, (mp.m - 1.0) / (2.0 * mp.m) + 0.02);
  return optimize_trial(mp, TrialFamily::post_gaussian, P, lo, 3.0);
}

TrialFunction optimize_cos_power(const ModelParams& mp, double P) {
  return optimize_trial(mp, TrialFamily::cos_power, P, 1.0, 12.0);
}

ProfileDistance compare_profiles(const CompactonProfile& exact, const TrialFunction& trial,
                                 int n_pts) {
  double trial_half;
  if (trial.family == TrialFamily::cos_power) {
    trial_half = kPi / (2.0 * trial.beta);
  } else {
    trial_half = std::pow(std::log(1e14), 1.0 / (2.0 * trial.shape)) / trial.beta;
  }
  const double Y = std::max(exact.y_half, trial_half);
  const int n = std::max(n_pts, 16);
  const double h = Y / n;
  ProfileDistance out;
  double sum = 0.0;
  for (int i = -n; i <= n; ++i) {
    const double y = i * h;
    const double d = exact.f(y) - trial_eval(trial, y);
    const double w = (i == -n || i == n) ? 0.5 : 1.0;
    sum += w * d * d;
    out.sup = std::max(out.sup, std::abs(d));
  }
  out.l2 = std::sqrt(sum * h);
  return out;
}

}  // namespace ptkdv
