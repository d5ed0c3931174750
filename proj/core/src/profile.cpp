#include "ptkdv/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "ptkdv/errors.hpp"
#include "ptkdv/numerics.hpp"
#include "ptkdv/specfun.hpp"

namespace ptkdv {

namespace {

constexpr double kPi = std::numbers::pi;

double gamma_pos(double x) { return std::exp(ln_gamma(x)); }

int sgn(double x) { return (x > 0) - (x < 0); }

void require_admissible(const ModelParams& mp) {
  validate_params(mp);
  const double want = alpha_real(mp.m);
  if (std::abs(mp.alpha - want) > 1e-12 * (1.0 + std::abs(want)))
    throw InadmissibleParams("alpha does not satisfy the reality condition for m=" +
                             std::to_string(mp.m));
  if (mp.p > 2.0 + 1e-12)
    throw InadmissibleParams("p > 2: gradient diverges at the compacton edge");
  if (mp.p > static_cast<double>(mp.l) + 1e-12)
    throw InadmissibleParams("p > l: no positive-hump solution");
  if (mp.m + mp.p <= 2.0 + 1e-12)
    throw InadmissibleParams("m + p <= 2: no compact support");
}

}  // namespace

const char* family_name(ProfileFamily fam) {
  switch (fam) {
    case ProfileFamily::closed_sin2: return "closed_sin2";
    case ProfileFamily::closed_cn2: return "closed_cn2";
    case ProfileFamily::hyperelliptic: return "hyperelliptic";
    case ProfileFamily::inc_beta_l3p1: return "inc_beta_l3p1";
    case ProfileFamily::inc_beta_l4p1: return "inc_beta_l4p1";
  }
  throw UnsupportedFamily("unknown profile family");
}

ProfileFamily family_from_name(const std::string& name) {
  if (name == "closed_sin2") return ProfileFamily::closed_sin2;
  if (name == "closed_cn2") return ProfileFamily::closed_cn2;
  if (name == "hyperelliptic") return ProfileFamily::hyperelliptic;
  if (name == "inc_beta_l3p1") return ProfileFamily::inc_beta_l3p1;
  if (name == "inc_beta_l4p1") return ProfileFamily::inc_beta_l4p1;
  throw UnsupportedFamily("unknown profile family: " + name);
}

HyperellipticParams hyperelliptic_params(const ModelParams& mp) {
  require_admissible(mp);
  HyperellipticParams hp;
  const double l = mp.l, p = mp.p, m = mp.m, c = mp.c;
  hp.a = m / (m + p - 2.0);
  hp.tau = m * (l - 2.0) / (2.0 * (m + p - 2.0));
  const double amp_base = c * l * (l - 1.0) / 2.0;
  hp.A = std::pow(amp_base, 1.0 / (l - 2.0));
  hp.beta = std::pow(amp_base, (l - p - m) / (m * (l - 2.0))) /
            (hp.a * std::pow(l * (l - 1.0), 1.0 / m));
  return hp;
}

double z_halfwidth(double tau, int m) {
  if (tau <= 0 || m < 2) throw DomainError("z_halfwidth: need tau > 0, m >= 2");
  const double s = 1.0 / (2.0 * tau);
  const double q = 1.0 - 1.0 / m;
  return gamma_pos(s) * gamma_pos(q) / (2.0 * tau * gamma_pos(s + q));
}

double z_of_y(double tau, int m, double y) {
  const double yh = z_halfwidth(tau, m);
  if (y < -1e-12 || y > yh * (1.0 + 1e-12))
    throw BeyondSupport("z_of_y: argument outside [0, halfwidth]");
  if (y <= 0) return 0.0;
  if (y >= yh) return 1.0;
  const double s = 1.0 / (2.0 * tau);
  auto forward = [&](double Z) {
    if (Z <= 0) return 0.0;
    if (Z >= 1) return yh;
    return Z * gauss_2f1(1.0 / m, s, 1.0 + s, std::pow(Z, 2.0 * tau));
  };
  return invert_monotone(forward, y, 0.0, 1.0, 1e-13);
}

double inc_beta_forward(const ModelParams& mp, double f_val) {
  const double m = mp.m, c = mp.c;
  if (f_val < 0) throw DomainError("inc_beta_forward: negative field value");
  // B_x has a (1-x)^{(m-1)/m} branch at x=1, so a few ulps of rounding in x
  // would cost O(eps^{1/2}) in the result; within rounding distance of the
  // peak the exact complete-beta value is the right answer.
  auto snap = [](double x) { return x > 1.0 - 5e-16 ? 1.0 : x; };
  if (mp.l == 3 && std::abs(mp.p - 1.0) < 1e-12) {
    const double x = f_val / (3.0 * c);
    if (x > 1.0 + 1e-12) throw DomainError("inc_beta_forward: field above peak");
    const double pref = std::pow(2.0, 1.0 / m) * std::pow(3.0, (m - 1.0) / m) *
                        std::pow(c, (m - 2.0) / m);
    return pref * inc_beta(snap(x), (m - 1.0) / m, (m - 1.0) / m);
  }
  if (mp.l == 4 && std::abs(mp.p - 1.0) < 1e-12) {
    const double x = f_val * f_val / (6.0 * c);
    if (x > 1.0 + 1e-12) throw DomainError("inc_beta_forward: field above peak");
    const double pref = std::pow(1.5, (m - 1.0) / (2.0 * m)) *
                        std::pow(c, (m - 3.0) / (2.0 * m));
    return pref * inc_beta(snap(x), (m - 1.0) / (2.0 * m), (m - 1.0) / m);
  }
  throw FamilyMismatch("inc_beta_forward: only l=3,p=1 and l=4,p=1 supported");
}

ProfileFamily default_family(const ModelParams& mp) {
  if (mp.l == 3 && std::abs(mp.p - 1.0) < 1e-12 && mp.m == 2)
    return ProfileFamily::closed_sin2;
  if (mp.l == 4 && std::abs(mp.p - 1.0) < 1e-12 && mp.m == 2)
    return ProfileFamily::closed_cn2;
  return ProfileFamily::hyperelliptic;
}

CompactonProfile build_profile(const ModelParams& mp, ProfileFamily fam, int n_grid) {
  require_admissible(mp);
  if (n_grid < 64) throw InvalidConfig("build_profile: need at least 64 grid points per side");

  CompactonProfile prof;
  prof.params = mp;
  prof.family = fam;
  const double l = mp.l, p = mp.p, c = mp.c;
  const int m = mp.m;
  const HyperellipticParams hp = hyperelliptic_params(mp);
  prof.a_exp = hp.a;
  prof.tau = hp.tau;

  switch (fam) {
    case ProfileFamily::closed_sin2: {
      if (mp.l != 3 || std::abs(p - 1.0) > 1e-12 || m != 2)
        throw FamilyMismatch("closed_sin2 requires l=3, p=1, m=2");
      const double A = 3.0 * c;
      const double b = 1.0 / (2.0 * std::sqrt(6.0));
      prof.A = A;
      prof.beta_w = b;
      prof.y_half = kPi / (2.0 * b);
      prof.f = [A, b, yh = prof.y_half](double y) {
        if (std::abs(y) >= yh) return 0.0;
        const double cy = std::cos(b * y);
        return A * cy * cy;
      };
      prof.fp = [A, b, yh = prof.y_half](double y) {
        if (std::abs(y) >= yh) return 0.0;
        return -A * b * std::sin(2.0 * b * y);
      };
      prof.fpp = [A, b, yh = prof.y_half](double y) {
        if (std::abs(y) >= yh) return 0.0;
        return -2.0 * A * b * b * std::cos(2.0 * b * y);
      };
      break;
    }
    case ProfileFamily::closed_cn2: {
      if (mp.l != 4 || std::abs(p - 1.0) > 1e-12 || m != 2)
        throw FamilyMismatch("closed_cn2 requires l=4, p=1, m=2");
      const double A = std::sqrt(6.0 * c);
      const double b = std::pow(c / 96.0, 0.25);
      const double k = std::sqrt(0.5);
      prof.A = A;
      prof.beta_w = b;
      prof.y_half = elliptic_K(k) / b;
      prof.f = [A, b, k, yh = prof.y_half](double y) {
        if (std::abs(y) >= yh) return 0.0;
        const double cn = jacobi_elliptic(b * y, k).cn;
        return A * cn * cn;
      };
      prof.fp = [A, b, k, yh = prof.y_half](double y) {
        if (std::abs(y) >= yh) return 0.0;
        const auto e = jacobi_elliptic(b * y, k);
        return -2.0 * A * b * e.sn * e.cn * e.dn;
      };
      prof.fpp = [A, b, k, yh = prof.y_half](double y) {
        if (std::abs(y) >= yh) return 0.0;
        const auto e = jacobi_elliptic(b * y, k);
        const double sn2 = e.sn * e.sn, cn2 = e.cn * e.cn, dn2 = e.dn * e.dn;
        return -2.0 * A * b * b * (cn2 * dn2 - sn2 * dn2 - k * k * sn2 * cn2);
      };
      break;
    }
    case ProfileFamily::hyperelliptic: {
      const double A = hp.A, b = hp.beta, a = hp.a, tau = hp.tau;
      const double zh = z_halfwidth(tau, m);
      prof.A = A;
      prof.beta_w = b;
      prof.y_half = zh / b;
      auto Zc = [tau, m, b, zh](double y) {
        const double dist = zh - b * std::abs(y);
        if (dist <= 0) return 0.0;
        if (dist >= zh) return 1.0;
        return z_of_y(tau, m, dist);
      };
      prof.f = [A, a, Zc](double y) {
        const double Z = Zc(y);
        return Z > 0 ? A * std::pow(Z, a) : 0.0;
      };
      prof.fp = [A, a, b, tau, m, Zc](double y) {
        const double Z = Zc(y);
        if (Z <= 0) return 0.0;
        const double zp = std::pow(1.0 - std::pow(Z, 2.0 * tau), 1.0 / m);
        return -sgn(y) * A * a * b * std::pow(Z, a - 1.0) * zp;
      };
      prof.fpp = [A, a, b, tau, m, Zc](double y) {
        const double Z = Zc(y);
        if (Z <= 0) return 0.0;
        const double w = std::pow(Z, 2.0 * tau);
        const double t1 = (a - 1.0) * std::pow(Z, a - 2.0) * std::pow(1.0 - w, 2.0 / m);
        const double t2 = (2.0 * tau / m) * std::pow(Z, a + 2.0 * tau - 2.0) *
                          std::pow(1.0 - w, (2.0 - m) / static_cast<double>(m));
        return A * a * b * b * (t1 - t2);
      };
      break;
    }
    case ProfileFamily::inc_beta_l3p1:
    case ProfileFamily::inc_beta_l4p1: {
      const bool is3 = (fam == ProfileFamily::inc_beta_l3p1);
      if ((is3 && mp.l != 3) || (!is3 && mp.l != 4) || std::abs(p - 1.0) > 1e-12)
        throw FamilyMismatch(std::string(family_name(fam)) + " requires l=" +
                             (is3 ? "3" : "4") + ", p=1");
      const double A = is3 ? 3.0 * c : std::sqrt(6.0 * c);
      prof.A = A;
      prof.beta_w = hp.beta;
      prof.y_half = inc_beta_forward(mp, A);
      auto fval = [mp, A, yh = prof.y_half](double y) {
        const double dist = yh - std::abs(y);
        if (dist <= 0) return 0.0;
        if (dist >= yh) return A;
        auto fwd = [&](double fv) { return inc_beta_forward(mp, fv); };
        return invert_monotone(fwd, dist, 0.0, A, 1e-13);
      };
      auto slope = [l, m, c](double f, double y) {
        const double rhs = (c / 2.0) * f - std::pow(f, l - 1.0) / (l * (l - 1.0));
        if (rhs <= 0) return 0.0;
        return -static_cast<double>(sgn(y)) * std::pow(rhs, 1.0 / m);
      };
      prof.f = fval;
      prof.fp = [fval, slope](double y) { return slope(fval(y), y); };
      prof.fpp = [fval, slope, l, m, c](double y) {
        const double f = fval(y);
        if (f <= 0) return 0.0;
        const double g = slope(f, y);
        const double drhs = c / 2.0 - std::pow(f, l - 2.0) / l;
        return drhs * std::pow(std::abs(g), 2.0 - m) / m;
      };
      break;
    }
  }

  const int n = n_grid;
  prof.grid.y.resize(2 * n + 1);
  prof.grid.f.resize(2 * n + 1);
  prof.grid.fp.resize(2 * n + 1);
  const double h = prof.y_half / n;
  for (int i = 0; i <= n; ++i) {
    const double y = i * h;
    double fv, gv;
    if (i == n) {
      fv = 0.0;
      // store the one-sided interior limit of the gradient at the edge
      gv = (std::abs(prof.a_exp - 1.0) < 1e-12) ? -prof.A * prof.a_exp * prof.beta_w : 0.0;
    } else {
      fv = prof.f(y);
      gv = prof.fp(y);
    }
    prof.grid.y[n + i] = y;
    prof.grid.f[n + i] = fv;
    prof.grid.fp[n + i] = gv;
    prof.grid.y[n - i] = -y;
    prof.grid.f[n - i] = fv;
    prof.grid.fp[n - i] = -gv;
  }
  return prof;
}

CompactonProfile build_profile(const ModelParams& mp, int n_grid) {
  return build_profile(mp, default_family(mp), n_grid);
}

double first_integral_residual(const CompactonProfile& prof) {
  const ModelParams& mp = prof.params;
  const double l = mp.l, p = mp.p, c = mp.c;
  const int m = mp.m;
  const double scale = (c / 2.0) * std::pow(prof.A, 2.0 - p);
  double worst = 0.0;
  const std::size_t n = prof.grid.y.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double y = prof.grid.y[i];
    if (std::abs(y) > 0.98 * prof.y_half) continue;
    const double f = prof.grid.f[i];
    if (f < 1e-8 * prof.A) continue;
    const double g = prof.grid.fp[i];
    const double lhs = (c / 2.0) * std::pow(f, 2.0 - p) -
                       std::pow(f, l - p) / (l * (l - 1.0));
    const double res = std::abs(lhs - std::pow(g, m)) / scale;
    worst = std::max(worst, res);
  }
  return worst;
}

WeakSolutionCheck weak_solution_check(const CompactonProfile& prof) {
  WeakSolutionCheck out;
  const std::size_t n = prof.grid.y.size();
  const double p = prof.params.p;
  const int m = prof.params.m;

  // flux (f')^m f^p measured approaching the right edge
  auto flux = [&](std::size_t i) {
    const double f = std::max(prof.grid.f[i], 0.0);
    return std::pow(prof.grid.fp[i], m) * std::pow(f, p);
  };
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(flux(i)));
  const double v1 = std::abs(flux(n - 2));  // outermost interior sample
  const double v2 = std::abs(flux(n - 3));
  const double v3 = std::abs(flux(n - 4));

  out.continuous = prof.grid.f[n - 1] == 0.0 &&
                   prof.grid.f[n - 2] <= 0.02 * prof.A;
  out.edge_flux = v1;
  const bool decaying = v1 <= v2 && v2 <= v3 && v1 <= 0.01 * std::max(scale, 1e-300);
  out.ok = out.continuous && decaying;
  return out;
}

void write_csv(const CompactonProfile& prof, std::ostream& os) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "# l=%.17g p=%.17g m=%d c=%.17g family=%s A=%.17g beta_w=%.17g "
                "y_half=%.17g a=%.17g tau=%.17g\n",
                prof.params.l, prof.params.p, prof.params.m, prof.params.c,
                family_name(prof.family), prof.A, prof.beta_w, prof.y_half,
                prof.a_exp, prof.tau);
  os << buf << "y,f,fprime\n";
  for (std::size_t i = 0; i < prof.grid.y.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", prof.grid.y[i],
                  prof.grid.f[i], prof.grid.fp[i]);
    os << buf;
  }
}

}  // namespace ptkdv
