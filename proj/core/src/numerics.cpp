#include "ptkdv/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ptkdv {

namespace {

constexpr double kPi = std::numbers::pi;

// One tanh-sinh node: x measured as an offset from the nearer endpoint so the
// abscissa stays meaningful arbitrarily close to a and b.
struct TsNode {
  double off;  // distance from the endpoint the node is closest to
  double w;    // weight (without the level step h)
};

TsNode ts_node(double t, double half) {
  const double u = 0.5 * kPi * std::sinh(t);
  const double sech = 1.0 / std::cosh(u);
  TsNode n;
  n.off = half * 2.0 / (1.0 + std::exp(2.0 * std::fabs(u)));  // half*(1 -/+ tanh|u|)
  n.w = half * 0.5 * kPi * std::cosh(t) * sech * sech;
  return n;
}

struct EsNode {
  double x;
  double w;
};

EsNode es_node(double t) {
  const double u = 0.5 * kPi * std::sinh(t);
  EsNode n;
  n.x = std::exp(u);
  n.w = n.x * 0.5 * kPi * std::cosh(t);
  return n;
}

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  constexpr double kTmax = 3.8;
  constexpr int kMaxLevel = 9;

  QuadratureResult res;
  auto add_point = [&](double t, double& acc) {
    const TsNode n = ts_node(t, half);
    const double xl = a + n.off;  // node left of center for t<0
    const double xr = b - n.off;
    if (t == 0.0) {
      ++res.evaluations;
      acc += n.w * f(mid);
      return;
    }
    if (xl > a) {
      ++res.evaluations;
      const double v = f(xl);
      if (std::isfinite(v)) acc += n.w * v;
    }
    if (xr < b) {
      ++res.evaluations;
      const double v = f(xr);
      if (std::isfinite(v)) acc += n.w * v;
    }
  };

  double h = 1.0;
  double sum = 0.0;
  add_point(0.0, sum);
  for (double t = h; t <= kTmax; t += h) add_point(t, sum);
  double prev = sum * h;
  double value = prev;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t <= kTmax; t += 2.0 * h) add_point(t, add);
    sum += add;
    value = sum * h;
    res.est_abs_error = std::fabs(value - prev);
    prev = value;
    if (level >= 2 && res.est_abs_error <= tol * std::max(1.0, std::fabs(value))) {
      res.converged = true;
      break;
    }
  }
  res.value = value;
  return res;
}

QuadratureResult exp_sinh(const std::function<double(double)>& f, double a, double tol) {
  constexpr double kTmax = 3.8;
  constexpr int kMaxLevel = 9;

  QuadratureResult res;
  auto add_point = [&](double t, double& acc) {
    const EsNode n = es_node(t);
    if (!std::isfinite(n.x) || !std::isfinite(n.w)) return;
    ++res.evaluations;
    const double v = f(a + n.x);
    if (std::isfinite(v)) acc += n.w * v;  // non-finite tail values treated as negligible
  };

  double h = 1.0;
  double sum = 0.0;
  add_point(0.0, sum);
  for (double t = h; t <= kTmax; t += h) {
    add_point(t, sum);
    add_point(-t, sum);
  }
  double prev = sum * h;
  double value = prev;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t <= kTmax; t += 2.0 * h) {
      add_point(t, add);
      add_point(-t, add);
    }
    sum += add;
    value = sum * h;
    res.est_abs_error = std::fabs(value - prev);
    prev = value;
    if (level >= 2 && res.est_abs_error <= tol * std::max(1.0, std::fabs(value))) {
      res.converged = true;
      break;
    }
  }
  res.value = value;
  return res;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate: NaN endpoint");
  if (std::isinf(b)) {
    if (std::isinf(a)) throw DomainError("integrate: doubly infinite ranges unsupported");
    return exp_sinh(f, a, tol);
  }
  if (std::isinf(a)) throw DomainError("integrate: lower endpoint must be finite");
  if (a == b) return {0.0, 0.0, 0, true};
  if (a > b) {
    QuadratureResult r = tanh_sinh(f, b, a, tol);
    r.value = -r.value;
    return r;
  }
  return tanh_sinh(f, a, b, tol);
}

double invert_monotone(const std::function<double(double)>& g, double target, double lo, double hi,
                       double tol, int max_iter) {
  if (!(lo < hi)) throw DomainError("invert_monotone: empty bracket");
  double flo = g(lo) - target;
  double fhi = g(hi) - target;
  if (flo > 0 || fhi < 0)
    throw TargetOutOfBracket("invert_monotone: target " + std::to_string(target) +
                             " not within [g(lo), g(hi)]");
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  double x = lo;
  for (int it = 0; it < max_iter; ++it) {
    // Secant proposal, safeguarded into the bracket; fall back to bisection.
    double xs = (std::fabs(fhi - flo) > 0) ? lo - flo * (hi - lo) / (fhi - flo) : 0.5 * (lo + hi);
    const double margin = 0.01 * (hi - lo);
    if (!(xs > lo + margin) || !(xs < hi - margin)) xs = 0.5 * (lo + hi);
    x = xs;
    const double fx = g(x) - target;
    if (fx == 0) return x;
    if (fx < 0) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo <= tol * (1.0 + std::fabs(x))) return 0.5 * (lo + hi);
  }
  throw MaxIterations("invert_monotone: no convergence in " + std::to_string(max_iter) +
                      " iterations");
}

MinimizeResult minimize_1d(const std::function<double(double)>& f, double lo, double hi, double tol,
                           int prescan_points) {
  if (!(lo < hi)) throw DomainError("minimize_1d: empty interval");
  const int n = std::max(prescan_points, 4);
  std::vector<double> xs(n), fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * i / (n - 1);
    fs[i] = f(xs[i]);
  }
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (fs[i] < fs[best]) best = i;
  // Count interior scan minima to detect separated basins.
  int basins = 0;
  for (int i = 1; i + 1 < n; ++i)
    if (fs[i] < fs[i - 1] && fs[i] < fs[i + 1]) ++basins;
  if (fs[0] < fs[1]) ++basins;
  if (fs[n - 1] < fs[n - 2]) ++basins;

  double a = xs[std::max(best - 1, 0)];
  double b = xs[std::min(best + 1, n - 1)];

  MinimizeResult res;
  res.unimodal = basins <= 1;

  // Golden-section on [a,b].
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  int it = 0;
  const int max_iter = 200;
  while (b - a > tol * (1.0 + std::fabs(a) + std::fabs(b)) && it < max_iter) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
    ++it;
  }
  res.iterations = it;
  res.converged = it < max_iter;
  if (f1 < f2) {
    res.argmin = x1;
    res.fmin = f1;
  } else {
    res.argmin = x2;
    res.fmin = f2;
  }
  return res;
}

MinimizeNdResult minimize_nd(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double scale, double tol, int max_iter) {
  const int dim = static_cast<int>(x0.size());
  if (dim < 1 || dim > 3) throw DomainError("minimize_nd supports 1 <= dim <= 3");
  const int np = dim + 1;
  std::vector<std::vector<double>> pts(np, x0);
  std::vector<double> fv(np);
  for (int i = 1; i < np; ++i) pts[i][i - 1] += scale;
  for (int i = 0; i < np; ++i) fv[i] = f(pts[i]);

  auto order = [&]() {
    for (int i = 0; i < np; ++i)
      for (int j = i + 1; j < np; ++j)
        if (fv[j] < fv[i]) {
          std::swap(fv[i], fv[j]);
          std::swap(pts[i], pts[j]);
        }
  };

  MinimizeNdResult res;
  int it = 0;
  for (; it < max_iter; ++it) {
    order();
    double spread = std::fabs(fv[np - 1] - fv[0]);
    double size = 0;
    for (int d = 0; d < dim; ++d) size = std::max(size, std::fabs(pts[np - 1][d] - pts[0][d]));
    if (spread <= tol * (1.0 + std::fabs(fv[0])) && size <= tol * (1.0 + std::fabs(pts[0][0]))) {
      res.converged = true;
      break;
    }
    std::vector<double> centroid(dim, 0.0);
    for (int i = 0; i < np - 1; ++i)
      for (int d = 0; d < dim; ++d) centroid[d] += pts[i][d] / (np - 1);
    auto blend = [&](double coef) {
      std::vector<double> x(dim);
      for (int d = 0; d < dim; ++d) x[d] = centroid[d] + coef * (pts[np - 1][d] - centroid[d]);
      return x;
    };
    const std::vector<double> xr = blend(-1.0);  // reflection
    const double fr = f(xr);
    if (fr < fv[0]) {
      const std::vector<double> xe = blend(-2.0);  // expansion
      const double fe = f(xe);
      if (fe < fr) {
        pts[np - 1] = xe;
        fv[np - 1] = fe;
      } else {
        pts[np - 1] = xr;
        fv[np - 1] = fr;
      }
    } else if (fr < fv[np - 2]) {
      pts[np - 1] = xr;
      fv[np - 1] = fr;
    } else {
      const std::vector<double> xc = blend(0.5);  // contraction
      const double fc = f(xc);
      if (fc < fv[np - 1]) {
        pts[np - 1] = xc;
        fv[np - 1] = fc;
      } else {
        for (int i = 1; i < np; ++i) {  // shrink toward the best vertex
          for (int d = 0; d < dim; ++d) pts[i][d] = pts[0][d] + 0.5 * (pts[i][d] - pts[0][d]);
          fv[i] = f(pts[i]);
        }
      }
    }
  }
  order();
  res.argmin = pts[0];
  res.fmin = fv[0];
  res.iterations = it;
  return res;
}

}  // namespace ptkdv
