#pragma once

#include <functional>
#include <vector>

#include "ptkdv/errors.hpp"

namespace ptkdv {

struct QuadratureResult {
  double value = 0;
  double est_abs_error = 0;
  int evaluations = 0;
  bool converged = false;  // false means the tolerance was not certified; value is still the best estimate
};

// Adaptive double-exponential quadrature of f over [a,b]. Tolerates algebraic
// endpoint singularities (integrable ones). If b is +infinity the exp-sinh
// variant over [a,inf) is used instead; it assumes f decays faster than any
// power. Convergence target: successive-level difference <= tol*max(1,|I|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-12);

// Solve g(x) = target for strictly increasing g on [lo,hi] by safeguarded
// bisection/secant. Throws TargetOutOfBracket unless g(lo) <= target <= g(hi).
double invert_monotone(const std::function<double(double)>& g, double target, double lo,
                       double hi, double tol = 1e-13, int max_iter = 200);

struct MinimizeResult {
  double argmin = 0;
  double fmin = 0;
  int iterations = 0;
  bool converged = false;
  bool unimodal = true;  // false: the pre-scan saw separated basins; result is the best basin's
};

// Golden-section minimization on [lo,hi], preceded by an equally spaced
// pre-scan (prescan_points >= 4) that locates the bracketing basin and
// detects multimodality.
MinimizeResult minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                           double tol = 1e-10, int prescan_points = 32);

struct MinimizeNdResult {
  std::vector<double> argmin;
  double fmin = 0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead simplex minimization for dim <= 3. `scale` sets the initial
// simplex edge length around x0.
MinimizeNdResult minimize_nd(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double scale, double tol = 1e-12,
                             int max_iter = 5000);

}  // namespace ptkdv
