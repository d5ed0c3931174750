#pragma once

#include <vector>

#include "ptkdv/conserved.hpp"
#include "ptkdv/params.hpp"
#include "ptkdv/profile.hpp"

namespace ptkdv {

// dP/dc = i2 * P / c, so the sign of the spectral-stability criterion dP/dc > 0
// is the sign of the exponent i2 = (p+3m-l)/(m(l-2)).
struct DPdcCriterion {
  double exponent = 0;
  bool positive = false;
};

DPdcCriterion dPdc_criterion(const ModelParams& mp);

// Second variation of the constrained Hamiltonian under the two-parameter
// scaling f(y) -> A^rho f(A y) that preserves momentum when rho = 1/2.
// formula: P c (l-2)(3m+p-l)(3m+p-2) / (4 (l(m-1)+m+p))
// numeric: s1(s1-1) J/(m-1) - s2(s2-1) Il/(l(l-1)),
//          s1 = m-1+(m+p)/2, s2 = l/2-1.
struct SecondVariation {
  double formula = 0;
  double numeric = 0;
};

SecondVariation phi2_rho_half(const ModelParams& mp, const IntegralSet& ints);

// Derrick-style dilation f(y) -> f(y/lambda) at fixed shape:
// second derivative of H + c P at lambda = 1.
// oracle:      (m-2) J - 2 Il/(l(l-1)) + c I2   (direct differentiation)
// closed_form: c I2 m (m-1)(l-2) / (2 (p+m+(m-1)l))
struct DerrickSecond {
  double oracle = 0;
  double closed_form = 0;
};

DerrickSecond derrick_d2(const ModelParams& mp, const IntegralSet& ints);

// H evaluated on the solution minus its Lyapunov lower-bound expression
// (l-p-3m) J / ((m-1)(l-2)); identically zero on exact solutions.
double lyapunov_gap(const ModelParams& mp, const IntegralSet& ints);

// Linearization about the traveling wave in the comoving frame:
//   L = c0(y) + c1(y) d/dy + c2(y) d^2/dy^2,
// sampled on the interior of the profile grid (edge and gradient-degenerate
// samples excluded).
struct LOperatorCoeffs {
  std::vector<double> y;
  std::vector<double> c0, c1, c2;
  std::vector<std::size_t> grid_index;  // position of each row in the profile grid
};

LOperatorCoeffs build_L(const CompactonProfile& prof);

// Translation zero mode: || L f' ||_2 / || c f' ||_2 using finite differences
// for the derivatives of f'.
double goldstone_residual(const CompactonProfile& prof);

// Identity L (df/dc) = -f, checked with a centered difference in c:
// returns || L g + f ||_2 / || f ||_2 with g = [f(c+dc/2) - f(c-dc/2)]/dc.
double lc_derivative_identity(const ModelParams& mp, ProfileFamily fam, double dc,
                              int n_grid = 256);

struct StabilityReport {
  RegimeReport regime;
  double dPdc_exponent = 0;
  double phi2_formula = 0;
  double phi2_numeric = 0;
  double derrick_oracle = 0;
  double derrick_closed = 0;
  double lyapunov = 0;
  double goldstone = 0;
  bool stable = false;  // consensus of the sign criteria
};

StabilityReport stability_report(const ModelParams& mp, ProfileFamily fam, int n_grid = 256);
StabilityReport stability_report(const ModelParams& mp, int n_grid = 256);

}  // namespace ptkdv
