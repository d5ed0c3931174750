#pragma once

#include <optional>

#include "ptkdv/params.hpp"
#include "ptkdv/profile.hpp"

namespace ptkdv {

// Mass, momentum and energy of a traveling-wave solution:
//   M = int u dy,  P = (1/2) int u^2 dy,  E = H[u].
struct ConservedSet {
  double M = 0;
  double P = 0;
  double E = 0;
  std::optional<double> r;  // energy-momentum scaling exponent where defined
};

// Solution integrals entering the integral identities:
//   I2 = int f^2 dy,  Il = int f^l dy,  J = int (f')^m f^p dy.
struct IntegralSet {
  double I2 = 0;
  double Il = 0;
  double J = 0;
};

// Closed-form route through the hyperelliptic parametrization:
//   M = A Gamma((m-1)/m) Gamma((a+1)/(2tau)) / (beta tau Gamma(1-1/m+(1+a)/(2tau)))
//   P = A^2 Gamma((m-1)/m) Gamma((2a+1)/(2tau)) / (2 beta tau Gamma(1-1/m+(1+2a)/(2tau)))
//   E = c P (l-p-3m) / (p+m+(m-1)l)     [ = c P / r when r is defined ]
ConservedSet conserved_analytic(const ModelParams& mp);

// Independent route: double-exponential quadrature of the profile evaluators.
ConservedSet conserved_quadrature(const CompactonProfile& prof, double tol = 1e-11);

IntegralSet integral_set(const CompactonProfile& prof, double tol = 1e-11);

// H = J/(m-1) - Il/(l(l-1)).
double hamiltonian(const ModelParams& mp, const IntegralSet& ints);

// Relative residuals of the three integral identities every traveling-wave
// solution satisfies (D = p + m + (m-1) l):
//   balance:                J = (c/2) I2 - Il / (l(l-1))
//   gradient_vs_momentum:   J = (l-2)(m-1) c I2 / (2 D)
//   potential_vs_momentum:  Il = l(l-1)(p+3m-2) c I2 / (2 D)
struct RelationResiduals {
  double balance = 0;
  double gradient_vs_momentum = 0;
  double potential_vs_momentum = 0;
};

RelationResiduals check_relations(const ModelParams& mp, const IntegralSet& ints);

}  // namespace ptkdv
