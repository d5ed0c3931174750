#pragma once

#include <optional>

#include "ptkdv/errors.hpp"

namespace ptkdv {

// Parameters of the generalized KdV family with nonlinear dispersion
// u_t + u^{l-2} u_x - alpha * d/dx [ p u^{p-1} (i u_x)^m + ... ] = 0,
// defined through the Hamiltonian
//   H = int dx [ -u^l / (l(l-1)) - alpha u^p (i u_x)^m ].
// With the reality convention -alpha (m-1) i^m = 1 (even m) the dispersive
// term of H is + u^p (u_x)^m / (m-1) on real fields.
struct ModelParams {
  double l = 3;      // nonlinearity exponent, l > 2
  double p = 1;      // field power in the dispersive term
  int m = 2;         // derivative power, even and >= 2
  double alpha = 1;  // dispersive coupling
  double c = 1;      // wave speed, c > 0
};

// Coupling fixed by the reality convention: alpha = -1 / ((m-1) i^m),
// i.e. +1 for m=2, -1/3 for m=4, +1/5 for m=6. Throws OddM unless m is
// even and >= 2.
double alpha_real(int m);

// Throws InadmissibleParams/OddM unless l > 2, m even >= 2, c > 0, p >= 0
// and everything is finite.
void validate_params(const ModelParams& mp);

// Validates and fills in alpha = alpha_real(m).
ModelParams make_params(double l, double p, int m, double c);
ModelParams make_params(double l, double p, int m, double c, double alpha);

// Exponents of the one-parameter scaling family u -> lambda^{beta} u(x/lambda):
//   beta_scale = m / (p+m-l)        (absent when l = p+m)
//   eta with 1 - eta = beta_scale (l-2)   (absent when beta_scale is)
//   i1 = (p+m-l) / (m(l-2))         width   ~ c^{i1}
//   i2 = (p+3m-l) / (m(l-2))        P       ~ c^{i2}
//   r  = -(lm+p+m-l) / (p+3m-l)     E       ~ P^{-r}  (absent when l = p+3m)
// Degenerate denominators yield empty optionals, never IEEE infinities.
struct ScalingExponents {
  std::optional<double> beta_scale;
  std::optional<double> eta;
  double i1 = 0;
  double i2 = 0;
  std::optional<double> r;
};

ScalingExponents scaling_exponents(const ModelParams& mp);

struct RegimeReport {
  bool compacton_admissible = false;  // p <= 2 and p <= l
  bool width_independent = false;     // l == p + m  (i1 == 0)
  bool stable_window = false;         // 2 < l < p + 3m
  bool marginal = false;              // l == p + 3m
};

RegimeReport classify(const ModelParams& mp);

}  // namespace ptkdv
