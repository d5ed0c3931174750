#pragma once

#include "ptkdv/errors.hpp"

namespace ptkdv {

// log Gamma(x) for x > 0 (Lanczos, ~1e-15 relative on Gamma).
// Throws NonPositiveArgument otherwise.
double ln_gamma(double x);

// Non-regularized incomplete beta  B_x(a,b) = int_0^x t^{a-1}(1-t)^{b-1} dt,
// a,b > 0, x in [0,1]. Continued fraction with the symmetry split at
// x = (a+1)/(a+b+2). Relative error ~1e-14.
double inc_beta(double x, double a, double b);

// Gauss hypergeometric 2F1(a,b;c;z) for z in [0,1], c > 0.
// Power series for z <= 0.75, the 1-z connection formula above, and the Gauss
// summation at z = 1 (requires c-a-b > 0 there). The logarithmic case
// (integer c-a-b) near z = 1 is not supported and throws ConvergenceFailure.
double gauss_2f1(double a, double b, double c, double z);

struct JacobiElliptic {
  double sn = 0, cn = 1, dn = 1;
};

// Jacobi elliptic functions of modulus k in [0,1) via the descending Landen
// (AGM) transformation. Absolute error ~1e-15.
JacobiElliptic jacobi_elliptic(double u, double k);

double jacobi_cn(double u, double k);

// Complete elliptic integral of the first kind, modulus k in [0,1), via AGM.
double elliptic_K(double k);

namespace detail {
// Gamma(x) for any non-pole real x (reflection formula for x < 0.5).
// Throws GammaPole at non-positive integers.
double gamma_real(double x);
}  // namespace detail

}  // namespace ptkdv
