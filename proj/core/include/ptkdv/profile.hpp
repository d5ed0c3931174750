#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ptkdv/params.hpp"

namespace ptkdv {

enum class ProfileFamily {
  closed_sin2,     // l=3, p=1, m=2: f = 3c cos^2(y / (2 sqrt 6))
  closed_cn2,      // l=4, p=1, m=2: f = sqrt(6c) cn^2((c/96)^{1/4} y, k^2=1/2)
  hyperelliptic,   // generic: f = A Z^a(beta y), (Z')^m = 1 - Z^{2 tau}
  inc_beta_l3p1,   // l=3, p=1, even m: incomplete-beta parametrization
  inc_beta_l4p1,   // l=4, p=1, even m: incomplete-beta parametrization
};

const char* family_name(ProfileFamily f);
ProfileFamily family_from_name(const std::string& name);  // throws UnsupportedFamily

// Parameters of the hyperelliptic ansatz f = A Z^a(beta (x-ct)) with
// (Z')^m = 1 - Z^{2 tau}:
//   a    = m / (m+p-2)
//   tau  = m (l-2) / (2 (m+p-2))
//   A    = [c l (l-1) / 2]^{1/(l-2)}
//   beta = [c l (l-1) / 2]^{(l-p-m)/(m(l-2))} / (a [l(l-1)]^{1/m})
struct HyperellipticParams {
  double a = 0;
  double tau = 0;
  double A = 0;
  double beta = 0;
};

HyperellipticParams hyperelliptic_params(const ModelParams& mp);

// Half-width of the Z-profile in z units: y(1) = int_0^1 (1-x^{2 tau})^{-1/m} dx
//                                              = Gamma(1/(2tau)) Gamma(1-1/m) / (2tau Gamma(1/(2tau)+1-1/m)).
double z_halfwidth(double tau, int m);

// Inverse of the strictly increasing map y(Z) = Z * 2F1(1/m, 1/(2tau); 1+1/(2tau); Z^{2tau})
// on Z in [0,1]. Throws BeyondSupport when y is outside [0, z_halfwidth].
double z_of_y(double tau, int m, double y);

// Uniform symmetric samples over [-y_half, y_half]; parallel arrays.
struct ProfileGrid {
  std::vector<double> y;
  std::vector<double> f;
  std::vector<double> fp;
};

// A traveling-wave profile in the co-moving coordinate y = x - ct, centered
// so the maximum f(0) = A sits at y = 0 and f vanishes for |y| >= y_half.
// Evaluators return 0 outside the support. Instances are immutable once built.
struct CompactonProfile {
  ModelParams params;
  ProfileFamily family = ProfileFamily::hyperelliptic;
  double A = 0;       // amplitude
  double beta_w = 0;  // width scale of the family's parametrization
  double a_exp = 0;   // Z-power of the hyperelliptic representation
  double tau = 0;
  double y_half = 0;  // half-support
  ProfileGrid grid;   // 2*n_grid+1 samples
  std::function<double(double)> f;
  std::function<double(double)> fp;
  std::function<double(double)> fpp;  // analytic; may diverge at y=0 when m>2
};

// Family the library treats as authoritative for the given parameters:
// the m=2 closed forms where they exist, the hyperelliptic ansatz otherwise.
ProfileFamily default_family(const ModelParams& mp);

// Builds a centered profile with 2*n_grid+1 samples (n_grid >= 64). Requires
// alpha = alpha_real(m), p <= 2, p <= l, m+p > 2; throws InadmissibleParams /
// FamilyMismatch otherwise.
CompactonProfile build_profile(const ModelParams& mp, ProfileFamily family, int n_grid = 256);
CompactonProfile build_profile(const ModelParams& mp, int n_grid = 256);

// Distance from the support edge at which the profile reaches f_val, i.e. the
// incomplete-beta parametrization of the rising branch:
//   l=3, p=1: 2^{1/m} 3^{(m-1)/m} c^{(m-2)/m} B_{f/(3c)}((m-1)/m, (m-1)/m)
//   l=4, p=1: (3/2)^{(m-1)/(2m)} c^{(m-3)/(2m)} B_{f^2/(6c)}((m-1)/(2m), (m-1)/m)
double inc_beta_forward(const ModelParams& mp, double f_val);

// max over interior grid samples of |(c/2) f^{2-p} - f^{l-p}/(l(l-1)) - (f')^m|,
// normalized by (c/2) A^{2-p}.
double first_integral_residual(const CompactonProfile& prof);

struct WeakSolutionCheck {
  bool continuous = false;   // f -> 0 at the support edge
  double edge_flux = 0;      // limit of (f')^m f^p at the edge (its jump across the edge)
  bool ok = false;           // continuous and edge_flux ~ 0
};

WeakSolutionCheck weak_solution_check(const CompactonProfile& prof);

// CSV emission: comment header with the construction parameters, then
// y,f,fprime rows at 17 significant digits (round-trip exact).
void write_csv(const CompactonProfile& prof, std::ostream& os);

}  // namespace ptkdv
