#pragma once

#include <string>

#include "ptkdv/params.hpp"
#include "ptkdv/profile.hpp"

namespace ptkdv {

enum class TrialFamily {
  post_gaussian,  // A exp(-|beta y|^{2n}), shape parameter n
  cos_power,      // A cos^gamma(beta y) on |beta y| < pi/2, shape parameter gamma
};

const char* trial_family_name(TrialFamily fam);
TrialFamily trial_family_from_name(const std::string& name);

// Shape integrals of the trial family at unit amplitude and width:
//   C1 = int w^l dz,  C2 = int (w')^m w^p dz,  C5 = int w^2 dz,
// quadrature is authoritative; closed forms are cross-checked against it.
// C3, C4 are the assembled coefficients of the reduced Hamiltonian
//   H(beta) = -C3 P^{l/2} beta^{(l-2)/2} + C4 P^{(p+m)/2} beta^{(p+3m-2)/2}.
struct CConstants {
  double C1 = 0, C2 = 0, C5 = 0;
  double C1_closed = 0, C2_closed = 0, C5_closed = 0;
  double C3 = 0, C4 = 0;
  bool discrepant = false;  // quadrature and closed forms disagree beyond 1e-8
};

CConstants c_constants(const ModelParams& mp, TrialFamily fam, double shape);

// Width minimizing the reduced Hamiltonian at fixed momentum P; requires the
// bounded regime l < p + 3m.
double beta_star(const ModelParams& mp, const CConstants& cc, double P);

double reduced_hamiltonian(const ModelParams& mp, const CConstants& cc, double P,
                           double beta);

struct TrialFunction {
  TrialFamily family = TrialFamily::post_gaussian;
  double shape = 0;  // n or gamma
  double A = 0;
  double beta = 0;
  double P = 0;
  double H = 0;
  double c = 0;  // velocity r H / P implied by the scaling relation
  int iterations = 0;
};

double trial_eval(const TrialFunction& t, double y);

// Optimize H over (beta, shape) at fixed momentum.
TrialFunction optimize_post_gaussian(const ModelParams& mp, double P);
TrialFunction optimize_cos_power(const ModelParams& mp, double P);

struct ProfileDistance {
  double l2 = 0;
  double sup = 0;
};

// Norms of (exact - trial) sampled over the union of both supports.
ProfileDistance compare_profiles(const CompactonProfile& exact, const TrialFunction& trial,
                                 int n_pts = 2048);

}  // namespace ptkdv
