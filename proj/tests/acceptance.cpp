// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here on purpose; do not loosen them to make
// a failing build green.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ptkdv/conserved.hpp"
#include "ptkdv/errors.hpp"
#include "ptkdv/numerics.hpp"
#include "ptkdv/profile.hpp"
#include "ptkdv/specfun.hpp"
#include "ptkdv/stability.hpp"
#include "ptkdv/variational.hpp"

using namespace ptkdv;

namespace {

int g_failures = 0;

void report(int idx, const std::string& desc, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", idx, desc.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0 ? 0.0 : std::abs(a - b) / s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

const std::vector<ModelParams> kGrid = {
    make_params(3, 1, 2, 1), make_params(4, 1, 2, 1), make_params(5, 1, 4, 1),
    make_params(6, 2, 4, 1), make_params(8, 2, 4, 1), make_params(4, 1, 6, 1),
    make_params(5, 2, 6, 1)};
const std::vector<double> kSpeeds = {0.5, 1.0, 2.0};

// ----- criterion 1: half-width constants by two independent routes -----
void criterion1() {
  constexpr double kTol = 1e-8;
  const double f1_ref = M_PI * std::sqrt(2.0) / 4.0;  // 1.110720734539591562
  const double f2_ref = M_PI / 3.0;                   // 1.047197551196597746
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  try {
    const double f1_hyp = gauss_2f1(0.25, 0.25, 1.25, 1.0);
    const double f2_hyp = gauss_2f1(1.0 / 6.0, 1.0 / 6.0, 7.0 / 6.0, 1.0);
    const double f1_quad =
        integrate([](double x) { return std::pow(1.0 - x * x * x * x, -0.25); }, 0.0, 1.0,
                  1e-12)
            .value;
    const double f2_quad =
        integrate([](double x) { return std::pow(1.0 - std::pow(x, 6.0), -1.0 / 6.0); },
                  0.0, 1.0, 1e-12)
            .value;
    const double worst =
        std::max(std::max(std::abs(f1_hyp - f1_ref), std::abs(f1_quad - f1_ref)),
                 std::max(std::abs(f2_hyp - f2_ref), std::abs(f2_quad - f2_ref)));
    // the same constants must come out of the half-width formula
    const double zf1 = z_halfwidth(2.0, 4);
    const double zf2 = z_halfwidth(3.0, 6);
    ok = worst <= kTol && std::abs(zf1 - f1_ref) <= kTol && std::abs(zf2 - f2_ref) <= kTol;
    why = fmt("max abs dev %.3g, %.0f ms", worst, 1e3 * seconds_since(t0));
    if (seconds_since(t0) > 1.0) {
      ok = false;
      why += " (over 1 s budget)";
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(1, "hypergeometric and singular-quadrature half-width constants agree", ok, why);
}

// ----- criterion 2: closed-form profiles for the two m=2 families -----
void criterion2() {
  bool ok = true;
  std::string why;
  try {
    {
      const auto t0 = std::chrono::steady_clock::now();
      double sup = 0;
      for (double c : {1.0, 2.0}) {
        const auto prof = build_profile(make_params(3, 1, 2, c),
                                        ProfileFamily::hyperelliptic, 128);
        for (int i = 0; i <= 2000; ++i) {
          const double y = prof.y_half * (2.0 * i / 2000.0 - 1.0);
          const double exact =
              3.0 * c * std::pow(std::cos(y / (2.0 * std::sqrt(6.0))), 2.0);
          sup = std::max(sup, std::abs(prof.f(y) - exact));
        }
      }
      ok = sup <= 1e-8;
      why = fmt("trig sup dev %.3g in %.0f ms", sup, 1e3 * seconds_since(t0));
      if (seconds_since(t0) > 1.0) {
        ok = false;
        why += " (over 1 s budget)";
      }
    }
    {
      const auto t0 = std::chrono::steady_clock::now();
      double worst = 0;
      for (double c : {1.0, 2.0}) {
        const auto prof =
            build_profile(make_params(4, 1, 2, c), ProfileFamily::closed_cn2, 128);
        worst = std::max(worst, first_integral_residual(prof));
      }
      ok = ok && worst <= 1e-8;
      why += fmt("; elliptic residual %.3g in %.0f ms", worst, 1e3 * seconds_since(t0));
      if (seconds_since(t0) > 1.0) {
        ok = false;
        why += " (over 1 s budget)";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(2, "trigonometric and elliptic closed forms reproduced", ok, why);
}

// ----- criterion 3: energy-momentum-velocity relation and power law -----
void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  try {
    double worst_rel = 0;
    for (const auto& base : kGrid) {
      for (double c : kSpeeds) {
        ModelParams mp = base;
        mp.c = c;
        const auto prof = build_profile(mp, 96);
        const auto ints = integral_set(prof);
        const double H = hamiltonian(mp, ints);
        const auto ex = scaling_exponents(mp);
        if (!ex.r) throw Error("unexpected marginal point in the grid");
        const double P = ints.I2 / 2.0;
        worst_rel = std::max(worst_rel, rel(H, c * P / *ex.r));
      }
    }
    ok = worst_rel <= 1e-6;
    why = fmt("worst |H - cP/r| rel %.3g", worst_rel);

    // slope of log|E| against log P across five speeds must equal -r
    double worst_fit = 0;
    for (const auto& base : kGrid) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (int k = 0; k < 5; ++k) {
        ModelParams mp = base;
        mp.c = 0.5 * std::pow(4.0, k / 4.0);
        const auto cs = conserved_analytic(mp);
        const double x = std::log(cs.P), y = std::log(std::abs(cs.E));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      const double slope = (5 * sxy - sx * sy) / (5 * sxx - sx * sx);
      const double want = -*scaling_exponents(base).r;
      worst_fit = std::max(worst_fit, std::abs(slope - want));
    }
    ok = ok && worst_fit <= 1e-4;
    why += fmt(", worst power-law slope dev %.3g, %.1f s", worst_fit, seconds_since(t0));
    if (seconds_since(t0) > 10.0) {
      ok = false;
      why += " (over 10 s budget)";
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(3, "E = cP/r on the parameter grid and E ~ P^{-r} power-law fit", ok, why);
}

// ----- criterion 4: integral relations, with a non-solution control -----
void criterion4() {
  bool ok = true;
  std::string why;
  try {
    double worst = 0;
    for (const auto& base : kGrid) {
      for (double c : kSpeeds) {
        ModelParams mp = base;
        mp.c = c;
        const auto ints = integral_set(build_profile(mp, 96));
        const auto rr = check_relations(mp, ints);
        worst = std::max({worst, rr.balance, rr.gradient_vs_momentum,
                          rr.potential_vs_momentum});
      }
    }
    ok = worst <= 1e-6;
    // control: same integrals tested against the wrong velocity must blow up
    ModelParams wrong = make_params(3, 1, 2, 1.5);
    const auto rr = check_relations(wrong, integral_set(build_profile(
                                               make_params(3, 1, 2, 1.0), 96)));
    const bool control = rr.balance > 1e-2 && rr.gradient_vs_momentum > 1e-2;
    ok = ok && control;
    why = fmt("worst residual %.3g; control violation %.3g", worst, rr.balance);
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(4, "virial-type integral relations hold only on true solutions", ok, why);
}

// ----- criterion 5: variational optima against the reference table -----
void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  try {
    auto within = [](double got, double want) { return std::abs(got - want) <= 0.01 * std::abs(want); };
    {
      const auto t = optimize_post_gaussian(make_params(3, 1, 2, 1), 1.0);
      const double coef = std::pow(t.beta, 2.0 * t.shape);
      if (!(within(t.A, 0.583578) && within(coef, 0.0314705) &&
            within(2.0 * t.shape, 2.308))) {
        ok = false;
        why += fmt("[m=2 gaussian A=%.6f coef=%.7f 2n=%.4f]", t.A, coef, 2.0 * t.shape);
      }
    }
    {
      const auto t = optimize_post_gaussian(make_params(3, 1, 4, 1), 1.0);
      const double coef = std::pow(t.beta, 2.0 * t.shape);
      if (!(within(t.A, 0.995936) && within(coef, 0.396108) &&
            within(2.0 * t.shape, 1.84131))) {
        ok = false;
        why += fmt("[m=4 gaussian A=%.6f coef=%.7f 2n=%.5f]", t.A, coef, 2.0 * t.shape);
      }
    }
    {
      const auto t = optimize_cos_power(make_params(3, 1, 4, 1), 1.0);
      if (!(within(t.beta, 0.342787) && within(t.shape, 5.67846) &&
            within(t.A, 0.97067))) {
        ok = false;
        why += fmt("[m=4 cosine beta=%.6f gamma=%.5f A=%.6f]", t.beta, t.shape, t.A);
      }
    }
    {
      // the cosine-power ansatz contains the exact m=2 solution
      const auto t = optimize_cos_power(make_params(3, 1, 2, 1), 1.0);
      const auto exact = build_profile(make_params(3, 1, 2, t.c), 256);
      const auto d = compare_profiles(exact, t);
      if (!(std::abs(t.shape - 2.0) < 1e-3 && d.sup < 1e-4 * t.A)) {
        ok = false;
        why += fmt("[exact recovery gamma=%.6f sup=%.3g]", t.shape, d.sup);
      }
    }
    why += fmt(" %.1f s", seconds_since(t0));
    if (seconds_since(t0) > 30.0) {
      ok = false;
      why += " (over 30 s budget)";
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(5, "trial-function optima match the reference table within 1%", ok, why);
}

// ----- criterion 6: the stability criteria agree with each other -----
void criterion6() {
  bool ok = true;
  std::string why;
  try {
    std::vector<ModelParams> pts = kGrid;
    pts.push_back(make_params(20, 1, 2, 1));
    for (const auto& base : pts) {
      for (double c : kSpeeds) {
        ModelParams mp = base;
        mp.c = c;
        const auto prof = build_profile(mp, 96);
        const auto ints = integral_set(prof);
        const bool s1 = dPdc_criterion(mp).positive;
        const bool s2 = phi2_rho_half(mp, ints).numeric > 0;
        const bool s3 = classify(mp).stable_window;
        if (s1 != s2 || s2 != s3) {
          ok = false;
          why += fmt("[disagree at l=%g p=%g m=%d c=%g]", mp.l, mp.p, mp.m, c);
        }
      }
    }
    // marginal line: the second variation must vanish identically
    const ModelParams mp = make_params(7, 1, 2, 1);
    const auto ints = integral_set(build_profile(mp, 128));
    const auto sv = phi2_rho_half(mp, ints);
    const double scale = 1e-8 * (ints.I2 / 2.0) * mp.c;
    if (!(std::abs(sv.formula) < scale && std::abs(sv.numeric) < scale)) {
      ok = false;
      why += fmt("[marginal phi2 formula=%.3g numeric=%.3g]", sv.formula, sv.numeric);
    }
    if (ok) why = "momentum slope, second variation and window flag concur";
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(6, "independent stability criteria classify every grid point identically", ok,
         why);
}

// ----- criterion 7: linearization annihilates the symmetry modes -----
void criterion7() {
  bool ok = true;
  std::string why;
  try {
    const ModelParams mp = make_params(3, 1, 2, 1);
    const double g512 = goldstone_residual(build_profile(mp, 512));
    const double g1024 = goldstone_residual(build_profile(mp, 1024));
    ok = g512 < 1e-3 && g1024 < g512;
    why = fmt("translation residual %.3g -> %.3g under refinement", g512, g1024);

    const double d3 = lc_derivative_identity(mp, ProfileFamily::closed_sin2, 1e-3);
    const ModelParams mp4 = make_params(4, 1, 2, 1);
    const double r2 = lc_derivative_identity(mp4, ProfileFamily::closed_cn2, 1e-2);
    const double r3 = lc_derivative_identity(mp4, ProfileFamily::closed_cn2, 1e-3);
    const bool second_order = r2 > 25.0 * r3;  // expect ~100x
    ok = ok && d3 < 1e-3 && r3 < 1e-3 && second_order;
    why += fmt("; velocity-mode residual %.3g, dc refinement %.3g -> %.3g", d3, r2, r3);
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(7, "L f' = 0 and L df/dc = -f hold with the expected convergence", ok, why);
}

// ----- criterion 8: Lyapunov functional equality -----
void criterion8() {
  bool ok = true;
  std::string why;
  try {
    double worst = 0;
    for (const auto& base : kGrid) {
      for (double c : kSpeeds) {
        ModelParams mp = base;
        mp.c = c;
        const auto ints = integral_set(build_profile(mp, 96));
        const double H = hamiltonian(mp, ints);
        worst = std::max(worst, std::abs(lyapunov_gap(mp, ints)) / std::abs(H));
      }
    }
    ok = worst <= 1e-6;
    why = fmt("worst relative gap %.3g", worst);
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(8, "H equals its Lyapunov expression in J on every solution", ok, why);
}

// ----- criterion 9: CLI cookbook reproduces the reference figures -----
struct Csv {
  std::vector<double> y, f;
};

bool read_profile_csv(const std::string& path, Csv& csv, std::string& err) {
  std::ifstream is(path);
  if (!is) {
    err = "cannot open " + path;
    return false;
  }
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'y') continue;
    double y, f, fp;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &y, &f, &fp) != 3) {
      err = "bad row: " + line;
      return false;
    }
    csv.y.push_back(y);
    csv.f.push_back(f);
  }
  if (csv.y.size() < 65) {
    err = fmt("only %zu rows", csv.y.size());
    return false;
  }
  return true;
}

bool monotone_halves(const Csv& csv, std::string& err) {
  const std::size_t n = csv.y.size();
  const std::size_t mid = n / 2;
  if (std::abs(csv.y[mid]) > 1e-12) {
    err = fmt("center sample at y=%g", csv.y[mid]);
    return false;
  }
  double peak = 0;
  for (double v : csv.f) peak = std::max(peak, v);
  if (csv.f[mid] != peak) {
    err = "maximum not at y=0";
    return false;
  }
  for (std::size_t i = 1; i < n; ++i) {
    const bool rising = csv.y[i] <= 0;
    const double df = csv.f[i] - csv.f[i - 1];
    if ((rising && df < -1e-12 * peak) || (!rising && df > 1e-12 * peak)) {
      err = fmt("half not monotone near y=%g", csv.y[i]);
      return false;
    }
  }
  return true;
}

void criterion9(const char* cli) {
  bool ok = true;
  std::string why;
  if (!cli) {
    report(9, "command-line figure reproduction", false,
           "path to the CLI binary must be passed as argv[1]");
    return;
  }
  try {
    const std::string fig1 = "/tmp/ptkdv_accept_fig1.csv";
    const std::string fig2 = "/tmp/ptkdv_accept_fig2.csv";
    const std::string cmd1 = std::string("\"") + cli +
                             "\" profile --l 3 --p 1 --m 4 --c 1 --grid-points 256 --out " +
                             fig1;
    const std::string cmd2 = std::string("\"") + cli +
                             "\" profile --l 6 --p 2 --m 4 --c 2 --grid-points 256 --out " +
                             fig2;
    if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0)
      throw Error("CLI invocation failed");

    Csv c1, c2;
    std::string err;
    if (!read_profile_csv(fig1, c1, err) || !read_profile_csv(fig2, c2, err))
      throw Error(err);
    if (!monotone_halves(c1, err) || !monotone_halves(c2, err)) throw Error(err);

    // first figure: l=3, p=1, m=4 at c=1. A=3 and the incomplete-beta width.
    const double peak1 = c1.f[c1.f.size() / 2];
    const double width1 = c1.y.back();
    ok = ok && rel(peak1, 3.0) < 1e-9;
    ok = ok && rel(width1, 4.593260645425901198) < 1e-9;
    why += fmt("fig1 peak %.9f half-width %.12f", peak1, width1);

    // second figure: l=6, p=2, m=4 at c=2. A=30^{1/4}, tau=2, a=1, and the
    // half-width ties back to the first criterion-1 constant.
    const double peak2 = c2.f[c2.f.size() / 2];
    const double width2 = c2.y.back();
    const auto hp = hyperelliptic_params(make_params(6, 2, 4, 2));
    ok = ok && rel(peak2, std::pow(30.0, 0.25)) < 1e-9;
    ok = ok && rel(hp.A, std::pow(30.0, 0.25)) < 1e-12;
    ok = ok && std::abs(hp.a - 1.0) < 1e-12 && std::abs(hp.tau - 2.0) < 1e-12;
    ok = ok && rel(width2 * hp.beta, M_PI * std::sqrt(2.0) / 4.0) < 1e-9;
    why += fmt("; fig2 peak %.9f scaled half-width %.12f", peak2, width2 * hp.beta);
    std::remove(fig1.c_str());
    std::remove(fig2.c_str());
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(9, "CLI cookbook reproduces both reference figures", ok, why);
}

}  // namespace

int main(int argc, char** argv) {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(argc > 1 ? argv[1] : nullptr);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
