#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ptkdv/errors.hpp"
#include "ptkdv/runner.hpp"

namespace {

void add_model_options(CLI::App* cmd, ptkdv::RunConfig& cfg) {
  cmd->add_option("--l", cfg.l, "nonlinearity power l (> 2)");
  cmd->add_option("--p", cfg.p, "gradient-term field power p");
  cmd->add_option("--m", cfg.m, "gradient power m (even, >= 2)");
  cmd->add_option("--c", cfg.c, "wave velocity (positive)");
  cmd->add_option("--momentum", cfg.momentum,
                  "momentum P; velocity is then solved from P(c)=P");
  cmd->add_option("--tol", cfg.tol, "quadrature tolerance");
}

void add_output_options(CLI::App* cmd, ptkdv::RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "output format: json or csv");
  cmd->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compacton solutions of the generalized KdV family: exact profiles, "
               "conserved quantities, stability criteria, variational trials"};
  app.require_subcommand(0, 1);

  ptkdv::RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path,
                 "run a request described by a JSON config file");

  auto* prof = app.add_subcommand("profile", "construct a solitary-wave profile");
  add_model_options(prof, cfg);
  prof->add_option("--grid-points", cfg.grid_points, "samples per half-width");
  prof->add_option("--family", cfg.family,
                   "closed_sin2|closed_cn2|hyperelliptic|inc_beta_l3p1|inc_beta_l4p1");
  add_output_options(prof, cfg);

  auto* cons = app.add_subcommand("conserved", "mass, momentum, energy by two routes");
  add_model_options(cons, cfg);
  cons->add_option("--grid-points", cfg.grid_points, "samples per half-width");
  cons->add_option("--family", cfg.family, "profile family override");
  add_output_options(cons, cfg);

  auto* stab = app.add_subcommand("stability", "stability criteria and linearization checks");
  add_model_options(stab, cfg);
  stab->add_option("--grid-points", cfg.grid_points, "samples per half-width");
  stab->add_option("--family", cfg.family, "profile family override");
  add_output_options(stab, cfg);

  auto* vari = app.add_subcommand("variational", "trial-function optimization at fixed momentum");
  add_model_options(vari, cfg);
  vari->add_option("--grid-points", cfg.grid_points, "samples per half-width");
  vari->add_option("--family", cfg.family, "profile family for the exact reference");
  vari->add_option("--trial", cfg.trial, "post_gaussian|cos_power|both");
  add_output_options(vari, cfg);

  auto* scal = app.add_subcommand("scaling", "scaling exponents and regime classification");
  add_model_options(scal, cfg);
  add_output_options(scal, cfg);

  auto* sweep = app.add_subcommand("sweep", "tabulate solutions along c or m");
  add_model_options(sweep, cfg);
  sweep->add_option("--axis", cfg.axis, "sweep axis: c or m");
  sweep->add_option("--from", cfg.from, "axis start");
  sweep->add_option("--to", cfg.to, "axis end");
  sweep->add_option("--steps", cfg.steps, "number of samples (c axis)");
  add_output_options(sweep, cfg);

  CLI11_PARSE(app, argc, argv);

  if (!config_path.empty()) {
    std::ifstream is(config_path);
    if (!is) {
      std::cerr << R"({"error":{"type":"invalid_config","message":"cannot open config file"}})"
                << "\n";
      return 2;
    }
    try {
      cfg = ptkdv::parse_config_json(is);
    } catch (const ptkdv::Error& e) {
      std::cerr << R"({"error":{"type":"invalid_config","message":")" << e.what()
                << R"("}})" << "\n";
      return 2;
    }
    return ptkdv::run(cfg, std::cout, std::cerr);
  }

  if (prof->parsed()) cfg.command = "profile";
  else if (cons->parsed()) cfg.command = "conserved";
  else if (stab->parsed()) cfg.command = "stability";
  else if (vari->parsed()) cfg.command = "variational";
  else if (scal->parsed()) cfg.command = "scaling";
  else if (sweep->parsed()) cfg.command = "sweep";
  else {
    std::cout << app.help();
    return 0;
  }
  return ptkdv::run(cfg, std::cout, std::cerr);
}
