#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ptkdv/params.hpp"

namespace ptkdv {

// One request against the library: a command plus its options. The CLI and
// JSON config files both reduce to this.
struct RunConfig {
  std::string command;  // profile|conserved|stability|variational|scaling|sweep
  double l = 3.0;
  double p = 1.0;
  int m = 2;
  double c = 1.0;
  std::optional<double> momentum;  // resolves c through the momentum-velocity map
  int grid_points = 256;
  std::string family;              // profile family override, empty = automatic
  std::string trial = "post_gaussian";  // variational: post_gaussian|cos_power|both
  std::string format;              // json|csv, empty = command default
  std::string out_path;            // empty = write to the provided stream
  double tol = 1e-11;
  // sweep controls
  std::string axis = "c";  // c|m
  double from = 0.5;
  double to = 2.0;
  int steps = 8;
};

RunConfig parse_config_json(std::istream& is);

// Executes the request. Returns 0 on success, 2 on invalid parameters or
// configuration, 3 on numerical failure; errors are emitted as JSON on err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ptkdv
