#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gaudin/couplings.hpp"
#include "gaudin/spin_system.hpp"
#include "gaudin/types.hpp"

namespace gaudin {

/// Invalid or malformed configuration; mapped to exit code 2 by the CLI.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifySettings {
  int triples = 100;       // random parameter triples per Gaudin-equation check
  int lambda_pairs = 5;    // random spectral-argument pairs
};

struct BetheSettings {
  int n = 1;
  std::vector<std::vector<Complex>> seeds;  // optional user-supplied starts
};

struct NoGoSettings {
  std::vector<double> q_grid{0.0, 0.25, 0.5, 1.0};
  Complex lambda{0.7, 0.3};
  Complex mu{-0.3, 0.1};
};

struct SweepSettings {
  std::vector<double> values;
  std::optional<int> bethe_n;
  std::string csv_path;  // empty: no CSV written
};

struct JobConfig {
  SpinSystem system;
  CouplingFamily family;
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  std::map<std::string, double> tolerance_overrides;
  VerifySettings verify;
  std::optional<BetheSettings> bethe;
  std::optional<NoGoSettings> nogo;
  std::optional<SweepSettings> sweep;
};

/// Parse and validate a config document.  Unknown fields anywhere are
/// rejected; all SpinSystem and CouplingFamily invariants are enforced here
/// so commands can assume a valid job.  Throws ConfigError.
JobConfig parse_config(const nlohmann::json& doc);

/// Convenience: read a file, parse JSON, then parse_config.
JobConfig load_config(const std::string& path);

}  // namespace gaudin
