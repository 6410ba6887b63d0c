// Command-line front end: verify / bethe / spectrum / nogo / sweep, each
// reading a JSON config and writing a JSON report.
//
// Exit codes: 0 = ran and all assertions passed (or the solver ran clean),
//             1 = an identity failed its tolerance,
//             2 = configuration error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaudin/commands.hpp"
#include "gaudin/config.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_scale;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON config path")->required();
  cmd->add_option("--out", args.out_path, "report output path (default: stdout)");
  cmd->add_option("--seed", args.seed, "override the config seed");
  cmd->add_option("--tol-scale", args.tol_scale, "scale all default tolerances");
}

int run(const CommonArgs& args,
        const std::function<nlohmann::json(const gaudin::JobConfig&)>& command) {
  try {
    gaudin::JobConfig cfg = gaudin::load_config(args.config_path);
    if (args.seed) cfg.seed = *args.seed;
    if (args.tol_scale) {
      if (*args.tol_scale <= 0.0) throw gaudin::ConfigError("--tol-scale must be positive");
      cfg.tol_scale = *args.tol_scale;
    }
    nlohmann::json report = command(cfg);
    if (args.out_path.empty()) {
      std::cout << report.dump(2) << std::endl;
    } else {
      std::ofstream out(args.out_path);
      if (!out) throw gaudin::ConfigError("cannot write report to " + args.out_path);
      out << report.dump(2) << std::endl;
    }
    return report.value("pass", false) ? 0 : 1;
  } catch (const gaudin::ConfigError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaudin magnet workbench: commuting spin Hamiltonians, Bethe ansatz "
               "diagonalization and r-matrix structure checks"};
  app.require_subcommand(1);

  CommonArgs verify_args, bethe_args, spectrum_args, nogo_args, sweep_args;
  CLI::App* verify = app.add_subcommand("verify", "run the identity suite for a family");
  add_common(verify, verify_args);
  CLI::App* bethe = app.add_subcommand("bethe", "solve the Bethe equations and cross-check "
                                                "against exact diagonalization");
  add_common(bethe, bethe_args);
  CLI::App* spectrum = app.add_subcommand("spectrum", "joint eigenvalue table of the "
                                                      "commuting family");
  add_common(spectrum, spectrum_args);
  CLI::App* nogo = app.add_subcommand("nogo", "least-squares probe for a single r-matrix "
                                              "over a q grid");
  add_common(nogo, nogo_args);
  CLI::App* sweep = app.add_subcommand("sweep", "parameter continuation of residuals and "
                                                "Bethe roots");
  add_common(sweep, sweep_args);

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) return run(verify_args, gaudin::cmd_verify);
  if (bethe->parsed()) return run(bethe_args, gaudin::cmd_bethe);
  if (spectrum->parsed()) return run(spectrum_args, gaudin::cmd_spectrum);
  if (nogo->parsed()) return run(nogo_args, gaudin::cmd_nogo);
  if (sweep->parsed()) return run(sweep_args, gaudin::cmd_sweep);
  return 2;
}
