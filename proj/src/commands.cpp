#include "gaudin/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include "gaudin/algebra.hpp"
#include "gaudin/bethe.hpp"
#include "gaudin/magnet.hpp"
#include "gaudin/rmatrix.hpp"
#include "gaudin/verify.hpp"

namespace gaudin {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json meta(const JobConfig& cfg, const char* command) {
  json m{{"command", command},
         {"family", cfg.family.name()},
         {"sites", cfg.system.size()},
         {"dimension", cfg.system.dimension()},
         {"seed", cfg.seed},
         {"tol_scale", cfg.tol_scale}};
  if (cfg.family.has_param()) m["param"] = cfg.family.param();
  return m;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

GeneratorRealization bethe_realization(const JobConfig& cfg) {
  switch (cfg.family.tag()) {
    case FamilyTag::Rational: return GeneratorRealization::rational(cfg.system);
    case FamilyTag::QDeformed: return GeneratorRealization::q_coth(cfg.system, cfg.family.param());
    default:
      throw ConfigError("config: Bethe equations are available for the rational and q-deformed "
                        "families only");
  }
}

json solution_row(const GeneratorRealization& real, const JointSpectrum& oracle,
                  const BetheState& state) {
  json row;
  row["roots"] = json::array();
  for (Complex r : state.roots) row["roots"].push_back(complex_to_json(r));
  row["residual"] = state.residual;
  row["iterations"] = state.iterations;

  std::vector<double> formula = magnet_eigenvalues_from_roots(real, state.roots);
  row["magnet_eigenvalues"] = formula;

  Vector v = bethe_vector(real, state.roots);
  v.normalize();
  int best = 0;
  double best_overlap = 0.0;
  for (int col = 0; col < oracle.vectors.cols(); ++col) {
    double overlap = std::abs(Complex(oracle.vectors.col(col).dot(v)));
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best = col;
    }
  }
  double max_err = 0.0;
  json oracle_vals = json::array();
  for (int i = 0; i < oracle.eigenvalues.cols(); ++i) {
    oracle_vals.push_back(oracle.eigenvalues(best, i));
    max_err = std::max(max_err, std::abs(oracle.eigenvalues(best, i) -
                                         formula[static_cast<std::size_t>(i)]));
  }
  row["oracle"] = {{"matched_row", best},
                   {"eigenvalues", oracle_vals},
                   {"max_eigenvalue_error", max_err},
                   {"overlap", best_overlap}};
  return row;
}

}  // namespace

json strip_timing(json report) {
  report.erase("timing");
  return report;
}

json cmd_verify(const JobConfig& cfg) {
  Stopwatch watch;
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.tol_scale = cfg.tol_scale;
  opt.tolerance_overrides = cfg.tolerance_overrides;
  opt.triples = cfg.verify.triples;
  opt.lambda_pairs = cfg.verify.lambda_pairs;

  IdentityReport report = run_identity_suite(cfg.system, cfg.family, opt);

  json out = meta(cfg, "verify");
  out["identities"] = report.to_json();
  out["pass"] = report.all_pass();
  out["max_residual"] = report.max_residual();
  out["timing"] = {{"total_ms", watch.ms()}};
  return out;
}

json cmd_bethe(const JobConfig& cfg) {
  Stopwatch watch;
  if (!cfg.bethe) throw ConfigError("config: the bethe command needs a \"bethe\" section");
  GeneratorRealization real = bethe_realization(cfg);

  BetheSolveOptions opt;
  opt.seed = cfg.seed;
  BetheSolveResult solved = solve_bethe(real, cfg.bethe->n, cfg.bethe->seeds, opt);

  MagnetSet magnets = build_magnets(cfg.system, cfg.family);
  JointSpectrum oracle = simultaneous_spectrum(magnets, cfg.seed);

  json out = meta(cfg, "bethe");
  out["n"] = cfg.bethe->n;
  out["solutions"] = json::array();
  for (const BetheState& state : solved.solutions) {
    out["solutions"].push_back(solution_row(real, oracle, state));
  }
  out["diagnostics"] = {{"total_starts", solved.total_starts},
                        {"converged_starts", solved.converged_starts},
                        {"rejected_out_of_domain", solved.rejected_out_of_domain},
                        {"rejected_degenerate", solved.rejected_degenerate},
                        {"rejected_invariants", solved.rejected_invariants},
                        {"solutions_found", solved.solutions.size()}};
  out["pass"] = true;  // non-convergence is data, not failure
  out["timing"] = {{"total_ms", watch.ms()}};
  return out;
}

json cmd_spectrum(const JobConfig& cfg) {
  Stopwatch watch;
  MagnetSet magnets = build_magnets(cfg.system, cfg.family);
  JointSpectrum joint = simultaneous_spectrum(magnets, cfg.seed);

  json out = meta(cfg, "spectrum");
  json table = json::array();
  for (int row = 0; row < joint.eigenvalues.rows(); ++row) {
    json entry;
    entry["eigenvalues"] = json::array();
    double sum = 0.0;
    for (int col = 0; col < joint.eigenvalues.cols(); ++col) {
      entry["eigenvalues"].push_back(joint.eigenvalues(row, col));
      sum += joint.eigenvalues(row, col);
    }
    entry["sum"] = sum;
    table.push_back(entry);
  }
  out["table"] = table;
  out["max_residual"] = joint.max_residual;
  out["attempts"] = joint.attempts;
  out["pass"] = true;
  out["timing"] = {{"total_ms", watch.ms()}};
  return out;
}

json cmd_nogo(const JobConfig& cfg) {
  Stopwatch watch;
  if (cfg.family.tag() != FamilyTag::QDeformed) {
    throw ConfigError("config: the nogo command needs the q-deformed family");
  }
  NoGoSettings settings = cfg.nogo.value_or(NoGoSettings{});

  json out = meta(cfg, "nogo");
  out["lambda"] = complex_to_json(settings.lambda);
  out["mu"] = complex_to_json(settings.mu);
  json rows = json::array();
  for (double q : settings.q_grid) {
    GeneratorRealization real = q == 0.0
                                    ? GeneratorRealization::rational(cfg.system)
                                    : GeneratorRealization::q_coth(cfg.system, q);
    NoGoResult probe = no_go_probe(real, settings.lambda, settings.mu, cfg.seed);
    json row{{"q", q},
             {"residual", probe.residual},
             {"constraint_upper", complex_to_json(probe.constraint_upper)},
             {"constraint_lower", complex_to_json(probe.constraint_lower)},
             {"constraint_gap", probe.constraint_gap},
             {"expected_gap", 2.0 * std::abs(q)}};
    if (q == 0.0) {
      json r = json::array();
      for (int a = 0; a < 4; ++a) {
        json line = json::array();
        for (int b = 0; b < 4; ++b) line.push_back(complex_to_json(probe.best_r(a, b)));
        r.push_back(line);
      }
      row["recovered_r"] = r;
    }
    rows.push_back(row);
  }
  out["rows"] = rows;
  out["pass"] = true;
  out["timing"] = {{"total_ms", watch.ms()}};
  return out;
}

json cmd_sweep(const JobConfig& cfg) {
  Stopwatch watch;
  if (!cfg.sweep) throw ConfigError("config: the sweep command needs a \"sweep\" section");
  const SweepSettings& settings = *cfg.sweep;

  auto family_at = [&](double value) {
    switch (cfg.family.tag()) {
      case FamilyTag::Trigonometric: return CouplingFamily::trigonometric(value);
      case FamilyTag::Hyperbolic: return CouplingFamily::hyperbolic(value);
      case FamilyTag::QDeformed: return CouplingFamily::q_deformed(value);
      default:
        throw ConfigError("config: sweep requires a parametric family");
    }
  };

  json out = meta(cfg, "sweep");
  json rows = json::array();
  std::vector<std::vector<Complex>> previous_roots;
  for (double value : settings.values) {
    CouplingFamily family = family_at(value);
    MagnetSet magnets = build_magnets(cfg.system, family);
    double worst_comm = 0.0;
    for (std::size_t i = 0; i < magnets.hamiltonians.size(); ++i) {
      for (std::size_t j = i + 1; j < magnets.hamiltonians.size(); ++j) {
        worst_comm = std::max(worst_comm, commutator_norm(magnets.hamiltonians[i],
                                                          magnets.hamiltonians[j]));
      }
    }
    json row{{"value", value},
             {"max_commutator", worst_comm},
             {"sum_rule_residual", sum_rule_check(magnets)}};

    if (settings.bethe_n) {
      if (cfg.family.tag() != FamilyTag::QDeformed) {
        throw ConfigError("config: sweep.bethe_n requires the q-deformed family");
      }
      GeneratorRealization real = GeneratorRealization::q_coth(cfg.system, value);
      BetheSolveOptions opt;
      opt.seed = cfg.seed;
      BetheSolveResult solved = solve_bethe(real, *settings.bethe_n, {}, opt);
      json sols = json::array();
      std::vector<std::vector<Complex>> current_roots;
      for (const BetheState& state : solved.solutions) {
        json roots = json::array();
        for (Complex r : state.roots) roots.push_back(complex_to_json(r));
        sols.push_back({{"roots", roots}, {"residual", state.residual}});
        current_roots.push_back(state.roots);
      }
      row["solutions"] = sols;
      // continuation metric: distance to the closest previous-value root set
      if (!previous_roots.empty() && !current_roots.empty()) {
        double adjacent = 0.0;
        for (const auto& roots : current_roots) {
          double best = 1e300;
          for (const auto& prev : previous_roots) {
            if (prev.size() != roots.size()) continue;
            double dist = 0.0;
            for (std::size_t k = 0; k < roots.size(); ++k) {
              dist = std::max(dist, std::abs(roots[k] - prev[k]));
            }
            best = std::min(best, dist);
          }
          adjacent = std::max(adjacent, best);
        }
        row["adjacent_root_distance"] = adjacent;
      }
      previous_roots = std::move(current_roots);
    }
    rows.push_back(row);
  }
  out["rows"] = rows;
  out["pass"] = true;

  if (!settings.csv_path.empty()) {
    std::ofstream csv(settings.csv_path);
    if (!csv) throw ConfigError("config: cannot write CSV to " + settings.csv_path);
    csv << "value,max_commutator,sum_rule_residual,solution,root,root_re,root_im,residual\n";
    for (const json& row : rows) {
      if (row.contains("solutions") && !row["solutions"].empty()) {
        int sol_index = 0;
        for (const json& sol : row["solutions"]) {
          int root_index = 0;
          for (const json& root : sol["roots"]) {
            csv << row["value"].get<double>() << ',' << row["max_commutator"].get<double>()
                << ',' << row["sum_rule_residual"].get<double>() << ',' << sol_index << ','
                << root_index << ',' << root["re"].get<double>() << ','
                << root["im"].get<double>() << ',' << sol["residual"].get<double>() << '\n';
            ++root_index;
          }
          ++sol_index;
        }
      } else {
        csv << row["value"].get<double>() << ',' << row["max_commutator"].get<double>() << ','
            << row["sum_rule_residual"].get<double>() << ",,,,,\n";
      }
    }
    out["csv"] = settings.csv_path;
  }
  out["timing"] = {{"total_ms", watch.ms()}};
  return out;
}

}  // namespace gaudin
