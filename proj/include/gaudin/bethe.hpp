#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gaudin/algebra.hpp"
#include "gaudin/types.hpp"

namespace gaudin {

/// A converged root set of the Bethe equations
///   W(xi_a) = sum_{b != a} K(xi_a - xi_b)
/// with the family kernel K(x) = 1/x (rational) or q (coth(q x) - 1)
/// (q-deformed, coth realization).
struct BetheState {
  std::vector<Complex> roots;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct BetheSolveOptions {
  int max_iterations = 200;
  int max_backtracks = 20;
  double convergence_tol = 1e-12;
  double acceptance_tol = 1e-10;
  int jitters_per_cluster = 2;
  std::uint64_t seed = 42;
  double dedup_tol = 1e-6;
  /// Roots farther than this many (spread + 1) units from the parameter
  /// centroid are treated as runaways toward the flat directions of the
  /// equations and discarded.
  double domain_radius_factor = 6.0;
};

struct BetheSolveResult {
  std::vector<BetheState> solutions;
  int total_starts = 0;
  int converged_starts = 0;
  int rejected_out_of_domain = 0;
  int rejected_degenerate = 0;  // converged root sets whose Bethe vector vanishes
  int rejected_invariants = 0;  // coincident roots or roots at site parameters
};

/// Bethe-equation kernel K(x) of the realization's family.
Complex bethe_kernel(const GeneratorRealization& real, Complex x);
Complex bethe_kernel_derivative(const GeneratorRealization& real, Complex x);

/// max_a | W(xi_a) - sum_{b != a} K(xi_a - xi_b) |; zero vacuously for n = 0.
double bethe_residual(const GeneratorRealization& real, const std::vector<Complex>& roots);

/// Damped-Newton multistart solver over all size-n site multisets, with
/// deterministic seeded jitter.  Returned states are deduplicated as
/// unordered root sets, satisfy the acceptance tolerance, stay inside the
/// search domain and have nonvanishing Bethe vectors.  Non-convergence is
/// reported through the counters, not an exception.  Supports the rational
/// and coth realizations.
BetheSolveResult solve_bethe(const GeneratorRealization& real, int n,
                             const std::vector<std::vector<Complex>>& extra_seeds = {},
                             const BetheSolveOptions& options = {});

/// J^+(xi_1) ... J^+(xi_n) |0>.  Throws std::runtime_error if the product
/// collapses to the zero vector (degenerate root set).
Vector bethe_vector(const GeneratorRealization& real, const std::vector<Complex>& roots);

/// Closed-form eigenvalue of H(lambda) on the Bethe state:
/// E_n(lambda) = E_0(lambda) - 2 sum_a K(lambda - xi_a) (W(lambda) - W(xi_a)).
Complex bethe_eigenvalue(const GeneratorRealization& real, Complex lambda,
                         const std::vector<Complex>& roots);

/// Magnet eigenvalues read off the roots:
/// E_{i,n} = sum_{j != i} s_i s_j K(u_i - u_j) - s_i sum_a K(u_i - xi_a).
std::vector<double> magnet_eigenvalues_from_roots(const GeneratorRealization& real,
                                                  const std::vector<Complex>& roots);

}  // namespace gaudin
