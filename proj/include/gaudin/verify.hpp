#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gaudin/couplings.hpp"
#include "gaudin/report.hpp"
#include "gaudin/spin_system.hpp"

namespace gaudin {

struct VerifyOptions {
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  std::map<std::string, double> tolerance_overrides;  // absolute, win over scaling
  int triples = 100;
  int lambda_pairs = 5;
};

/// Default tolerance for an identity id on a system of dimension dim.
double default_tolerance(const std::string& id, int dim);

/// Run every identity applicable to the family on the given system:
/// coupling-level checks for all families, plus the generator-algebra,
/// spectral, residue, trace, Yang-Baxter and linear-structure checks for the
/// rational and q-deformed families (the trigonometric and hyperbolic
/// families are covered at the Hamiltonian level).
IdentityReport run_identity_suite(const SpinSystem& system, const CouplingFamily& family,
                                  const VerifyOptions& options = {});

}  // namespace gaudin
