#pragma once

#include <cstdint>
#include <vector>

#include "gaudin/couplings.hpp"
#include "gaudin/spin_system.hpp"
#include "gaudin/types.hpp"

namespace gaudin {

/// The commuting Hamiltonian family h_1 ... h_N of one coupling family on one
/// spin system.  Each h_i is Hermitian, [h_i, h_j] = 0 and [h_i, T] = 0.
struct MagnetSet {
  SpinSystem system;
  CouplingFamily family;
  std::vector<Matrix> hamiltonians;
};

/// h_i = sum_{j != i} [ w^0(u_i-u_j) t_i^0 t_j^0
///                      + w^1(u_i-u_j) (t_i^+ t_j^- + t_i^- t_j^+)/2 ].
/// Requires N >= 2 (the sum over j != i is empty otherwise) and no family
/// pole hit by any parameter difference.
MagnetSet build_magnets(const SpinSystem& system, const CouplingFamily& family);

/// Frobenius norm of AB - BA.
double commutator_norm(const Matrix& a, const Matrix& b);

/// || sum_i h_i - RHS ||_F where RHS = 0 for the antisymmetric families and
/// -q sum_{i != j} t_i . t_j for the q-deformed family.
double sum_rule_check(const MagnetSet& magnets);

struct Spectrum {
  RealVector values;  // ascending
  Matrix vectors;     // unitary, columns are eigenvectors
};

/// Dense Hermitian eigensolve; the oracle behind every spectral claim.
/// Requires the Hermiticity defect below 1e-10 (relative) and verifies the
/// reconstruction residual before returning.
Spectrum exact_spectrum(const Matrix& a);

struct JointSpectrum {
  RealMatrix eigenvalues;  // D x N; row k holds the h_i eigenvalues of vector k
  Matrix vectors;          // D x D orthonormal, column k belongs to row k
  double max_residual = 0.0;
  int attempts = 0;
};

/// One orthonormal basis diagonalizing all h_i simultaneously, found by
/// diagonalizing a seeded random real combination and refining inside
/// near-degenerate clusters.  Rows are sorted lexicographically by
/// eigenvalue tuple.  Retries once with a fresh combination; failure to
/// reach per-operator residual 1e-8 raises with diagnostics.
JointSpectrum simultaneous_spectrum(const MagnetSet& magnets, std::uint64_t seed = 42);

}  // namespace gaudin
