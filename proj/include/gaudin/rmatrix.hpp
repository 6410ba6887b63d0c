#pragma once

#include <array>
#include <cstdint>

#include "gaudin/algebra.hpp"
#include "gaudin/types.hpp"

namespace gaudin {

using AuxMatrix = Eigen::Matrix4cd;                  // C^2 (x) C^2
using Aux3Matrix = Eigen::Matrix<Complex, 8, 8>;     // C^2 (x) C^2 (x) C^2

/// Which pair of the three auxiliary slots a 4x4 matrix occupies.
enum class AuxPlacement { OneTwo, OneThree, TwoThree };

/// Permutation matrix P on C^2 (x) C^2: P(x (x) y)P = y (x) x, P^2 = I.
AuxMatrix permutation_matrix();

/// r(z) = P / z.
AuxMatrix rational_r(Complex z);

/// r_q(z) = (q coth(q z) + q) P.  Note r_{-q}(z) = (q coth(q z) - q) P.
AuxMatrix rq(Complex z, double q);

/// Embed a 4x4 auxiliary matrix into the triple auxiliary space, acting as
/// the identity on the remaining slot.  Basis order |a1 a2 a3>, slot 1
/// slowest.
Aux3Matrix aux_embed(const AuxMatrix& m, AuxPlacement placement);

/// || [r13, r23] + [r12, r13] + [r12, r23] ||_F with r1j built from the
/// rational r-matrix at (lambda-mu, lambda-sigma, mu-sigma).
double cybe_residual(Complex lambda, Complex mu, Complex sigma);

/// || [r_{-q}13, r_q23] + [r_{-q}12, r_q23] + [r_{-q}12, r_q13] ||_F, the
/// modified classical Yang-Baxter equation of the q-family.
double qcybe_residual(Complex lambda, Complex mu, Complex sigma, double q);

/// The 2x2 operator-valued auxiliary matrix
///   L(lambda) = [ J^0(lambda)  J^+(lambda) ]
///               [ J^-(lambda) -J^0(lambda) ].
std::array<std::array<Matrix, 2>, 2> l_matrix(const GeneratorRealization& real, Complex lambda);

/// Residual of the family's linear structure equation on the full
/// (4 D) x (4 D) space (auxiliary slot 1, auxiliary slot 2, Hilbert space):
///   rational:  [L(l) x I, I x L(m)] + [r(l-m), L(l) x I + I x L(m)] = 0
///   q-family:  [L(l) x I, I x L(m)] + [r_q(l-m), L(l) x I]
///                                   + [r_{-q}(l-m), I x L(m)] = 0.
double linear_structure_residual(const GeneratorRealization& real, Complex lambda, Complex mu);

struct NoGoResult {
  double residual = 0.0;   // least-squares misfit of the best candidate r
  AuxMatrix best_r;        // gauge-fixed so that entry (1,1) (second diagonal) is zero
  Complex constraint_upper;  // value r_23 would need from the J^-(lambda) block
  Complex constraint_lower;  // value r_23 would need from the J^+(mu) block
  double constraint_gap = 0.0;  // |difference|; 2|q| for the q-family
};

/// Least-squares search for a single r-matrix satisfying the rational-form
/// structure equation with the given realization's generators, stacked over
/// the realization's system plus seeded random auxiliary systems so the fit
/// probes the algebra rather than one representation.  For q = 0 the misfit
/// vanishes and P/(lambda-mu) is recovered; for q != 0 the two incompatible
/// r_23 requirements keep the misfit bounded away from zero.
NoGoResult no_go_probe(const GeneratorRealization& real, Complex lambda, Complex mu,
                       std::uint64_t seed = 42);

/// || 1/2 sum_{ab} L_ab(lambda) L_ba(lambda) - H(lambda) ||_F.
double trace_formula_check(const GeneratorRealization& real, Complex lambda);

}  // namespace gaudin
