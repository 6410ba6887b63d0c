#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gaudin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Frobenius norm of A - A^dagger, the Hermiticity defect.
inline double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).norm();
}

inline bool is_hermitian(const Matrix& a, double tol = 1e-10) {
  return hermiticity_defect(a) <= tol * std::max(1.0, a.norm());
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace gaudin
