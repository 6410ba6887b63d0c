#include "gaudin/magnet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gaudin/numeric.hpp"
#include "gaudin/spin_rep.hpp"

namespace gaudin {

MagnetSet build_magnets(const SpinSystem& system, const CouplingFamily& family) {
  const std::size_t n = system.size();
  if (n < 2) {
    throw std::invalid_argument("build_magnets: need at least two sites, the interaction sum is "
                                "empty for N = 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pole_distance(family, system.u(i) - system.u(j)) < 1e-9) {
        std::ostringstream msg;
        msg << "build_magnets: coupling pole hit by sites (" << i << ", " << j
            << "), u_i - u_j = " << system.u(i) - system.u(j);
        throw std::invalid_argument(msg.str());
      }
    }
  }

  const int d = system.dimension();
  std::vector<Matrix> t0(n), tp(n), tm(n);
  for (std::size_t i = 0; i < n; ++i) {
    t0[i] = embed(system, i, Component::Zero);
    tp[i] = embed(system, i, Component::Plus);
    tm[i] = embed(system, i, Component::Minus);
  }

  std::vector<Matrix> hs;
  hs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix h = Matrix::Zero(d, d);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double du = system.u(i) - system.u(j);
      h += w(family, 0, du) * (t0[i] * t0[j]) +
           0.5 * w(family, 1, du) * (tp[i] * tm[j] + tm[i] * tp[j]);
    }
    hs.push_back(std::move(h));
  }
  return MagnetSet{system, family, std::move(hs)};
}

double commutator_norm(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("commutator_norm: dimension mismatch");
  }
  return commutator(a, b).norm();
}

double sum_rule_check(const MagnetSet& magnets) {
  const int d = magnets.system.dimension();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& h : magnets.hamiltonians) sum += h;
  if (magnets.family.tag() == FamilyTag::QDeformed) {
    double q = magnets.family.param();
    Matrix rhs = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < magnets.system.size(); ++i) {
      for (std::size_t j = 0; j < magnets.system.size(); ++j) {
        if (i != j) rhs += dot_product(magnets.system, i, j);
      }
    }
    return (sum + q * rhs).norm();
  }
  return sum.norm();
}

Spectrum exact_spectrum(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("exact_spectrum: matrix not square");
  if (!is_hermitian(a, 1e-10)) {
    throw std::invalid_argument("exact_spectrum: input is not Hermitian within 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("exact_spectrum: eigensolver failed to converge");
  }
  Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
  double scale = std::max(1e-30, a.norm());
  double recon = (a * s.vectors - s.vectors * s.values.asDiagonal().toDenseMatrix().cast<Complex>())
                     .norm();
  if (recon > 1e-9 * scale) {
    throw std::runtime_error("exact_spectrum: reconstruction residual exceeds 1e-9 * ||A||");
  }
  return s;
}

namespace {

// Rotate the column block [begin, end) of basis so that op restricted to it
// becomes diagonal, then recurse into remaining near-degenerate subclusters
// with the next operator.
void refine_block(const std::vector<Matrix>& ops, Matrix& basis, int begin, int end,
                  std::size_t op_index, double cluster_tol) {
  if (end - begin <= 1 || op_index >= ops.size()) return;
  auto block = basis.middleCols(begin, end - begin);
  Matrix restricted = block.adjoint() * ops[op_index] * block;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(restricted);
  RealVector vals = solver.eigenvalues();
  basis.middleCols(begin, end - begin) = (block * solver.eigenvectors()).eval();
  int k = 0;
  while (k < vals.size()) {
    int m = k + 1;
    while (m < vals.size() && std::abs(vals(m) - vals(k)) < cluster_tol) ++m;
    refine_block(ops, basis, begin + k, begin + m, op_index + 1, cluster_tol);
    k = m;
  }
}

}  // namespace

JointSpectrum simultaneous_spectrum(const MagnetSet& magnets, std::uint64_t seed) {
  const std::vector<Matrix>& hs = magnets.hamiltonians;
  const std::size_t n = hs.size();
  const int d = magnets.system.dimension();

  double worst_comm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      worst_comm = std::max(worst_comm, commutator_norm(hs[i], hs[j]));
    }
  }
  if (worst_comm > 1e-9) {
    std::ostringstream msg;
    msg << "simultaneous_spectrum: operators do not commute, max ||[h_i,h_j]|| = " << worst_comm;
    throw std::invalid_argument(msg.str());
  }

  double scale = 1e-30;
  for (const Matrix& h : hs) scale = std::max(scale, h.norm());

  std::string failures;
  for (int attempt = 0; attempt < 2; ++attempt) {
    numeric::Rng rng(seed + 1000003ULL * static_cast<std::uint64_t>(attempt));
    Matrix mix = Matrix::Zero(d, d);
    for (const Matrix& h : hs) mix += rng.uniform(0.5, 1.5) * h;
    Eigen::SelfAdjointEigenSolver<Matrix> solver((mix + mix.adjoint()) / 2.0);
    Matrix basis = solver.eigenvectors();
    RealVector mix_vals = solver.eigenvalues();

    double cluster_tol = 1e-8 * std::max(1.0, scale);
    int k = 0;
    while (k < d) {
      int m = k + 1;
      while (m < d && std::abs(mix_vals(m) - mix_vals(k)) < cluster_tol) ++m;
      refine_block(hs, basis, k, m, 0, cluster_tol);
      k = m;
    }

    RealMatrix eigs(d, n);
    double max_residual = 0.0;
    for (int col = 0; col < d; ++col) {
      Vector v = basis.col(col);
      for (std::size_t i = 0; i < n; ++i) {
        double e = std::real(Complex(v.dot(hs[i] * v)));
        eigs(col, static_cast<int>(i)) = e;
        max_residual = std::max(max_residual, (hs[i] * v - e * v).norm());
      }
    }

    if (max_residual < 1e-8) {
      std::vector<int> order(d);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (std::size_t i = 0; i < n; ++i) {
          double ea = eigs(a, static_cast<int>(i)), eb = eigs(b, static_cast<int>(i));
          if (std::abs(ea - eb) > 1e-9) return ea < eb;
        }
        return false;
      });
      JointSpectrum out;
      out.eigenvalues.resize(d, static_cast<int>(n));
      out.vectors.resize(d, d);
      for (int col = 0; col < d; ++col) {
        out.eigenvalues.row(col) = eigs.row(order[col]);
        out.vectors.col(col) = basis.col(order[col]);
      }
      out.max_residual = max_residual;
      out.attempts = attempt + 1;
      return out;
    }
    failures += (failures.empty() ? "" : ", ");
    failures += "attempt " + std::to_string(attempt + 1) + " residual " +
                std::to_string(max_residual);
  }

  throw std::runtime_error(
      "simultaneous_spectrum: degeneracy splitting failed after retry (" + failures +
      "); refusing to guess eigenvectors");
}

}  // namespace gaudin
