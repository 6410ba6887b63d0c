#include "gaudin/rmatrix.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gaudin/numeric.hpp"

namespace gaudin {

AuxMatrix permutation_matrix() {
  AuxMatrix p = AuxMatrix::Zero();
  p(0, 0) = 1.0;
  p(1, 2) = 1.0;
  p(2, 1) = 1.0;
  p(3, 3) = 1.0;
  return p;
}

AuxMatrix rational_r(Complex z) {
  if (std::abs(z) < 1e-14) throw std::domain_error("rational_r: zero argument");
  return permutation_matrix() / z;
}

AuxMatrix rq(Complex z, double q) {
  if (std::abs(std::sinh(q * z)) < 1e-14) throw std::domain_error("rq: coth pole");
  Complex scalar = q * numeric::coth(q * z) + q;
  return scalar * permutation_matrix();
}

Aux3Matrix aux_embed(const AuxMatrix& m, AuxPlacement placement) {
  Aux3Matrix out = Aux3Matrix::Zero();
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        for (int j1 = 0; j1 < 2; ++j1)
          for (int j2 = 0; j2 < 2; ++j2)
            for (int j3 = 0; j3 < 2; ++j3) {
              int row = 4 * i1 + 2 * i2 + i3;
              int col = 4 * j1 + 2 * j2 + j3;
              switch (placement) {
                case AuxPlacement::OneTwo:
                  if (i3 == j3) out(row, col) = m(2 * i1 + i2, 2 * j1 + j2);
                  break;
                case AuxPlacement::OneThree:
                  if (i2 == j2) out(row, col) = m(2 * i1 + i3, 2 * j1 + j3);
                  break;
                case AuxPlacement::TwoThree:
                  if (i1 == j1) out(row, col) = m(2 * i2 + i3, 2 * j2 + j3);
                  break;
              }
            }
  return out;
}

namespace {

void require_distinct(Complex a, Complex b, Complex c, const char* who) {
  if (std::abs(a - b) < 1e-12 || std::abs(a - c) < 1e-12 || std::abs(b - c) < 1e-12) {
    throw std::domain_error(std::string(who) + ": coincident spectral arguments");
  }
}

template <typename M>
M comm(const M& a, const M& b) {
  return a * b - b * a;
}

}  // namespace

double cybe_residual(Complex lambda, Complex mu, Complex sigma) {
  require_distinct(lambda, mu, sigma, "cybe_residual");
  Aux3Matrix r12 = aux_embed(rational_r(lambda - mu), AuxPlacement::OneTwo);
  Aux3Matrix r13 = aux_embed(rational_r(lambda - sigma), AuxPlacement::OneThree);
  Aux3Matrix r23 = aux_embed(rational_r(mu - sigma), AuxPlacement::TwoThree);
  return (comm(r13, r23) + comm(r12, r13) + comm(r12, r23)).norm();
}

double qcybe_residual(Complex lambda, Complex mu, Complex sigma, double q) {
  require_distinct(lambda, mu, sigma, "qcybe_residual");
  Aux3Matrix rm12 = aux_embed(rq(lambda - mu, -q), AuxPlacement::OneTwo);
  Aux3Matrix rm13 = aux_embed(rq(lambda - sigma, -q), AuxPlacement::OneThree);
  Aux3Matrix rp13 = aux_embed(rq(lambda - sigma, q), AuxPlacement::OneThree);
  Aux3Matrix rp23 = aux_embed(rq(mu - sigma, q), AuxPlacement::TwoThree);
  return (comm(rm13, rp23) + comm(rm12, rp23) + comm(rm12, rp13)).norm();
}

std::array<std::array<Matrix, 2>, 2> l_matrix(const GeneratorRealization& real, Complex lambda) {
  Matrix j0 = generator(real, Component::Zero, lambda);
  return {{{j0, generator(real, Component::Plus, lambda)},
           {generator(real, Component::Minus, lambda), -j0}}};
}

namespace {

// L (x) I or I (x) L on aux1 (x) aux2 (x) Hilbert, block (a1 a2),(b1 b2).
Matrix aux_op(const std::array<std::array<Matrix, 2>, 2>& l, int slot, int dim) {
  Matrix out = Matrix::Zero(4 * dim, 4 * dim);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) {
          const Matrix* blk = nullptr;
          if (slot == 1 && a2 == b2) blk = &l[a1][b1];
          if (slot == 2 && a1 == b1) blk = &l[a2][b2];
          if (blk) {
            out.block((2 * a1 + a2) * dim, (2 * b1 + b2) * dim, dim, dim) = *blk;
          }
        }
  return out;
}

// r (x) Id_H for a scalar 4x4 auxiliary matrix.
Matrix aux_scalar(const AuxMatrix& r, int dim) {
  Matrix out = Matrix::Zero(4 * dim, 4 * dim);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (r(a, b) != Complex(0.0, 0.0)) {
        out.block(a * dim, b * dim, dim, dim) =
            r(a, b) * Matrix::Identity(dim, dim);
      }
    }
  return out;
}

}  // namespace

double linear_structure_residual(const GeneratorRealization& real, Complex lambda, Complex mu) {
  if (std::abs(lambda - mu) < 1e-12) {
    throw std::domain_error("linear_structure_residual: lambda = mu");
  }
  const int dim = real.system().dimension();
  Matrix l1 = aux_op(l_matrix(real, lambda), 1, dim);
  Matrix l2 = aux_op(l_matrix(real, mu), 2, dim);
  if (real.kind() == RealizationKind::Rational) {
    Matrix r = aux_scalar(rational_r(lambda - mu), dim);
    return (comm(l1, l2) + comm(r, Matrix(l1 + l2))).norm();
  }
  double q = real.q();
  Matrix rp = aux_scalar(rq(lambda - mu, q), dim);
  Matrix rm = aux_scalar(rq(lambda - mu, -q), dim);
  return (comm(l1, l2) + comm(rp, l1) + comm(rm, l2)).norm();
}

namespace {

GeneratorRealization make_probe_realization(const GeneratorRealization& like, SpinSystem system) {
  switch (like.kind()) {
    case RealizationKind::Rational: return GeneratorRealization::rational(std::move(system));
    case RealizationKind::QDeformedCoth:
      return GeneratorRealization::q_coth(std::move(system), like.q());
    case RealizationKind::QDeformedTanh:
      return GeneratorRealization::q_tanh(std::move(system), like.q());
  }
  throw std::logic_error("make_probe_realization: bad kind");
}

}  // namespace

NoGoResult no_go_probe(const GeneratorRealization& real, Complex lambda, Complex mu,
                       std::uint64_t seed) {
  if (std::abs(lambda - mu) < 1e-12) throw std::domain_error("no_go_probe: lambda = mu");

  // The given system plus random auxiliary ones; stacking several
  // representations removes representation-specific accidental solutions.
  std::vector<GeneratorRealization> probes;
  probes.push_back(real);
  numeric::Rng rng(seed);
  for (int extra = 0; extra < 2; ++extra) {
    std::size_t nsites = extra == 0 ? 2 : 3;
    std::vector<Site> sites;
    double offset = rng.uniform(-1.0, 1.0);
    for (std::size_t i = 0; i < nsites; ++i) {
      sites.push_back({0.5, offset + static_cast<double>(i) + rng.uniform(-0.3, 0.3)});
    }
    probes.push_back(make_probe_realization(real, SpinSystem(sites)));
  }

  // Stack the linear systems  [r (x) Id, L1 + L2] = -[L1, L2]  over probes,
  // unknowns = 16 entries of r.
  long rows_total = 0;
  for (const GeneratorRealization& p : probes) {
    int d4 = 4 * p.system().dimension();
    rows_total += static_cast<long>(d4) * d4;
  }
  Eigen::MatrixXcd a(rows_total, 16);
  Eigen::VectorXcd b(rows_total);
  long row0 = 0;
  for (const GeneratorRealization& p : probes) {
    const int dim = p.system().dimension();
    const int d4 = 4 * dim;
    Matrix l1 = aux_op(l_matrix(p, lambda), 1, dim);
    Matrix l2 = aux_op(l_matrix(p, mu), 2, dim);
    Matrix m = l1 + l2;
    Matrix rhs = -comm(l1, l2);
    for (int k = 0; k < 16; ++k) {
      AuxMatrix e = AuxMatrix::Zero();
      e(k / 4, k % 4) = 1.0;
      Matrix col = comm(aux_scalar(e, dim), m);
      a.block(row0, k, static_cast<long>(d4) * d4, 1) =
          Eigen::Map<const Eigen::VectorXcd>(col.data(), static_cast<long>(d4) * d4);
    }
    b.segment(row0, static_cast<long>(d4) * d4) =
        Eigen::Map<const Eigen::VectorXcd>(rhs.data(), static_cast<long>(d4) * d4);
    row0 += static_cast<long>(d4) * d4;
  }

  Eigen::VectorXcd x = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);

  NoGoResult result;
  result.residual = (a * x - b).norm();
  AuxMatrix r;
  for (int k = 0; k < 16; ++k) r(k / 4, k % 4) = x(k);
  // r is determined only up to multiples of the identity ([c I, .] = 0);
  // normalize the representative by zeroing the second diagonal entry,
  // which vanishes for P/(lambda - mu).
  result.best_r = r - r(1, 1) * AuxMatrix::Identity();

  // The two requirements the structure equation places on r_23: extracted
  // from the candidate-free part of the equation by projecting the (2,1)
  // auxiliary block onto J^-(lambda) and the (1,3) block onto J^+(mu).
  {
    const GeneratorRealization& p = probes.back();
    const int dim = p.system().dimension();
    Matrix l1 = aux_op(l_matrix(p, lambda), 1, dim);
    Matrix l2 = aux_op(l_matrix(p, mu), 2, dim);
    Matrix base = comm(l1, l2);
    std::vector<Matrix> basis;
    for (Component c : {Component::Zero, Component::Plus, Component::Minus}) {
      basis.push_back(generator(p, c, lambda));
      basis.push_back(generator(p, c, mu));
    }
    basis.push_back(Matrix::Identity(dim, dim));
    Eigen::MatrixXcd bm(static_cast<long>(dim) * dim, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      bm.col(static_cast<long>(k)) =
          Eigen::Map<const Eigen::VectorXcd>(basis[k].data(), static_cast<long>(dim) * dim);
    }
    auto block_coeffs = [&](int arow, int acol) {
      Matrix blk = base.block(arow * dim, acol * dim, dim, dim);
      Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(blk.data(),
                                                              static_cast<long>(dim) * dim);
      return bm.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(v).eval();
    };
    // basis order: J0(l), J0(m), J+(l), J+(m), J-(l), J-(m), I
    Eigen::VectorXcd c21 = block_coeffs(1, 0);  // aux element (2,1)
    Eigen::VectorXcd c13 = block_coeffs(0, 2);  // aux element (1,3)
    result.constraint_upper = -c21(4);  // coefficient of J-(lambda) is -(requirement)
    result.constraint_lower = c13(3);   // coefficient of J+(mu) is +(requirement)
    result.constraint_gap = std::abs(result.constraint_upper - result.constraint_lower);
  }
  return result;
}

double trace_formula_check(const GeneratorRealization& real, Complex lambda) {
  auto l = l_matrix(real, lambda);
  const int dim = real.system().dimension();
  Matrix half_trace = Matrix::Zero(dim, dim);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) half_trace += l[a][b] * l[b][a];
  half_trace *= 0.5;
  return (half_trace - spectral_operator(real, lambda)).norm();
}

}  // namespace gaudin
