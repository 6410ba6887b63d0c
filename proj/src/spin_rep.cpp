#include "gaudin/spin_rep.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace gaudin {

SpinMatrices single_spin_generators(double s) {
  double two_s = 2.0 * s;
  if (!std::isfinite(s) || std::abs(two_s - std::round(two_s)) > 1e-9 || s <= 0.0) {
    throw std::domain_error("single_spin_generators: s must be a positive half-integer");
  }
  int d = static_cast<int>(std::round(two_s)) + 1;

  SpinMatrices g;
  g.t0 = Matrix::Zero(d, d);
  g.tplus = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    double m = s - k;
    g.t0(k, k) = m;
    if (k > 0) {
      // raising element <m+1| t^+ |m>, column k holds m = s - k
      g.tplus(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
  }
  g.tminus = g.tplus.transpose();
  return g;
}

namespace {

const Matrix& component_of(const SpinMatrices& g, Component which) {
  switch (which) {
    case Component::Zero: return g.t0;
    case Component::Plus: return g.tplus;
    case Component::Minus: return g.tminus;
  }
  throw std::logic_error("component_of: bad component");
}

}  // namespace

Matrix embed(const SpinSystem& system, std::size_t site, Component which) {
  if (site >= system.size()) throw std::out_of_range("embed: site index out of range");
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t j = 0; j < system.size(); ++j) {
    if (j == site) {
      SpinMatrices g = single_spin_generators(system.spin(j));
      out = Eigen::kroneckerProduct(out, component_of(g, which)).eval();
    } else {
      out = Eigen::kroneckerProduct(out, Matrix::Identity(system.site_dim(j), system.site_dim(j)))
                .eval();
    }
  }
  return out;
}

Matrix dot_product(const SpinSystem& system, std::size_t i, std::size_t j) {
  if (i >= system.size() || j >= system.size()) {
    throw std::out_of_range("dot_product: site index out of range");
  }
  Matrix t0i = embed(system, i, Component::Zero);
  Matrix tpi = embed(system, i, Component::Plus);
  Matrix tmi = embed(system, i, Component::Minus);
  Matrix t0j = embed(system, j, Component::Zero);
  Matrix tpj = embed(system, j, Component::Plus);
  Matrix tmj = embed(system, j, Component::Minus);
  return t0i * t0j + 0.5 * (tpi * tmj + tmi * tpj);
}

Matrix total_magnetization(const SpinSystem& system) {
  Matrix t = Matrix::Zero(system.dimension(), system.dimension());
  for (std::size_t j = 0; j < system.size(); ++j) t += embed(system, j, Component::Zero);
  return t;
}

Vector lowest_weight_vector(const SpinSystem& system) {
  Vector v = Vector::Zero(system.dimension());
  v(system.dimension() - 1) = 1.0;
  return v;
}

}  // namespace gaudin
