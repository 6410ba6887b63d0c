#include "doctest.h"

#include <cmath>

#include "gaudin/algebra.hpp"
#include "gaudin/magnet.hpp"
#include "gaudin/numeric.hpp"

using namespace gaudin;

namespace {

SpinSystem three_sites() { return SpinSystem({{0.5, 0.0}, {0.5, 1.0}, {1.0, 2.5}}); }

// H(lambda) written directly in the realization: sum_ij f_i f_j t_i.t_j.
// Independent of the operator-product route used by spectral_operator.
Matrix spectral_operator_sum_form(const GeneratorRealization& real, Complex lambda) {
  const SpinSystem& sys = real.system();
  Matrix h = Matrix::Zero(sys.dimension(), sys.dimension());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = 0; j < sys.size(); ++j) {
      h += site_weight(real, i, lambda) * site_weight(real, j, lambda) *
           dot_product(sys, i, j);
    }
  }
  return h;
}

}  // namespace

TEST_CASE("rational generator at a single site: J^0(i) = i t^0") {
  SpinSystem sys({{0.5, 0.0}});
  GeneratorRealization real = GeneratorRealization::rational(sys);
  Matrix j0 = generator(real, Component::Zero, Complex(0.0, 1.0));
  Matrix expected = Complex(0.0, 1.0) * embed(sys, 0, Component::Zero);
  CHECK((j0 - expected).norm() < 1e-15);
}

TEST_CASE("coth realization approaches the rational one linearly in q") {
  SpinSystem sys = three_sites();
  GeneratorRealization rational = GeneratorRealization::rational(sys);
  Complex lambda(0.4, 0.6);
  double previous_ratio = -1.0;
  for (double q : {1e-2, 1e-3, 1e-4}) {
    GeneratorRealization coth = GeneratorRealization::q_coth(sys, q);
    double diff = 0.0;
    for (Component c : {Component::Zero, Component::Plus, Component::Minus}) {
      diff = std::max(diff, (generator(coth, c, lambda) - generator(rational, c, lambda)).norm());
    }
    double ratio = diff / q;
    CHECK(ratio > 0.01);
    CHECK(ratio < 100.0);
    if (previous_ratio > 0.0) CHECK(ratio == doctest::Approx(previous_ratio).epsilon(0.05));
    previous_ratio = ratio;
  }
}

TEST_CASE("tanh realization vanishes linearly as q goes to zero") {
  SpinSystem sys = three_sites();
  Complex lambda(0.4, 0.6);
  for (double q : {1e-3, 1e-4}) {
    GeneratorRealization tanh_real = GeneratorRealization::q_tanh(sys, q);
    double norm = generator(tanh_real, Component::Plus, lambda).norm();
    CHECK(norm < 10.0 * q);
    CHECK(norm > 0.0);
  }
}

TEST_CASE("all six structure relations hold in all three realizations") {
  SpinSystem sys = three_sites();
  const double d = sys.dimension();
  numeric::Rng rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    Complex lambda(rng.uniform(-1.0, 3.0), rng.uniform(0.3, 0.8));
    Complex mu(rng.uniform(-1.0, 3.0), -rng.uniform(0.3, 0.8));
    for (const GeneratorRealization& real :
         {GeneratorRealization::rational(sys), GeneratorRealization::q_coth(sys, 0.8),
          GeneratorRealization::q_tanh(sys, 0.8)}) {
      IdentityReport report = algebra_residuals(real, lambda, mu);
      CAPTURE(real.name());
      CHECK(report.entries().size() == 6);
      CHECK(report.max_residual() < 1e-10 * d);
      CHECK(report.all_pass());
    }
  }
}

TEST_CASE("equal-argument commutators use the analytic limit forms") {
  SpinSystem sys = three_sites();
  Complex lambda(0.7, 0.45);
  for (const GeneratorRealization& real :
       {GeneratorRealization::rational(sys), GeneratorRealization::q_coth(sys, 0.6)}) {
    IdentityReport report = algebra_residuals(real, lambda, lambda);
    CAPTURE(real.name());
    CHECK(report.max_residual() < 1e-10 * sys.dimension());
  }
}

TEST_CASE("weight function: hand value at the midpoint and defining property") {
  SpinSystem sys({{0.5, 0.0}, {0.5, 1.0}});
  GeneratorRealization real = GeneratorRealization::rational(sys);
  CHECK(std::abs(weight_function(real, Complex(0.5, 0.0))) < 1e-15);

  Vector ground = lowest_weight_vector(sys);
  for (Complex lambda : {Complex(0.3, 0.4), Complex(-1.2, -0.7), Complex(2.4, 0.1)}) {
    Matrix j0 = generator(real, Component::Zero, lambda);
    CHECK((j0 * ground - weight_function(real, lambda) * ground).norm() < 1e-12);
  }
}

TEST_CASE("coth weight function at a single site matches the scalar value") {
  SpinSystem sys({{0.5, 0.0}});
  GeneratorRealization real = GeneratorRealization::q_coth(sys, 1.0);
  double coth1 = (std::exp(2.0) + 1.0) / (std::exp(2.0) - 1.0);
  Complex wq = weight_function(real, Complex(-1.0, 0.0));
  CHECK(wq.real() == doctest::Approx(-0.5 * (coth1 + 1.0)).epsilon(1e-14));
  CHECK(wq.real() == doctest::Approx(-1.1565176).epsilon(1e-6));
  CHECK(std::abs(wq.imag()) < 1e-15);

  Vector ground = lowest_weight_vector(sys);
  Matrix j0 = generator(real, Component::Zero, Complex(-1.0, 0.0));
  CHECK((j0 * ground - wq * ground).norm() < 1e-14);
}

TEST_CASE("analytic weight-function derivative matches central differences") {
  SpinSystem sys = three_sites();
  numeric::Rng rng(11);
  for (const GeneratorRealization& real :
       {GeneratorRealization::rational(sys), GeneratorRealization::q_coth(sys, 0.9),
        GeneratorRealization::q_tanh(sys, 0.9)}) {
    for (int trial = 0; trial < 4; ++trial) {
      Complex lambda(rng.uniform(-1.0, 3.5), rng.uniform(0.3, 0.9));
      const double h = 1e-5;
      Complex numeric_d = (weight_function(real, lambda + h) - weight_function(real, lambda - h)) /
                          (2.0 * h);
      CAPTURE(real.name());
      CHECK(std::abs(numeric_d - weight_function_derivative(real, lambda)) < 1e-6);
    }
  }
}

TEST_CASE("adjoint relation between raising and lowering generators") {
  SpinSystem sys = three_sites();
  Complex lambda(0.9, 0.7);
  for (const GeneratorRealization& real :
       {GeneratorRealization::rational(sys), GeneratorRealization::q_coth(sys, 1.1),
        GeneratorRealization::q_tanh(sys, 1.1)}) {
    Matrix jp = generator(real, Component::Plus, lambda);
    Matrix jm_conj = generator(real, Component::Minus, std::conj(lambda));
    CAPTURE(real.name());
    CHECK((jp.adjoint() - jm_conj).norm() < 1e-12);
  }
}

TEST_CASE("spectral operator: product form equals realization sum form") {
  SpinSystem sys = three_sites();
  Complex lambda(1.3, 0.55);
  for (const GeneratorRealization& real :
       {GeneratorRealization::rational(sys), GeneratorRealization::q_coth(sys, 0.7)}) {
    Matrix lhs = spectral_operator(real, lambda);
    Matrix rhs = spectral_operator_sum_form(real, lambda);
    CAPTURE(real.name());
    CHECK((lhs - rhs).norm() < 1e-10 * sys.dimension());
  }
}

TEST_CASE("spectral operators commute at distinct arguments") {
  SpinSystem sys = three_sites();
  numeric::Rng rng(23);
  for (const GeneratorRealization& real :
       {GeneratorRealization::rational(sys), GeneratorRealization::q_coth(sys, 0.8),
        GeneratorRealization::q_tanh(sys, 0.8)}) {
    for (int trial = 0; trial < 5; ++trial) {
      Complex lambda(rng.uniform(-1.0, 3.5), rng.uniform(0.3, 0.8));
      Complex mu(rng.uniform(-1.0, 3.5), -rng.uniform(0.3, 0.8));
      CAPTURE(real.name());
      CHECK(commutator_norm(spectral_operator(real, lambda), spectral_operator(real, mu)) <
            1e-10 * sys.dimension());
    }
  }
}

TEST_CASE("lowest-weight eigenvalue identities") {
  SpinSystem sys = three_sites();
  Vector ground = lowest_weight_vector(sys);
  numeric::Rng rng(31);
  for (const GeneratorRealization& real :
       {GeneratorRealization::rational(sys), GeneratorRealization::q_coth(sys, 0.9),
        GeneratorRealization::q_tanh(sys, 0.9)}) {
    for (int trial = 0; trial < 3; ++trial) {
      Complex lambda(rng.uniform(-1.0, 3.5), rng.uniform(0.3, 0.8));
      Matrix h = spectral_operator(real, lambda);
      Complex e0 = lowest_weight_eigenvalue(real, lambda);
      CAPTURE(real.name());
      CHECK((h * ground - e0 * ground).norm() < 1e-10);
    }
  }
}

TEST_CASE("residues recover the magnet Hamiltonians") {
  SpinSystem sys({{0.5, -0.8}, {0.5, 0.7}, {0.5, 2.1}});
  MagnetSet rational = build_magnets(sys, CouplingFamily::rational());
  GeneratorRealization real = GeneratorRealization::rational(sys);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    CHECK((residue_at(real, i) - rational.hamiltonians[i]).norm() < 1e-11);
  }

  double q = 0.6;
  MagnetSet deformed = build_magnets(sys, CouplingFamily::q_deformed(q));
  GeneratorRealization coth = GeneratorRealization::q_coth(sys, q);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    Matrix expected = deformed.hamiltonians[i] -
                      q * sys.spin(i) * (sys.spin(i) + 1.0) *
                          Matrix::Identity(sys.dimension(), sys.dimension());
    CHECK((residue_at(coth, i) - expected).norm() < 1e-11);
  }

  GeneratorRealization tanh_real = GeneratorRealization::q_tanh(sys, q);
  CHECK_THROWS_AS(residue_at(tanh_real, 0), std::invalid_argument);
}

TEST_CASE("pole hits raise domain errors") {
  SpinSystem sys = three_sites();
  GeneratorRealization real = GeneratorRealization::rational(sys);
  CHECK_THROWS_AS(generator(real, Component::Zero, Complex(0.0, 0.0)), std::domain_error);
  GeneratorRealization coth = GeneratorRealization::q_coth(sys, 1.0);
  CHECK_THROWS_AS(weight_function(coth, Complex(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(GeneratorRealization::q_coth(sys, 0.0), std::invalid_argument);
}
