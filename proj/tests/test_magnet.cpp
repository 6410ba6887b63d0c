#include "doctest.h"

#include <cmath>

#include "gaudin/magnet.hpp"
#include "gaudin/numeric.hpp"
#include "gaudin/spin_rep.hpp"

using namespace gaudin;

namespace {

SpinSystem two_halves() { return SpinSystem({{0.5, 0.0}, {0.5, 1.0}}); }

SpinSystem random_system(numeric::Rng& rng) {
  int n = rng.uniform_int(2, 4);
  std::vector<Site> sites;
  for (int i = 0; i < n; ++i) {
    double spin = rng.uniform() < 0.5 ? 0.5 : 1.0;
    double u;
    bool ok;
    do {
      u = rng.uniform(-5.0, 5.0);
      ok = true;
      for (const Site& s : sites) {
        if (std::abs(s.u - u) < 0.2) ok = false;
      }
    } while (!ok);
    sites.push_back({spin, u});
  }
  return SpinSystem(sites);
}

}  // namespace

TEST_CASE("rational N=2: h_1 = -(t_1.t_2) with singlet/triplet spectrum") {
  MagnetSet m = build_magnets(two_halves(), CouplingFamily::rational());
  Matrix expected = -dot_product(m.system, 0, 1);
  CHECK((m.hamiltonians[0] - expected).norm() < 1e-14);

  Spectrum s = exact_spectrum(m.hamiltonians[0]);
  CHECK(s.values(0) == doctest::Approx(-0.25));
  CHECK(s.values(1) == doctest::Approx(-0.25));
  CHECK(s.values(2) == doctest::Approx(-0.25));
  CHECK(s.values(3) == doctest::Approx(0.75));
}

TEST_CASE("q-deformed N=2 at q=1: lowest-weight expectation") {
  SpinSystem sys = two_halves();
  MagnetSet m = build_magnets(sys, CouplingFamily::q_deformed(1.0));
  // h_1 = (coth(-1) - 1) t_1.t_2 = -(coth(1) + 1) t_1.t_2
  double coth1 = (std::exp(2.0) + 1.0) / (std::exp(2.0) - 1.0);
  Matrix expected = -(coth1 + 1.0) * dot_product(sys, 0, 1);
  CHECK((m.hamiltonians[0] - expected).norm() < 1e-13);

  Vector ground = lowest_weight_vector(sys);
  Complex val = ground.dot(m.hamiltonians[0] * ground);
  CHECK(val.real() == doctest::Approx(-(coth1 + 1.0) / 4.0).epsilon(1e-12));
  CHECK(val.real() == doctest::Approx(-0.5782588).epsilon(1e-6));
}

TEST_CASE("antisymmetric families sum to the zero matrix") {
  SpinSystem sys({{0.5, 0.0}, {1.0, 1.0}, {0.5, 2.5}});
  for (const CouplingFamily& f : {CouplingFamily::rational(), CouplingFamily::trigonometric(0.9),
                                  CouplingFamily::hyperbolic(1.3)}) {
    MagnetSet m = build_magnets(sys, f);
    Matrix sum = Matrix::Zero(sys.dimension(), sys.dimension());
    for (const Matrix& h : m.hamiltonians) sum += h;
    CAPTURE(f.name());
    CHECK(sum.norm() < 1e-11 * sys.dimension());
    CHECK(sum_rule_check(m) < 1e-11 * sys.dimension());
  }
}

TEST_CASE("q-deformed sum rule and its negative control") {
  SpinSystem sys({{0.5, 0.0}, {0.5, 1.0}, {0.5, 2.5}});
  double q = 0.4;
  MagnetSet m = build_magnets(sys, CouplingFamily::q_deformed(q));
  CHECK(sum_rule_check(m) < 1e-11 * sys.dimension());

  // the sum itself is NOT zero: || q sum_{i!=j} t_i.t_j || > 0, so no
  // similarity transform can map an antisymmetric-family set onto this one
  Matrix sum = Matrix::Zero(sys.dimension(), sys.dimension());
  for (const Matrix& h : m.hamiltonians) sum += h;
  CHECK(sum.norm() > 0.1);
}

TEST_CASE("commutator norm: zero for the family, positive for a control") {
  SpinSystem sys({{0.5, 0.0}, {0.5, 1.0}, {0.5, 2.2}});
  MagnetSet m = build_magnets(sys, CouplingFamily::hyperbolic(0.8));
  CHECK(commutator_norm(m.hamiltonians[0], m.hamiltonians[1]) < 1e-11 * sys.dimension());
  CHECK(commutator_norm(m.hamiltonians[0], m.hamiltonians[0]) == 0.0);
  Matrix control = embed(sys, 0, Component::Plus);
  CHECK(commutator_norm(m.hamiltonians[0], control) > 0.1);
  CHECK_THROWS_AS(commutator_norm(m.hamiltonians[0], Matrix::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("all families commute on random systems and conserve T") {
  numeric::Rng rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    SpinSystem sys = random_system(rng);
    const double d = sys.dimension();
    for (const CouplingFamily& f :
         {CouplingFamily::rational(), CouplingFamily::trigonometric(1.1),
          CouplingFamily::hyperbolic(0.7), CouplingFamily::q_deformed(0.9)}) {
      if (f.tag() == FamilyTag::Trigonometric) {
        bool near_pole = false;
        for (std::size_t i = 0; i < sys.size(); ++i)
          for (std::size_t j = i + 1; j < sys.size(); ++j)
            if (pole_distance(f, sys.u(i) - sys.u(j)) < 1e-2) near_pole = true;
        if (near_pole) continue;
      }
      MagnetSet m = build_magnets(sys, f);
      Matrix t = total_magnetization(sys);
      for (std::size_t i = 0; i < m.hamiltonians.size(); ++i) {
        CHECK(hermiticity_defect(m.hamiltonians[i]) < 1e-12 * d);
        CHECK(commutator_norm(m.hamiltonians[i], t) < 1e-10 * d);
        for (std::size_t j = i + 1; j < m.hamiltonians.size(); ++j) {
          CHECK(commutator_norm(m.hamiltonians[i], m.hamiltonians[j]) < 1e-10 * d);
        }
      }
    }
  }
}

TEST_CASE("q to zero convergence of the magnets is linear in q") {
  SpinSystem sys({{0.5, 0.0}, {1.0, 1.0}, {0.5, 2.5}});
  MagnetSet rational = build_magnets(sys, CouplingFamily::rational());
  double previous_ratio = -1.0;
  for (double q : {1e-2, 1e-3, 1e-4}) {
    MagnetSet deformed = build_magnets(sys, CouplingFamily::q_deformed(q));
    double diff = 0.0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      diff = std::max(diff, (deformed.hamiltonians[i] - rational.hamiltonians[i]).norm());
    }
    double ratio = diff / q;
    CHECK(ratio > 0.01);
    CHECK(ratio < 100.0);
    if (previous_ratio > 0.0) {
      CHECK(ratio == doctest::Approx(previous_ratio).epsilon(0.05));
    }
    previous_ratio = ratio;
  }
}

TEST_CASE("build_magnets rejects N=1 and pole collisions") {
  CHECK_THROWS_AS(build_magnets(SpinSystem({{0.5, 0.0}}), CouplingFamily::rational()),
                  std::invalid_argument);
  // p (u_0 - u_1) = pi: exact trig pole up to rounding
  SpinSystem sys({{0.5, 0.0}, {0.5, M_PI}});
  CHECK_THROWS_AS(build_magnets(sys, CouplingFamily::trigonometric(1.0)), std::invalid_argument);
}

TEST_CASE("exact_spectrum oracle basics") {
  Matrix zero = Matrix::Zero(3, 3);
  Spectrum s = exact_spectrum(zero);
  CHECK(s.values.norm() == 0.0);
  CHECK((s.vectors * s.vectors.adjoint() - Matrix::Identity(3, 3)).norm() < 1e-14);

  Matrix diag = Matrix::Zero(3, 3);
  diag(0, 0) = 3.0;
  diag(1, 1) = 1.0;
  diag(2, 2) = 2.0;
  Spectrum d = exact_spectrum(diag);
  CHECK(d.values(0) == doctest::Approx(1.0));
  CHECK(d.values(1) == doctest::Approx(2.0));
  CHECK(d.values(2) == doctest::Approx(3.0));

  Matrix nonherm = Matrix::Zero(2, 2);
  nonherm(0, 1) = 1.0;
  CHECK_THROWS_AS(exact_spectrum(nonherm), std::invalid_argument);
}

TEST_CASE("simultaneous spectrum reproduces the N=2 rational table") {
  MagnetSet m = build_magnets(two_halves(), CouplingFamily::rational());
  JointSpectrum joint = simultaneous_spectrum(m);
  REQUIRE(joint.eigenvalues.rows() == 4);
  REQUIRE(joint.eigenvalues.cols() == 2);
  // h_1 column: three times -1/4 and once 3/4 (rows sorted ascending)
  CHECK(joint.eigenvalues(0, 0) == doctest::Approx(-0.25));
  CHECK(joint.eigenvalues(1, 0) == doctest::Approx(-0.25));
  CHECK(joint.eigenvalues(2, 0) == doctest::Approx(-0.25));
  CHECK(joint.eigenvalues(3, 0) == doctest::Approx(0.75));
  // h_2 = -h_1 for N=2
  for (int r = 0; r < 4; ++r) {
    CHECK(joint.eigenvalues(r, 1) == doctest::Approx(-joint.eigenvalues(r, 0)));
  }
  CHECK(joint.max_residual < 1e-8);
}

TEST_CASE("simultaneous spectrum rows satisfy the q-family sum rule") {
  SpinSystem sys({{0.5, 0.0}, {0.5, 1.0}, {0.5, 2.5}});
  double q = 0.6;
  MagnetSet m = build_magnets(sys, CouplingFamily::q_deformed(q));
  JointSpectrum joint = simultaneous_spectrum(m);

  Matrix rhs = Matrix::Zero(sys.dimension(), sys.dimension());
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j)
      if (i != j) rhs += dot_product(sys, i, j);
  Spectrum rhs_spec = exact_spectrum(Matrix(-q * rhs));

  for (int r = 0; r < joint.eigenvalues.rows(); ++r) {
    double row_sum = joint.eigenvalues.row(r).sum();
    double best = 1e300;
    for (int k = 0; k < rhs_spec.values.size(); ++k) {
      best = std::min(best, std::abs(row_sum - rhs_spec.values(k)));
    }
    CHECK(best < 1e-8);
  }
}

TEST_CASE("simultaneous spectrum rejects non-commuting input") {
  SpinSystem sys = two_halves();
  MagnetSet fake = build_magnets(sys, CouplingFamily::rational());
  fake.hamiltonians[1] = embed(sys, 0, Component::Zero) * embed(sys, 0, Component::Plus) +
                         embed(sys, 0, Component::Minus) * embed(sys, 0, Component::Zero);
  fake.hamiltonians[1] = (fake.hamiltonians[1] + Matrix(fake.hamiltonians[1].adjoint())) / 2.0;
  CHECK_THROWS_AS(simultaneous_spectrum(fake), std::invalid_argument);
}
