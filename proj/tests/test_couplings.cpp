#include "doctest.h"

#include <array>
#include <cmath>

#include "gaudin/couplings.hpp"
#include "gaudin/numeric.hpp"

using namespace gaudin;

namespace {

const std::array<std::array<int, 3>, 6> kPerms{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

TEST_CASE("rational coupling is 1/du") {
  CouplingFamily f = CouplingFamily::rational();
  for (int alpha : {0, 1, 2}) CHECK(w(f, alpha, 2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(w(f, 0, 0.0), std::domain_error);
}

TEST_CASE("q-deformed coupling at q=1, du=1 is coth(1) - 1") {
  // high-precision reference: coth(1) = (e^2+1)/(e^2-1)
  double coth1 = (std::exp(2.0) + 1.0) / (std::exp(2.0) - 1.0);
  CouplingFamily f = CouplingFamily::q_deformed(1.0);
  CHECK(w(f, 0, 1.0) == doctest::Approx(coth1 - 1.0).epsilon(1e-14));
  CHECK(w(f, 0, 1.0) == doctest::Approx(0.3130352855).epsilon(1e-9));
}

TEST_CASE("trigonometric and hyperbolic components") {
  double p = 1.7, du = 0.6;
  CouplingFamily trig = CouplingFamily::trigonometric(p);
  CHECK(w(trig, 0, du) == doctest::Approx(p / std::tan(p * du)));
  CHECK(w(trig, 1, du) == doctest::Approx(p / std::sin(p * du)));
  CHECK(w(trig, 2, du) == doctest::Approx(p / std::sin(p * du)));
  CouplingFamily hyp = CouplingFamily::hyperbolic(p);
  CHECK(w(hyp, 0, du) == doctest::Approx(p / std::tanh(p * du)));
  CHECK(w(hyp, 1, du) == doctest::Approx(p / std::sinh(p * du)));
}

TEST_CASE("parametric families reject zero parameter") {
  CHECK_THROWS_AS(CouplingFamily::q_deformed(0.0), std::invalid_argument);
  CHECK_THROWS_AS(CouplingFamily::trigonometric(0.0), std::invalid_argument);
  CHECK_THROWS_AS(CouplingFamily::hyperbolic(0.0), std::invalid_argument);
}

TEST_CASE("q-deformed pair sum is -2q for any du") {
  CouplingFamily f = CouplingFamily::q_deformed(0.8);
  for (double du : {0.01, 0.5, 1.0, 3.7, 25.0}) {
    for (int alpha : {0, 1, 2}) {
      CHECK(w(f, alpha, du) + w(f, alpha, -du) == doctest::Approx(-1.6).epsilon(1e-12));
    }
  }
}

TEST_CASE("gaudin residual vanishes for the rational family") {
  CouplingFamily f = CouplingFamily::rational();
  for (const auto& perm : kPerms) {
    CHECK(gaudin_residual(f, perm, 0.0, 1.0, 2.5) < 1e-12);
  }
}

TEST_CASE("constant coupling is a negative control: residual 1 at w == 1") {
  CouplingFamily f = CouplingFamily::constant(1.0);
  CHECK(gaudin_residual(f, {0, 1, 2}, 0.0, 1.0, 2.0) == doctest::Approx(1.0));
}

TEST_CASE("gaudin residual below 1e-10 for all families over random triples") {
  numeric::Rng rng(2024);
  for (const CouplingFamily& f :
       {CouplingFamily::rational(), CouplingFamily::trigonometric(1.1),
        CouplingFamily::hyperbolic(0.7), CouplingFamily::q_deformed(0.7)}) {
    double worst = 0.0;
    int kept = 0;
    while (kept < 100) {
      double a = rng.uniform(-5.0, 5.0), b = rng.uniform(-5.0, 5.0), c = rng.uniform(-5.0, 5.0);
      if (pole_distance(f, a - b) < 1e-3 || pole_distance(f, a - c) < 1e-3 ||
          pole_distance(f, b - c) < 1e-3) {
        continue;
      }
      ++kept;
      for (const auto& perm : kPerms) {
        worst = std::max(worst, gaudin_residual(f, perm, a, b, c));
      }
    }
    CAPTURE(f.name());
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("symmetry defect: odd families vanish, q-family gives -2q") {
  CHECK(std::abs(symmetry_defect(CouplingFamily::hyperbolic(2.0), 1, 0.3)) < 1e-13);
  CHECK(symmetry_defect(CouplingFamily::q_deformed(0.5), 0, 1.7) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(symmetry_defect(CouplingFamily::rational(), 0, 1e-6)) < 1e-8);
}

TEST_CASE("q to zero limit approaches the rational coupling linearly") {
  CouplingFamily rational = CouplingFamily::rational();
  for (double q : {1e-4, 1e-5, 1e-6}) {
    CouplingFamily f = CouplingFamily::q_deformed(q);
    for (double du = 0.1; du <= 5.0; du += 0.35) {
      CHECK(std::abs(w(f, 0, du) - w(rational, 0, du)) <= 1.5 * q);
    }
  }
}

TEST_CASE("trigonometric pole raises") {
  CouplingFamily f = CouplingFamily::trigonometric(M_PI);
  // sin(pi * 1) is not exactly zero in floating point, so use du = 0
  CHECK_THROWS_AS(w(f, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(gaudin_residual(f, {0, 1, 2}, 0.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("pole distance accounts for the trigonometric lattice") {
  CouplingFamily trig = CouplingFamily::trigonometric(2.0);
  CHECK(pole_distance(trig, M_PI / 2.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pole_distance(trig, 0.25 * M_PI) == doctest::Approx(0.25 * M_PI));
  CouplingFamily rat = CouplingFamily::rational();
  CHECK(pole_distance(rat, -0.3) == doctest::Approx(0.3));
}
