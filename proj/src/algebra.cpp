#include "gaudin/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "gaudin/numeric.hpp"

namespace gaudin {

namespace {

void check_realization_pole(const GeneratorRealization& real, Complex lambda) {
  for (std::size_t i = 0; i < real.system().size(); ++i) {
    Complex z = real.system().u(i) - lambda;
    switch (real.kind()) {
      case RealizationKind::Rational:
        if (std::abs(z) < 1e-12) throw std::domain_error("realization pole: lambda = u_i");
        break;
      case RealizationKind::QDeformedCoth:
        if (std::abs(std::sinh(real.q() * z)) < 1e-12) {
          throw std::domain_error("realization pole: sinh(q (u_i - lambda)) = 0");
        }
        break;
      case RealizationKind::QDeformedTanh:
        if (std::abs(std::cosh(real.q() * z)) < 1e-12) {
          throw std::domain_error("realization pole: cosh(q (u_i - lambda)) = 0");
        }
        break;
    }
  }
}

}  // namespace

GeneratorRealization GeneratorRealization::rational(SpinSystem system) {
  return {std::move(system), RealizationKind::Rational, 0.0};
}

GeneratorRealization GeneratorRealization::q_coth(SpinSystem system, double q) {
  if (!std::isfinite(q) || q == 0.0) {
    throw std::invalid_argument("GeneratorRealization::q_coth: q must be real and nonzero; use "
                                "the rational realization for q = 0");
  }
  return {std::move(system), RealizationKind::QDeformedCoth, q};
}

GeneratorRealization GeneratorRealization::q_tanh(SpinSystem system, double q) {
  if (!std::isfinite(q) || q == 0.0) {
    throw std::invalid_argument("GeneratorRealization::q_tanh: q must be real and nonzero");
  }
  return {std::move(system), RealizationKind::QDeformedTanh, q};
}

std::string GeneratorRealization::name() const {
  switch (kind_) {
    case RealizationKind::Rational: return "rational";
    case RealizationKind::QDeformedCoth: return "q-coth";
    case RealizationKind::QDeformedTanh: return "q-tanh";
  }
  return "unknown";
}

Complex site_weight(const GeneratorRealization& real, std::size_t i, Complex lambda) {
  Complex z = real.system().u(i) - lambda;
  double q = real.q();
  switch (real.kind()) {
    case RealizationKind::Rational:
      if (std::abs(z) < 1e-12) throw std::domain_error("site_weight: pole at lambda = u_i");
      return 1.0 / z;
    case RealizationKind::QDeformedCoth:
      if (std::abs(std::sinh(q * z)) < 1e-12) {
        throw std::domain_error("site_weight: pole of coth at q (u_i - lambda) in i*pi*Z");
      }
      return q * numeric::cothp1(q * z);
    case RealizationKind::QDeformedTanh:
      if (std::abs(std::cosh(q * z)) < 1e-12) {
        throw std::domain_error("site_weight: pole of tanh at q (u_i - lambda) in i*pi*(Z+1/2)");
      }
      return q * numeric::tanhp1(q * z);
  }
  throw std::logic_error("site_weight: bad realization kind");
}

Complex site_weight_derivative(const GeneratorRealization& real, std::size_t i, Complex lambda) {
  Complex z = real.system().u(i) - lambda;
  double q = real.q();
  switch (real.kind()) {
    case RealizationKind::Rational: {
      if (std::abs(z) < 1e-12) throw std::domain_error("site_weight_derivative: pole");
      return 1.0 / (z * z);
    }
    case RealizationKind::QDeformedCoth: {
      Complex s = std::sinh(q * z);
      if (std::abs(s) < 1e-12) throw std::domain_error("site_weight_derivative: pole");
      return q * q / (s * s);
    }
    case RealizationKind::QDeformedTanh: {
      Complex c = std::cosh(q * z);
      if (std::abs(c) < 1e-12) throw std::domain_error("site_weight_derivative: pole");
      return -q * q / (c * c);
    }
  }
  throw std::logic_error("site_weight_derivative: bad realization kind");
}

Matrix generator(const GeneratorRealization& real, Component which, Complex lambda) {
  const SpinSystem& sys = real.system();
  Matrix out = Matrix::Zero(sys.dimension(), sys.dimension());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out += site_weight(real, i, lambda) * embed(sys, i, which);
  }
  return out;
}

Matrix generator_derivative(const GeneratorRealization& real, Component which, Complex lambda) {
  const SpinSystem& sys = real.system();
  Matrix out = Matrix::Zero(sys.dimension(), sys.dimension());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out += site_weight_derivative(real, i, lambda) * embed(sys, i, which);
  }
  return out;
}

Complex weight_function(const GeneratorRealization& real, Complex lambda) {
  Complex w = 0.0;
  for (std::size_t i = 0; i < real.system().size(); ++i) {
    w -= real.system().spin(i) * site_weight(real, i, lambda);
  }
  return w;
}

Complex weight_function_derivative(const GeneratorRealization& real, Complex lambda) {
  Complex w = 0.0;
  for (std::size_t i = 0; i < real.system().size(); ++i) {
    w -= real.system().spin(i) * site_weight_derivative(real, i, lambda);
  }
  return w;
}

IdentityReport algebra_residuals(const GeneratorRealization& real, Complex lambda, Complex mu) {
  check_realization_pole(real, lambda);
  check_realization_pole(real, mu);

  Matrix j0l = generator(real, Component::Zero, lambda);
  Matrix jpl = generator(real, Component::Plus, lambda);
  Matrix jml = generator(real, Component::Minus, lambda);
  Matrix j0m = generator(real, Component::Zero, mu);
  Matrix jpm = generator(real, Component::Plus, mu);
  Matrix jmm = generator(real, Component::Minus, mu);

  const bool equal_args = lambda == mu;
  const double q = real.q();
  const bool rational = real.kind() == RealizationKind::Rational;

  Matrix pm_expected, zp_expected, zm_expected;
  std::string kernel_note;
  if (equal_args) {
    // mu -> lambda limit: the difference kernels become derivatives.
    Matrix j0d = generator_derivative(real, Component::Zero, lambda);
    Matrix jpd = generator_derivative(real, Component::Plus, lambda);
    Matrix jmd = generator_derivative(real, Component::Minus, lambda);
    if (rational) {
      pm_expected = 2.0 * j0d;
      zp_expected = jpd;
      zm_expected = -jmd;
    } else {
      pm_expected = 2.0 * j0d + 4.0 * q * j0l;
      zp_expected = jpd + 2.0 * q * jpl;
      zm_expected = -(jmd + 2.0 * q * jml);
    }
    kernel_note = " (limit form at lambda = mu)";
  } else if (rational) {
    Complex inv = 1.0 / (lambda - mu);
    pm_expected = 2.0 * inv * (j0l - j0m);
    zp_expected = inv * (jpl - jpm);
    zm_expected = -inv * (jml - jmm);
  } else {
    Complex k = q * numeric::coth(q * (lambda - mu));
    pm_expected = 2.0 * k * (j0l - j0m) + 2.0 * q * (j0l + j0m);
    zp_expected = k * (jpl - jpm) + q * (jpl + jpm);
    zm_expected = -(k * (jml - jmm) + q * (jml + jmm));
  }

  IdentityReport report;
  const double tol = 1e-10 * real.system().dimension();
  const std::string fam = real.name();
  report.add("commutator-plus-minus",
             "[J+(lambda), J-(mu)] equals its " + fam + " structure function" + kernel_note,
             (commutator(jpl, jmm) - pm_expected).norm(), tol);
  report.add("commutator-zero-plus",
             "[J0(lambda), J+(mu)] equals its " + fam + " structure function" + kernel_note,
             (commutator(j0l, jpm) - zp_expected).norm(), tol);
  report.add("commutator-zero-minus",
             "[J0(lambda), J-(mu)] equals its " + fam + " structure function" + kernel_note,
             (commutator(j0l, jmm) - zm_expected).norm(), tol);
  report.add("commutator-zero-zero", "[J0(lambda), J0(mu)] = 0",
             commutator(j0l, j0m).norm(), tol);
  report.add("commutator-plus-plus", "[J+(lambda), J+(mu)] = 0",
             commutator(jpl, jpm).norm(), tol);
  report.add("commutator-minus-minus", "[J-(lambda), J-(mu)] = 0",
             commutator(jml, jmm).norm(), tol);
  return report;
}

Matrix spectral_operator(const GeneratorRealization& real, Complex lambda) {
  Matrix j0 = generator(real, Component::Zero, lambda);
  Matrix jp = generator(real, Component::Plus, lambda);
  Matrix jm = generator(real, Component::Minus, lambda);
  return j0 * j0 + 0.5 * (jp * jm + jm * jp);
}

Complex lowest_weight_eigenvalue(const GeneratorRealization& real, Complex lambda) {
  Complex w = weight_function(real, lambda);
  Complex wp = weight_function_derivative(real, lambda);
  return w * w - wp - 2.0 * real.q() * w;
}

Matrix residue_at(const GeneratorRealization& real, std::size_t i) {
  const SpinSystem& sys = real.system();
  if (i >= sys.size()) throw std::out_of_range("residue_at: site index out of range");

  // Pole data of f_i at lambda = u_i in the variable z = u_i - lambda:
  // f_i = 1/z + regular.  The tanh realization is pole-free there.
  double regular_part = 0.0;
  switch (real.kind()) {
    case RealizationKind::Rational: regular_part = 0.0; break;
    case RealizationKind::QDeformedCoth: regular_part = real.q(); break;
    case RealizationKind::QDeformedTanh:
      throw std::invalid_argument("residue_at: the tanh realization has no poles at the u_i");
  }

  Matrix out = Matrix::Zero(sys.dimension(), sys.dimension());
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (j == i) continue;
    out -= site_weight(real, j, Complex(sys.u(i), 0.0)) * dot_product(sys, i, j);
  }
  out -= regular_part * dot_product(sys, i, i);
  return out;
}

}  // namespace gaudin
