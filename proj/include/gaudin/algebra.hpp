#pragma once

#include "gaudin/report.hpp"
#include "gaudin/spin_rep.hpp"
#include "gaudin/spin_system.hpp"
#include "gaudin/types.hpp"

namespace gaudin {

enum class RealizationKind { Rational, QDeformedCoth, QDeformedTanh };

/// Tensor realization of a generator family J^{0,+,-}(lambda) as
/// J^a(lambda) = sum_i f_i(lambda) t_i^a with site weight
///   Rational       f_i = 1 / (u_i - lambda)
///   QDeformedCoth  f_i = q (coth[q (u_i - lambda)] + 1)
///   QDeformedTanh  f_i = q (tanh[q (u_i - lambda)] + 1)
class GeneratorRealization {
 public:
  static GeneratorRealization rational(SpinSystem system);
  static GeneratorRealization q_coth(SpinSystem system, double q);
  static GeneratorRealization q_tanh(SpinSystem system, double q);

  const SpinSystem& system() const { return system_; }
  RealizationKind kind() const { return kind_; }
  bool is_q_family() const { return kind_ != RealizationKind::Rational; }
  /// Deformation parameter; zero for the rational realization.
  double q() const { return q_; }

  std::string name() const;

 private:
  GeneratorRealization(SpinSystem system, RealizationKind kind, double q)
      : system_(std::move(system)), kind_(kind), q_(q) {}
  SpinSystem system_;
  RealizationKind kind_;
  double q_;
};

/// Site weight f_i(lambda).  Throws std::domain_error at realization poles.
Complex site_weight(const GeneratorRealization& real, std::size_t i, Complex lambda);

/// d f_i / d lambda, analytic.
Complex site_weight_derivative(const GeneratorRealization& real, std::size_t i, Complex lambda);

/// J^which(lambda) = sum_i f_i(lambda) t_i^which.
Matrix generator(const GeneratorRealization& real, Component which, Complex lambda);

/// d J^which / d lambda; used for the equal-argument commutator limits.
Matrix generator_derivative(const GeneratorRealization& real, Component which, Complex lambda);

/// W(lambda) = -sum_i s_i f_i(lambda), the eigenvalue of J^0(lambda) on the
/// lowest-weight vector.
Complex weight_function(const GeneratorRealization& real, Complex lambda);

/// Analytic W'(lambda), validated against finite differences in the tests.
Complex weight_function_derivative(const GeneratorRealization& real, Complex lambda);

/// Residuals of all six structure relations of the generator family at
/// (lambda, mu).  For lambda == mu the analytic limit forms (derivative
/// kernels) are checked instead.
IdentityReport algebra_residuals(const GeneratorRealization& real, Complex lambda, Complex mu);

/// H(lambda) = J^0 J^0 + (J^+ J^- + J^- J^+) / 2 at lambda.
Matrix spectral_operator(const GeneratorRealization& real, Complex lambda);

/// Eigenvalue of H(lambda) on the lowest-weight vector:
/// W^2 - W' for the rational family, W^2 - W' - 2 q W for the q-families.
Complex lowest_weight_eigenvalue(const GeneratorRealization& real, Complex lambda);

/// -1/2 times the residue of H(lambda) at lambda = u_i, taken in the
/// variable (u_i - lambda) that the site weights are expressed in, computed
/// from the analytic pole data of f_i (simple pole with unit coefficient
/// plus regular part).  Recovers h_i for the rational family and
/// h_i - q t_i.t_i for the coth realization.  The tanh realization has no
/// poles at the u_i and is rejected.
Matrix residue_at(const GeneratorRealization& real, std::size_t i);

}  // namespace gaudin
