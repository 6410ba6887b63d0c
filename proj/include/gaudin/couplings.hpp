#pragma once

#include <array>
#include <string>

namespace gaudin {

enum class FamilyTag { Rational, Trigonometric, Hyperbolic, QDeformed, Constant };

/// One of the coupling families solving the Gaudin equation:
///   rational        w^a(du) = 1/du
///   trigonometric   w^0 = p cot(p du),  w^1 = w^2 = p / sin(p du)
///   hyperbolic      w^0 = p coth(p du), w^1 = w^2 = p / sinh(p du)
///   q-deformed      w^a(du) = q coth(q du) - q
/// The parameter is real and nonzero; the zero-parameter limits are
/// represented by the explicit rational family.  The constant family
/// (w == c) violates the Gaudin equation and exists only as a negative
/// control for the residual checker; it is not accepted by configs.
class CouplingFamily {
 public:
  static CouplingFamily rational();
  static CouplingFamily trigonometric(double p);
  static CouplingFamily hyperbolic(double p);
  static CouplingFamily q_deformed(double q);
  static CouplingFamily constant(double c);  // test-only negative control

  FamilyTag tag() const { return tag_; }
  double param() const { return param_; }
  bool has_param() const { return tag_ != FamilyTag::Rational; }

  /// "rational", "trigonometric", "hyperbolic", "q-deformed", "constant".
  std::string name() const;

 private:
  CouplingFamily(FamilyTag tag, double param) : tag_(tag), param_(param) {}
  FamilyTag tag_;
  double param_;
};

/// Coupling coefficient w^alpha(du) with du = u_i - u_j, alpha in {0,1,2}.
/// Throws std::domain_error on exact poles (du = 0, or sin(p du) = 0 for the
/// trigonometric family).
double w(const CouplingFamily& family, int alpha, double du);

/// |w_ij^a w_jk^c + w_ji^b w_ik^c - w_ik^a w_jk^b| for the upper-index
/// permutation (a, b, c) of (0, 1, 2).  Zero for every Gaudin-equation
/// solution.  Evaluated in extended precision so the residual measures the
/// identity rather than double-rounding noise near poles.
double gaudin_residual(const CouplingFamily& family, const std::array<int, 3>& perm, double ui,
                       double uj, double uk);

/// w(du) + w(-du): zero for the antisymmetric families, -2q for q-deformed.
double symmetry_defect(const CouplingFamily& family, int alpha, double du);

/// Distance from du to the nearest pole of the family's coefficients
/// (du = 0 always; additionally the lattice sin(p du) = 0 for trig).
double pole_distance(const CouplingFamily& family, double du);

}  // namespace gaudin
