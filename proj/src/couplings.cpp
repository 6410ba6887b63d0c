#include "gaudin/couplings.hpp"

#include <cmath>
#include <stdexcept>

#include "gaudin/numeric.hpp"

namespace gaudin {

namespace {

void require_param(double p, const char* who) {
  if (!std::isfinite(p) || p == 0.0) {
    throw std::invalid_argument(std::string(who) +
                                ": parameter must be real and nonzero; "
                                "use the rational family for the zero-parameter limit");
  }
}

long double w_impl(const CouplingFamily& family, int alpha, long double du) {
  if (alpha < 0 || alpha > 2) throw std::invalid_argument("w: component index must be 0, 1 or 2");
  if (du == 0.0L) throw std::domain_error("w: pole at u_i - u_j = 0");
  long double p = family.param();
  switch (family.tag()) {
    case FamilyTag::Rational:
      return 1.0L / du;
    case FamilyTag::Trigonometric: {
      long double s = std::sin(p * du);
      if (s == 0.0L) throw std::domain_error("w: trigonometric pole, sin(p du) = 0");
      return alpha == 0 ? p * std::cos(p * du) / s : p / s;
    }
    case FamilyTag::Hyperbolic: {
      if (alpha == 0) return p * numeric::cothl(p * du);
      return p / std::sinh(p * du);
    }
    case FamilyTag::QDeformed:
      // q coth(q du) - q, all components equal
      return p * numeric::cothm1l(p * du);
    case FamilyTag::Constant:
      return p;
  }
  throw std::logic_error("w: bad family tag");
}

}  // namespace

CouplingFamily CouplingFamily::rational() { return {FamilyTag::Rational, 0.0}; }

CouplingFamily CouplingFamily::trigonometric(double p) {
  require_param(p, "CouplingFamily::trigonometric");
  return {FamilyTag::Trigonometric, p};
}

CouplingFamily CouplingFamily::hyperbolic(double p) {
  require_param(p, "CouplingFamily::hyperbolic");
  return {FamilyTag::Hyperbolic, p};
}

CouplingFamily CouplingFamily::q_deformed(double q) {
  require_param(q, "CouplingFamily::q_deformed");
  return {FamilyTag::QDeformed, q};
}

CouplingFamily CouplingFamily::constant(double c) { return {FamilyTag::Constant, c}; }

std::string CouplingFamily::name() const {
  switch (tag_) {
    case FamilyTag::Rational: return "rational";
    case FamilyTag::Trigonometric: return "trigonometric";
    case FamilyTag::Hyperbolic: return "hyperbolic";
    case FamilyTag::QDeformed: return "q-deformed";
    case FamilyTag::Constant: return "constant";
  }
  return "unknown";
}

double w(const CouplingFamily& family, int alpha, double du) {
  return static_cast<double>(w_impl(family, alpha, du));
}

double gaudin_residual(const CouplingFamily& family, const std::array<int, 3>& perm, double ui,
                       double uj, double uk) {
  const auto [a, b, c] = perm;
  long double dij = static_cast<long double>(ui) - uj;
  long double dik = static_cast<long double>(ui) - uk;
  long double djk = static_cast<long double>(uj) - uk;
  if (dij == 0.0L || dik == 0.0L || djk == 0.0L) {
    throw std::domain_error("gaudin_residual: coincident parameters");
  }
  long double r = w_impl(family, a, dij) * w_impl(family, c, djk) +
                  w_impl(family, b, -dij) * w_impl(family, c, dik) -
                  w_impl(family, a, dik) * w_impl(family, b, djk);
  return static_cast<double>(std::abs(r));
}

double symmetry_defect(const CouplingFamily& family, int alpha, double du) {
  return static_cast<double>(w_impl(family, alpha, du) + w_impl(family, alpha, -du));
}

double pole_distance(const CouplingFamily& family, double du) {
  double d = std::abs(du);
  if (family.tag() == FamilyTag::Trigonometric) {
    double p = std::abs(family.param());
    double spacing = M_PI / p;
    double k = std::round(du / spacing);
    d = std::min(d, std::abs(du - k * spacing));
  }
  return d;
}

}  // namespace gaudin
