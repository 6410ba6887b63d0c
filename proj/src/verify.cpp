#include "gaudin/verify.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "gaudin/algebra.hpp"
#include "gaudin/bethe.hpp"
#include "gaudin/magnet.hpp"
#include "gaudin/numeric.hpp"
#include "gaudin/rmatrix.hpp"
#include "gaudin/spin_rep.hpp"

namespace gaudin {

namespace {

constexpr double kPoleGuard = 1e-3;

// Sample a random triple of pairwise distinct parameters in [-5, 5] with all
// pairwise differences at least kPoleGuard away from the family's poles.
std::array<double, 3> sample_triple(numeric::Rng& rng, const CouplingFamily& family) {
  while (true) {
    std::array<double, 3> u{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                            rng.uniform(-5.0, 5.0)};
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a) {
      for (int b = a + 1; b < 3 && ok; ++b) {
        if (pole_distance(family, u[a] - u[b]) < kPoleGuard) ok = false;
      }
    }
    if (ok) return u;
  }
}

const std::array<std::array<int, 3>, 6> kPermutations{{{0, 1, 2},
                                                       {0, 2, 1},
                                                       {1, 0, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {2, 1, 0}}};

// Spectral arguments clearly off the real axis, away from every u_i and from
// the coth/tanh lattices of the q-realizations.
Complex sample_lambda(numeric::Rng& rng, const SpinSystem& system, double q) {
  double lo = system.u(0), hi = system.u(0);
  for (std::size_t i = 0; i < system.size(); ++i) {
    lo = std::min(lo, system.u(i));
    hi = std::max(hi, system.u(i));
  }
  double im_max = q == 0.0 ? 0.7 : std::min(0.7, 1.2 / std::abs(q));
  double im_min = 0.5 * im_max;
  while (true) {
    double re = rng.uniform(lo - 1.5, hi + 1.5);
    double im = rng.uniform(im_min, im_max) * (rng.uniform() < 0.5 ? 1.0 : -1.0);
    Complex lambda(re, im);
    bool ok = true;
    for (std::size_t i = 0; i < system.size() && ok; ++i) {
      if (std::abs(lambda - system.u(i)) < 0.2) ok = false;
    }
    if (ok) return lambda;
  }
}

struct SuiteContext {
  const SpinSystem& system;
  const CouplingFamily& family;
  const VerifyOptions& options;
  IdentityReport& report;

  double tol(const std::string& id) const {
    auto it = options.tolerance_overrides.find(id);
    if (it != options.tolerance_overrides.end()) return it->second;
    return options.tol_scale * default_tolerance(id, system.dimension());
  }

  void add(const std::string& id, const std::string& statement, double residual) const {
    report.add(id, statement, residual, tol(id));
  }
};

void coupling_checks(const SuiteContext& ctx, numeric::Rng& rng) {
  double worst_gaudin = 0.0;
  for (int t = 0; t < ctx.options.triples; ++t) {
    std::array<double, 3> u = sample_triple(rng, ctx.family);
    for (const auto& perm : kPermutations) {
      worst_gaudin =
          std::max(worst_gaudin, gaudin_residual(ctx.family, perm, u[0], u[1], u[2]));
    }
  }
  ctx.add("gaudin-equation",
          "w^a(u_i-u_j) w^c(u_j-u_k) + w^b(u_j-u_i) w^c(u_i-u_k) - w^a(u_i-u_k) w^b(u_j-u_k) "
          "= 0 for all upper-index permutations",
          worst_gaudin);

  double expected = ctx.family.tag() == FamilyTag::QDeformed ? -2.0 * ctx.family.param() : 0.0;
  double worst_sym = 0.0;
  for (int t = 0; t < ctx.options.triples; ++t) {
    double du;
    do {
      du = rng.uniform(-5.0, 5.0);
    } while (pole_distance(ctx.family, du) < kPoleGuard);
    for (int alpha = 0; alpha < 3; ++alpha) {
      worst_sym = std::max(worst_sym,
                           std::abs(symmetry_defect(ctx.family, alpha, du) - expected));
    }
  }
  ctx.add("coupling-symmetry",
          ctx.family.tag() == FamilyTag::QDeformed
              ? "w^a(du) + w^a(-du) = -2q"
              : "w^a(du) + w^a(-du) = 0",
          worst_sym);
}

void magnet_checks(const SuiteContext& ctx) {
  MagnetSet magnets = build_magnets(ctx.system, ctx.family);
  const std::size_t n = magnets.hamiltonians.size();

  double worst_comm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      worst_comm = std::max(worst_comm,
                            commutator_norm(magnets.hamiltonians[i], magnets.hamiltonians[j]));
    }
  }
  ctx.add("magnet-commutativity", "[h_i, h_j] = 0 for all pairs", worst_comm);

  Matrix t = total_magnetization(ctx.system);
  double worst_t = 0.0;
  for (const Matrix& h : magnets.hamiltonians) {
    worst_t = std::max(worst_t, commutator_norm(h, t));
  }
  ctx.add("magnetization-conservation", "[h_i, T] = 0 with T = sum_j t_j^0", worst_t);

  ctx.add("sum-rule",
          ctx.family.tag() == FamilyTag::QDeformed
              ? "sum_i h_i = -q sum_{i != j} t_i . t_j"
              : "sum_i h_i = 0",
          sum_rule_check(magnets));

  double worst_herm = 0.0;
  for (const Matrix& h : magnets.hamiltonians) {
    worst_herm = std::max(worst_herm, hermiticity_defect(h));
  }
  ctx.add("hermiticity", "h_i = h_i^dagger for real family parameters", worst_herm);
}

void realization_checks(const SuiteContext& ctx, const GeneratorRealization& real,
                        const std::string& suffix, numeric::Rng& rng) {
  Vector ground = lowest_weight_vector(ctx.system);

  double worst_algebra = 0.0;
  double worst_spectral = 0.0;
  double worst_lw = 0.0;
  double worst_lw_j0 = 0.0;
  double worst_linear = 0.0;
  for (int t = 0; t < ctx.options.lambda_pairs; ++t) {
    Complex lambda = sample_lambda(rng, ctx.system, real.q());
    Complex mu = sample_lambda(rng, ctx.system, real.q());
    if (std::abs(lambda - mu) < 1e-3) continue;
    worst_algebra = std::max(worst_algebra, algebra_residuals(real, lambda, mu).max_residual());
    Matrix hl = spectral_operator(real, lambda);
    Matrix hm = spectral_operator(real, mu);
    worst_spectral = std::max(worst_spectral, commutator_norm(hl, hm));
    worst_lw = std::max(worst_lw,
                        (hl * ground - lowest_weight_eigenvalue(real, lambda) * ground).norm());
    worst_lw_j0 =
        std::max(worst_lw_j0, (generator(real, Component::Zero, lambda) * ground -
                               weight_function(real, lambda) * ground)
                                  .norm());
    worst_linear = std::max(worst_linear, linear_structure_residual(real, lambda, mu));
  }
  ctx.add("algebra-relations" + suffix,
          "all six generator commutation relations of the " + real.name() + " family",
          worst_algebra);
  ctx.add("spectral-commutativity" + suffix, "[H(lambda), H(mu)] = 0", worst_spectral);
  ctx.add("lowest-weight-eigenvalue" + suffix,
          real.is_q_family() ? "H(lambda)|0> = (W^2 - W' - 2qW)|0>"
                             : "H(lambda)|0> = (W^2 - W')|0>",
          worst_lw);
  ctx.add("weight-function" + suffix, "J^0(lambda)|0> = W(lambda)|0>", worst_lw_j0);
  ctx.add("linear-r-structure" + suffix,
          "the family's linear r-matrix structure equation for L(lambda)", worst_linear);

  double worst_trace = 0.0;
  for (int t = 0; t < 3; ++t) {
    worst_trace = std::max(worst_trace,
                           trace_formula_check(real, sample_lambda(rng, ctx.system, real.q())));
  }
  ctx.add("trace-formula" + suffix, "H(lambda) = 1/2 Tr L(lambda)^2", worst_trace);

  if (real.kind() != RealizationKind::QDeformedTanh) {
    MagnetSet magnets = build_magnets(ctx.system, ctx.family);
    double worst_res = 0.0;
    for (std::size_t i = 0; i < ctx.system.size(); ++i) {
      Matrix expected = magnets.hamiltonians[i];
      if (real.is_q_family()) {
        expected -= real.q() * dot_product(ctx.system, i, i);
      }
      worst_res = std::max(worst_res, (residue_at(real, i) - expected).norm());
    }
    ctx.add("residue-relation" + suffix,
            real.is_q_family()
                ? "-1/2 Res H(lambda) at u_i equals h_i - q t_i.t_i"
                : "-1/2 Res H(lambda) at u_i equals h_i",
            worst_res);
  }
}

void yang_baxter_checks(const SuiteContext& ctx, numeric::Rng& rng) {
  const bool qfam = ctx.family.tag() == FamilyTag::QDeformed;
  const double q = qfam ? ctx.family.param() : 0.0;
  double worst = 0.0;
  for (int t = 0; t < ctx.options.triples; ++t) {
    Complex a(rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 1.0));
    Complex b(rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 1.0));
    Complex c(rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 1.0));
    if (std::abs(a - b) < 0.05 || std::abs(a - c) < 0.05 || std::abs(b - c) < 0.05) continue;
    if (qfam) {
      if (std::abs(std::sinh(q * (a - b))) < 0.05 || std::abs(std::sinh(q * (a - c))) < 0.05 ||
          std::abs(std::sinh(q * (b - c))) < 0.05) {
        continue;
      }
      worst = std::max(worst, qcybe_residual(a, b, c, q));
    } else {
      worst = std::max(worst, cybe_residual(a, b, c));
    }
  }
  if (qfam) {
    ctx.add("qcybe", "[r_{-q}^13, r_q^23] + [r_{-q}^12, r_q^23] + [r_{-q}^12, r_q^13] = 0",
            worst);
  } else {
    ctx.add("cybe", "[r^13, r^23] + [r^12, r^13] + [r^12, r^23] = 0", worst);
  }
}

}  // namespace

double default_tolerance(const std::string& id, int dim) {
  const double d = static_cast<double>(dim);
  if (id == "gaudin-equation") return 1e-10;
  if (id == "coupling-symmetry") return 1e-12;
  if (id == "magnet-commutativity") return 1e-10 * d;
  if (id == "magnetization-conservation") return 1e-10 * d;
  if (id == "sum-rule") return 1e-11 * d;
  if (id == "hermiticity") return 1e-12 * d;
  if (id == "cybe") return 1e-13;
  if (id == "qcybe") return 1e-12;
  if (id.starts_with("algebra-relations")) return 1e-10 * d;
  if (id.starts_with("spectral-commutativity")) return 1e-10 * d;
  if (id.starts_with("lowest-weight-eigenvalue")) return 1e-10;
  if (id.starts_with("weight-function")) return 1e-12;
  if (id.starts_with("linear-r-structure")) return 1e-10 * d;
  if (id.starts_with("trace-formula")) return 1e-11 * d;
  if (id.starts_with("residue-relation")) return 1e-11 * d;
  return 1e-10;
}

IdentityReport run_identity_suite(const SpinSystem& system, const CouplingFamily& family,
                                  const VerifyOptions& options) {
  IdentityReport report;
  SuiteContext ctx{system, family, options, report};
  numeric::Rng rng(options.seed);

  coupling_checks(ctx, rng);
  if (system.size() >= 2) {
    magnet_checks(ctx);
  }

  switch (family.tag()) {
    case FamilyTag::Rational: {
      realization_checks(ctx, GeneratorRealization::rational(system), "", rng);
      yang_baxter_checks(ctx, rng);
      break;
    }
    case FamilyTag::QDeformed: {
      double q = family.param();
      realization_checks(ctx, GeneratorRealization::q_coth(system, q), "-coth", rng);
      realization_checks(ctx, GeneratorRealization::q_tanh(system, q), "-tanh", rng);
      yang_baxter_checks(ctx, rng);
      break;
    }
    case FamilyTag::Trigonometric:
    case FamilyTag::Hyperbolic:
    case FamilyTag::Constant:
      break;  // covered at the coupling/Hamiltonian level only
  }
  return report;
}

}  // namespace gaudin
