#include "gaudin/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gaudin/numeric.hpp"

namespace gaudin {

namespace {

void require_solver_family(const GeneratorRealization& real, const char* who) {
  if (real.kind() == RealizationKind::QDeformedTanh) {
    throw std::invalid_argument(std::string(who) +
                                ": Bethe equations are solved for the rational and coth "
                                "realizations only");
  }
}

double root_scale(const GeneratorRealization& real) {
  return real.system().parameter_spread() + 1.0;
}

// Runaway detection: far from the parameter cluster the equations go flat
// and Newton "converges" to meaningless points.
bool in_domain(const GeneratorRealization& real, const std::vector<Complex>& roots,
               double radius_factor) {
  const SpinSystem& sys = real.system();
  double centroid = 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) centroid += sys.u(i);
  centroid /= static_cast<double>(sys.size());
  double radius = radius_factor * root_scale(real);
  for (Complex r : roots) {
    if (std::abs(r - centroid) > radius) return false;
  }
  return true;
}

// For the q-family all kernels are i*pi/q periodic in every root; pick the
// representative with Im in (-pi/(2q), pi/(2q)].
std::vector<Complex> canonicalize(const GeneratorRealization& real, std::vector<Complex> roots) {
  if (real.kind() == RealizationKind::QDeformedCoth) {
    double period = M_PI / std::abs(real.q());
    for (Complex& r : roots) {
      double im = std::remainder(r.imag(), period);
      r = Complex(r.real(), im);
    }
  }
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

bool same_root_set(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (Complex ra : a) {
    bool matched = false;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!used[k] && std::abs(ra - b[k]) < tol) {
        used[k] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool satisfies_invariants(const GeneratorRealization& real, const std::vector<Complex>& roots) {
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (std::abs(roots[a] - roots[b]) < 1e-8) return false;
    }
    for (std::size_t i = 0; i < real.system().size(); ++i) {
      if (std::abs(roots[a] - real.system().u(i)) < 1e-8) return false;
    }
  }
  return true;
}

Eigen::VectorXcd equations(const GeneratorRealization& real, const Eigen::VectorXcd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXcd f(n);
  for (int a = 0; a < n; ++a) {
    Complex lhs = weight_function(real, x(a));
    Complex rhs = 0.0;
    for (int b = 0; b < n; ++b) {
      if (b != a) rhs += bethe_kernel(real, x(a) - x(b));
    }
    f(a) = lhs - rhs;
  }
  return f;
}

Eigen::MatrixXcd jacobian(const GeneratorRealization& real, const Eigen::VectorXcd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXcd jac(n, n);
  for (int a = 0; a < n; ++a) {
    Complex diag = weight_function_derivative(real, x(a));
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      Complex kp = bethe_kernel_derivative(real, x(a) - x(b));
      diag -= kp;
      jac(a, b) = kp;
    }
    jac(a, a) = diag;
  }
  return jac;
}

bool off_singularities(const GeneratorRealization& real, const Eigen::VectorXcd& x) {
  for (int a = 0; a < x.size(); ++a) {
    for (int b = a + 1; b < x.size(); ++b) {
      if (std::abs(x(a) - x(b)) < 1e-12) return false;
    }
    for (std::size_t i = 0; i < real.system().size(); ++i) {
      Complex z = x(a) - real.system().u(i);
      if (real.kind() == RealizationKind::Rational) {
        if (std::abs(z) < 1e-12) return false;
      } else if (std::abs(std::sinh(real.q() * z)) < 1e-12) {
        return false;
      }
    }
  }
  return true;
}

struct NewtonOutcome {
  Eigen::VectorXcd x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

NewtonOutcome damped_newton(const GeneratorRealization& real, Eigen::VectorXcd x,
                            const BetheSolveOptions& opt) {
  NewtonOutcome out;
  if (!off_singularities(real, x)) return out;
  Eigen::VectorXcd f = equations(real, x);
  double res = f.cwiseAbs().maxCoeff();
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    if (res < opt.convergence_tol) break;
    Eigen::MatrixXcd jac = jacobian(real, x);
    Eigen::VectorXcd delta = jac.fullPivLu().solve(-f);
    if (!delta.allFinite()) break;
    double step = 1.0;
    bool improved = false;
    for (int bt = 0; bt < opt.max_backtracks; ++bt) {
      Eigen::VectorXcd xn = x + step * delta;
      if (off_singularities(real, xn)) {
        Eigen::VectorXcd fn = equations(real, xn);
        double rn = fn.cwiseAbs().maxCoeff();
        if (rn < res) {
          x = std::move(xn);
          f = std::move(fn);
          res = rn;
          improved = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!improved) break;  // stagnated
  }
  out.x = std::move(x);
  out.residual = res;
  out.iterations = it;
  out.converged = res < opt.acceptance_tol;
  return out;
}

}  // namespace

Complex bethe_kernel(const GeneratorRealization& real, Complex x) {
  require_solver_family(real, "bethe_kernel");
  if (real.kind() == RealizationKind::Rational) {
    if (std::abs(x) < 1e-14) throw std::domain_error("bethe_kernel: pole at 0");
    return 1.0 / x;
  }
  double q = real.q();
  if (std::abs(std::sinh(q * x)) < 1e-14) throw std::domain_error("bethe_kernel: pole");
  return q * numeric::cothm1(q * x);
}

Complex bethe_kernel_derivative(const GeneratorRealization& real, Complex x) {
  require_solver_family(real, "bethe_kernel_derivative");
  if (real.kind() == RealizationKind::Rational) {
    if (std::abs(x) < 1e-14) throw std::domain_error("bethe_kernel_derivative: pole at 0");
    return -1.0 / (x * x);
  }
  double q = real.q();
  Complex s = std::sinh(q * x);
  if (std::abs(s) < 1e-14) throw std::domain_error("bethe_kernel_derivative: pole");
  return -q * q / (s * s);
}

double bethe_residual(const GeneratorRealization& real, const std::vector<Complex>& roots) {
  require_solver_family(real, "bethe_residual");
  if (roots.empty()) return 0.0;
  Eigen::VectorXcd x(roots.size());
  for (std::size_t a = 0; a < roots.size(); ++a) x(static_cast<int>(a)) = roots[a];
  if (!off_singularities(real, x)) {
    throw std::domain_error("bethe_residual: coincident roots or roots at poles");
  }
  return equations(real, x).cwiseAbs().maxCoeff();
}

BetheSolveResult solve_bethe(const GeneratorRealization& real, int n,
                             const std::vector<std::vector<Complex>>& extra_seeds,
                             const BetheSolveOptions& options) {
  require_solver_family(real, "solve_bethe");
  const SpinSystem& sys = real.system();
  if (n < 1) throw std::invalid_argument("solve_bethe: need n >= 1");
  double sector_bound = 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) sector_bound += 2.0 * sys.spin(i);
  if (static_cast<double>(n) > sector_bound + 1e-9) {
    std::ostringstream msg;
    msg << "solve_bethe: n = " << n << " exceeds the magnetization bound sum(2 s_j) = "
        << sector_bound;
    throw std::invalid_argument(msg.str());
  }

  const std::size_t nsites = sys.size();
  numeric::Rng rng(options.seed);
  double scale = root_scale(real);

  // Seeds: for every size-n site multiset, roots jittered around the chosen
  // u_i and around the spin-weighted centroid of the chosen sites.  The
  // jitter has an imaginary part so complex-pair solutions are reachable.
  std::vector<std::vector<Complex>> seeds;
  std::vector<std::size_t> multiset(static_cast<std::size_t>(n), 0);
  auto emit_for_multiset = [&](const std::vector<std::size_t>& sites) {
    for (int rep = 0; rep < options.jitters_per_cluster; ++rep) {
      std::vector<Complex> jitter(static_cast<std::size_t>(n));
      for (Complex& j : jitter) {
        double radius = 0.08 * scale * (0.5 + rng.uniform());
        double angle = 2.0 * M_PI * rng.uniform();
        j = radius * Complex(std::cos(angle), std::sin(angle));
      }
      std::vector<Complex> near_sites(static_cast<std::size_t>(n));
      double wsum = 0.0, centroid = 0.0;
      for (std::size_t k = 0; k < sites.size(); ++k) {
        near_sites[k] = sys.u(sites[k]) + jitter[k];
        wsum += sys.spin(sites[k]);
        centroid += sys.spin(sites[k]) * sys.u(sites[k]);
      }
      centroid /= wsum;
      seeds.push_back(near_sites);
      std::vector<Complex> near_centroid(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < near_centroid.size(); ++k) {
        near_centroid[k] = centroid + jitter[k] * 1.5;
      }
      seeds.push_back(near_centroid);
    }
  };
  // iterate multisets i_1 <= i_2 <= ... <= i_n
  while (true) {
    emit_for_multiset(multiset);
    int pos = n - 1;
    while (pos >= 0 && multiset[static_cast<std::size_t>(pos)] == nsites - 1) --pos;
    if (pos < 0) break;
    std::size_t next = multiset[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < n; ++k) multiset[static_cast<std::size_t>(k)] = next;
  }
  if (n == 1) {
    // weighted pair midpoints, where single-root solutions tend to sit
    for (std::size_t i = 0; i < nsites; ++i) {
      for (std::size_t j = i + 1; j < nsites; ++j) {
        double m = (sys.spin(i) * sys.u(j) + sys.spin(j) * sys.u(i)) /
                   (sys.spin(i) + sys.spin(j));
        seeds.push_back({Complex(m, 0.02 * scale)});
      }
    }
  }
  for (const auto& s : extra_seeds) {
    if (static_cast<int>(s.size()) == n) seeds.push_back(s);
  }

  BetheSolveResult result;
  result.total_starts = static_cast<int>(seeds.size());
  std::vector<std::vector<Complex>> accepted_roots;
  std::vector<BetheState> accepted;

  for (const auto& seed : seeds) {
    Eigen::VectorXcd x0(n);
    for (int k = 0; k < n; ++k) x0(k) = seed[static_cast<std::size_t>(k)];
    NewtonOutcome outcome = damped_newton(real, x0, options);
    if (!outcome.converged) continue;
    ++result.converged_starts;

    std::vector<Complex> roots(outcome.x.data(), outcome.x.data() + n);
    roots = canonicalize(real, std::move(roots));
    if (!in_domain(real, roots, options.domain_radius_factor)) {
      ++result.rejected_out_of_domain;
      continue;
    }
    if (!satisfies_invariants(real, roots)) {
      ++result.rejected_invariants;
      continue;
    }
    bool duplicate = false;
    for (const auto& known : accepted_roots) {
      if (same_root_set(roots, known, options.dedup_tol)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;

    // degenerate (vanishing) Bethe vectors correspond to no eigenstate
    try {
      bethe_vector(real, roots);
    } catch (const std::runtime_error&) {
      ++result.rejected_degenerate;
      accepted_roots.push_back(roots);  // suppress duplicates of the same null set
      continue;
    }

    double res = bethe_residual(real, roots);
    accepted_roots.push_back(roots);
    accepted.push_back(BetheState{std::move(roots), res, outcome.iterations, true});
  }

  std::sort(accepted.begin(), accepted.end(), [](const BetheState& a, const BetheState& b) {
    for (std::size_t k = 0; k < a.roots.size(); ++k) {
      if (std::abs(a.roots[k].real() - b.roots[k].real()) > 1e-9) {
        return a.roots[k].real() < b.roots[k].real();
      }
      if (std::abs(a.roots[k].imag() - b.roots[k].imag()) > 1e-9) {
        return a.roots[k].imag() < b.roots[k].imag();
      }
    }
    return false;
  });
  result.solutions = std::move(accepted);
  return result;
}

Vector bethe_vector(const GeneratorRealization& real, const std::vector<Complex>& roots) {
  Vector v = lowest_weight_vector(real.system());
  double scale = 1.0;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    Matrix jp = generator(real, Component::Plus, *it);
    scale *= std::max(jp.norm(), 1e-300);
    v = jp * v;
  }
  if (v.norm() < 1e-8 * scale) {
    throw std::runtime_error("bethe_vector: raising-operator product annihilates the "
                             "lowest-weight vector (degenerate root set)");
  }
  return v;
}

Complex bethe_eigenvalue(const GeneratorRealization& real, Complex lambda,
                         const std::vector<Complex>& roots) {
  require_solver_family(real, "bethe_eigenvalue");
  Complex e = lowest_weight_eigenvalue(real, lambda);
  Complex wl = weight_function(real, lambda);
  for (Complex xi : roots) {
    e -= 2.0 * bethe_kernel(real, lambda - xi) * (wl - weight_function(real, xi));
  }
  return e;
}

std::vector<double> magnet_eigenvalues_from_roots(const GeneratorRealization& real,
                                                  const std::vector<Complex>& roots) {
  require_solver_family(real, "magnet_eigenvalues_from_roots");
  const SpinSystem& sys = real.system();
  std::vector<double> out(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    Complex e = 0.0;
    for (std::size_t j = 0; j < sys.size(); ++j) {
      if (j != i) {
        e += sys.spin(i) * sys.spin(j) * bethe_kernel(real, Complex(sys.u(i) - sys.u(j), 0.0));
      }
    }
    for (Complex xi : roots) {
      if (std::abs(Complex(sys.u(i), 0.0) - xi) < 1e-12) {
        throw std::domain_error("magnet_eigenvalues_from_roots: root collides with a site "
                                "parameter");
      }
      e -= sys.spin(i) * bethe_kernel(real, Complex(sys.u(i), 0.0) - xi);
    }
    out[i] = e.real();
  }
  return out;
}

}  // namespace gaudin
