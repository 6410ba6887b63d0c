// pybind11 bindings exposing the main operations: spin systems, coupling
// families, magnet construction and diagonalization, generator families,
// Bethe solving and the r-matrix checks.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaudin/algebra.hpp"
#include "gaudin/bethe.hpp"
#include "gaudin/commands.hpp"
#include "gaudin/config.hpp"
#include "gaudin/couplings.hpp"
#include "gaudin/magnet.hpp"
#include "gaudin/rmatrix.hpp"
#include "gaudin/spin_rep.hpp"
#include "gaudin/verify.hpp"

namespace py = pybind11;
using namespace gaudin;

namespace {

SpinSystem make_system(const std::vector<std::pair<double, double>>& sites, int cap) {
  std::vector<Site> s;
  s.reserve(sites.size());
  for (const auto& [spin, u] : sites) s.push_back({spin, u});
  return SpinSystem(std::move(s), cap);
}

Component component_from(const std::string& which) {
  if (which == "0" || which == "z" || which == "zero") return Component::Zero;
  if (which == "+" || which == "plus") return Component::Plus;
  if (which == "-" || which == "minus") return Component::Minus;
  throw std::invalid_argument("component must be one of '0', '+', '-'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Commuting Gaudin spin Hamiltonians, algebraic Bethe ansatz and r-matrix checks";

  py::class_<SpinSystem>(m, "SpinSystem")
      .def(py::init(&make_system), py::arg("sites"),
           py::arg("dimension_cap") = SpinSystem::kDefaultDimensionCap,
           "sites: list of (spin, u) pairs")
      .def_property_readonly("size", &SpinSystem::size)
      .def_property_readonly("dimension", &SpinSystem::dimension)
      .def("spin", &SpinSystem::spin)
      .def("u", &SpinSystem::u);

  py::class_<CouplingFamily>(m, "CouplingFamily")
      .def_static("rational", &CouplingFamily::rational)
      .def_static("trigonometric", &CouplingFamily::trigonometric, py::arg("p"))
      .def_static("hyperbolic", &CouplingFamily::hyperbolic, py::arg("p"))
      .def_static("q_deformed", &CouplingFamily::q_deformed, py::arg("q"))
      .def_property_readonly("name", &CouplingFamily::name)
      .def_property_readonly("param", &CouplingFamily::param);

  m.def("w", &w, py::arg("family"), py::arg("alpha"), py::arg("du"),
        "coupling coefficient w^alpha(u_i - u_j)");
  m.def(
      "gaudin_residual",
      [](const CouplingFamily& f, int a, int b, int c, double ui, double uj, double uk) {
        return gaudin_residual(f, {a, b, c}, ui, uj, uk);
      },
      py::arg("family"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("ui"),
      py::arg("uj"), py::arg("uk"));
  m.def("symmetry_defect", &symmetry_defect, py::arg("family"), py::arg("alpha"), py::arg("du"));

  m.def(
      "single_spin_generators",
      [](double s) {
        SpinMatrices g = single_spin_generators(s);
        return py::make_tuple(g.t0, g.tplus, g.tminus);
      },
      py::arg("s"), "returns (t0, t_plus, t_minus)");
  m.def(
      "embed",
      [](const SpinSystem& sys, std::size_t i, const std::string& which) {
        return embed(sys, i, component_from(which));
      },
      py::arg("system"), py::arg("site"), py::arg("which"));
  m.def("dot_product", &dot_product, py::arg("system"), py::arg("i"), py::arg("j"));
  m.def("total_magnetization", &total_magnetization, py::arg("system"));
  m.def("lowest_weight_vector", &lowest_weight_vector, py::arg("system"));

  py::class_<MagnetSet>(m, "MagnetSet")
      .def_property_readonly("hamiltonians",
                             [](const MagnetSet& s) { return s.hamiltonians; });
  m.def("build_magnets", &build_magnets, py::arg("system"), py::arg("family"));
  m.def("commutator_norm", &commutator_norm, py::arg("a"), py::arg("b"));
  m.def("sum_rule_check", &sum_rule_check, py::arg("magnets"));
  m.def(
      "exact_spectrum",
      [](const Matrix& a) {
        Spectrum s = exact_spectrum(a);
        return py::make_tuple(s.values, s.vectors);
      },
      py::arg("a"), "returns (eigenvalues ascending, eigenvector matrix)");
  m.def(
      "simultaneous_spectrum",
      [](const MagnetSet& magnets, std::uint64_t seed) {
        JointSpectrum s = simultaneous_spectrum(magnets, seed);
        return py::make_tuple(s.eigenvalues, s.vectors, s.max_residual);
      },
      py::arg("magnets"), py::arg("seed") = 42,
      "returns (joint eigenvalue table, eigenvector matrix, max residual)");

  py::class_<GeneratorRealization>(m, "GeneratorRealization")
      .def_static("rational", &GeneratorRealization::rational, py::arg("system"))
      .def_static("q_coth", &GeneratorRealization::q_coth, py::arg("system"), py::arg("q"))
      .def_static("q_tanh", &GeneratorRealization::q_tanh, py::arg("system"), py::arg("q"))
      .def_property_readonly("name", &GeneratorRealization::name)
      .def_property_readonly("q", &GeneratorRealization::q);

  m.def(
      "generator",
      [](const GeneratorRealization& r, const std::string& which, Complex lambda) {
        return generator(r, component_from(which), lambda);
      },
      py::arg("realization"), py::arg("which"), py::arg("lam"));
  m.def("weight_function", &weight_function, py::arg("realization"), py::arg("lam"));
  m.def("weight_function_derivative", &weight_function_derivative, py::arg("realization"),
        py::arg("lam"));
  m.def("spectral_operator", &spectral_operator, py::arg("realization"), py::arg("lam"));
  m.def("lowest_weight_eigenvalue", &lowest_weight_eigenvalue, py::arg("realization"),
        py::arg("lam"));
  m.def("residue_at", &residue_at, py::arg("realization"), py::arg("site"));
  m.def(
      "algebra_residuals",
      [](const GeneratorRealization& r, Complex lambda, Complex mu) {
        py::dict out;
        for (const IdentityEntry& e : algebra_residuals(r, lambda, mu).entries()) {
          out[py::str(e.id)] = e.residual;
        }
        return out;
      },
      py::arg("realization"), py::arg("lam"), py::arg("mu"));

  m.def("bethe_residual", &bethe_residual, py::arg("realization"), py::arg("roots"));
  m.def(
      "solve_bethe",
      [](const GeneratorRealization& r, int n, std::uint64_t seed) {
        BetheSolveOptions opt;
        opt.seed = seed;
        BetheSolveResult res = solve_bethe(r, n, {}, opt);
        py::list sols;
        for (const BetheState& s : res.solutions) {
          sols.append(py::dict(py::arg("roots") = s.roots, py::arg("residual") = s.residual,
                               py::arg("iterations") = s.iterations));
        }
        py::dict diag(py::arg("total_starts") = res.total_starts,
                      py::arg("converged_starts") = res.converged_starts,
                      py::arg("rejected_out_of_domain") = res.rejected_out_of_domain,
                      py::arg("rejected_degenerate") = res.rejected_degenerate,
                      py::arg("rejected_invariants") = res.rejected_invariants);
        return py::make_tuple(sols, diag);
      },
      py::arg("realization"), py::arg("n"), py::arg("seed") = 42);
  m.def("bethe_vector", &bethe_vector, py::arg("realization"), py::arg("roots"));
  m.def("bethe_eigenvalue", &bethe_eigenvalue, py::arg("realization"), py::arg("lam"),
        py::arg("roots"));
  m.def("magnet_eigenvalues_from_roots", &magnet_eigenvalues_from_roots, py::arg("realization"),
        py::arg("roots"));

  m.def("permutation_matrix", []() { return Matrix(permutation_matrix()); });
  m.def("rational_r", [](Complex z) { return Matrix(rational_r(z)); }, py::arg("z"));
  m.def("rq", [](Complex z, double q) { return Matrix(rq(z, q)); }, py::arg("z"), py::arg("q"));
  m.def("cybe_residual", &cybe_residual, py::arg("lam"), py::arg("mu"), py::arg("sigma"));
  m.def("qcybe_residual", &qcybe_residual, py::arg("lam"), py::arg("mu"), py::arg("sigma"),
        py::arg("q"));
  m.def("linear_structure_residual", &linear_structure_residual, py::arg("realization"),
        py::arg("lam"), py::arg("mu"));
  m.def(
      "no_go_probe",
      [](const GeneratorRealization& r, Complex lambda, Complex mu, std::uint64_t seed) {
        NoGoResult res = no_go_probe(r, lambda, mu, seed);
        return py::dict(py::arg("residual") = res.residual,
                        py::arg("best_r") = Matrix(res.best_r),
                        py::arg("constraint_upper") = res.constraint_upper,
                        py::arg("constraint_lower") = res.constraint_lower,
                        py::arg("constraint_gap") = res.constraint_gap);
      },
      py::arg("realization"), py::arg("lam"), py::arg("mu"), py::arg("seed") = 42);
  m.def("trace_formula_check", &trace_formula_check, py::arg("realization"), py::arg("lam"));

  m.def(
      "run_command",
      [](const std::string& command, const std::string& config_json) {
        JobConfig cfg = parse_config(nlohmann::json::parse(config_json));
        nlohmann::json report;
        if (command == "verify") report = cmd_verify(cfg);
        else if (command == "bethe") report = cmd_bethe(cfg);
        else if (command == "spectrum") report = cmd_spectrum(cfg);
        else if (command == "nogo") report = cmd_nogo(cfg);
        else if (command == "sweep") report = cmd_sweep(cfg);
        else throw std::invalid_argument("unknown command: " + command);
        return report.dump();
      },
      py::arg("command"), py::arg("config_json"),
      "run a CLI command on a JSON config string; returns the JSON report");
}
