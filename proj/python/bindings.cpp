// Copyright 2026 The dysonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "dysonlab/bogolubov.hpp"
#include "dysonlab/correlation.hpp"
#include "dysonlab/errors.hpp"
#include "dysonlab/foldy.hpp"
#include "dysonlab/matrixloc.hpp"
#include "dysonlab/spectral.hpp"
#include "dysonlab/suite.hpp"
#include "dysonlab/trialstate.hpp"
#include "dysonlab/variational.hpp"

namespace py = pybind11;
using namespace dysonlab;

namespace {

py::dict to_dict(const InequalityReport& r) {
  py::dict d;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["slack"] = r.slack;
  d["holds"] = r.holds;
  return d;
}

correlation::ParticleConfiguration configuration(const std::vector<correlation::Vec3>& positions,
                                                 const std::vector<double>& charges) {
  return correlation::ParticleConfiguration(positions, charges);
}

variational::RadialProfile profile_from(const std::vector<double>& values, double r_max, double stretch) {
  return variational::RadialProfile(RadialGrid(values.size(), r_max, stretch), values);
}

spectral::PotentialSpec potential(const std::string& kind, double depth, double range,
                                  const std::vector<correlation::Vec3>& centers) {
  spectral::PotentialSpec v;
  v.kind = spectral::potential_kind_from_name(kind);
  v.depth = depth;
  v.range = range;
  v.centers = centers;
  return v;
}

spectral::Discretization discretization(std::size_t count, double r_max, int l_max, std::size_t count_3d) {
  spectral::Discretization g;
  g.count = count;
  g.r_max = r_max;
  g.l_max = l_max;
  g.count_3d = count_3d;
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "dysonlab numerical core";
  m.attr("__version__") = DYSONLAB_VERSION;

  static py::exception<Error> base(m, "DysonlabError", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<PreconditionError> precondition(m, "PreconditionError", base.ptr());
  static py::exception<ConsistencyError> consistency(m, "ConsistencyError", base.ptr());
  static py::exception<ResourceError> resource(m, "ResourceError", base.ptr());
  static py::exception<AccuracyError> accuracy(m, "AccuracyError", base.ptr());
  static py::exception<ConvergenceError> convergence(m, "ConvergenceError", base.ptr());
  static py::exception<UsageError> usage(m, "UsageError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(domain.ptr(), e.what());
    } catch (const PreconditionError& e) {
      PyErr_SetString(precondition.ptr(), e.what());
    } catch (const ConsistencyError& e) {
      PyErr_SetString(consistency.ptr(), e.what());
    } catch (const ResourceError& e) {
      PyErr_SetString(resource.ptr(), e.what());
    } catch (const AccuracyError& e) {
      PyErr_SetString(accuracy.ptr(), e.what());
    } catch (const ConvergenceError& e) {
      PyErr_SetString(convergence.ptr(), e.what());
    } catch (const UsageError& e) {
      PyErr_SetString(usage.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  // foldy
  m.def("j_from_integral", &foldy::j_from_integral, py::arg("tol") = kDefaultQuadratureTol);
  m.def("j_closed_form", &foldy::j_closed_form);
  m.def("foldy_constant", [] { return foldy::foldy_constant().value; });
  m.def("kinetic_symbol", [](double p, double mu_long, double mu_short, double s, double ell) {
    return foldy::kinetic_symbol(p, {mu_long, mu_short, s, ell});
  }, py::arg("p"), py::arg("mu_long") = 0.0, py::arg("mu_short") = 1.0, py::arg("s") = 1.0, py::arg("ell") = 1.0);
  m.def("potential_hat", [](double p, double mu_long, double mu_short) {
    return foldy::potential_hat(p, {mu_long, mu_short, 1.0, 1.0});
  }, py::arg("p"), py::arg("mu_long") = 0.0, py::arg("mu_short") = 1.0);
  m.def("local_energy", [](double nu, double mu_long, double mu_short, double s, double ell, double tol) {
    const auto r = foldy::local_energy(nu, {mu_long, mu_short, s, ell}, tol);
    py::dict d;
    d["value"] = r.value;
    d["integrand_peak_p"] = r.integrand_peak_p;
    d["error_estimate"] = r.quadrature.error_estimate;
    d["evaluations"] = r.quadrature.evaluations;
    return d;
  }, py::arg("nu"), py::arg("mu_long"), py::arg("mu_short"), py::arg("s"), py::arg("ell"),
     py::arg("tol") = kDefaultQuadratureTol);
  m.def("local_energy_simplified", &foldy::local_energy_simplified, py::arg("nu"), py::arg("ell"),
        py::arg("tol") = kDefaultQuadratureTol);

  // bogolubov
  m.def("closed_form_bound", [](double t, double g_plus, double g_minus) {
    return bogolubov::closed_form_bound({t, g_plus, g_minus});
  }, py::arg("t"), py::arg("g_plus"), py::arg("g_minus"));
  m.def("bogolubov_ground_energy", [](double t, double g_plus, double g_minus, int n_max) {
    return bogolubov::ground_energy(bogolubov::build_hamiltonian({t, g_plus, g_minus}, n_max));
  }, py::arg("t"), py::arg("g_plus"), py::arg("g_minus"), py::arg("n_max"));
  m.def("sharpness_study", [](double t, double g_plus, double g_minus, const std::vector<int>& n_max_list) {
    py::list rows;
    for (const auto& r : bogolubov::sharpness_study({t, g_plus, g_minus}, n_max_list)) {
      py::dict d;
      d["n_max"] = r.n_max;
      d["energy"] = r.energy;
      d["bound"] = r.bound;
      d["gap"] = r.gap;
      rows.append(d);
    }
    return rows;
  }, py::arg("t"), py::arg("g_plus"), py::arg("g_minus"), py::arg("n_max_list"));

  // correlation
  m.def("pair_energy", [](const std::vector<correlation::Vec3>& x, const std::vector<double>& z, double mu) {
    return correlation::pair_energy(configuration(x, z), mu);
  }, py::arg("positions"), py::arg("charges"), py::arg("mu") = 0.0);
  m.def("onsager_check", [](const std::vector<correlation::Vec3>& x, const std::vector<double>& z, double mu) {
    return to_dict(correlation::onsager_check(configuration(x, z), mu));
  }, py::arg("positions"), py::arg("charges"), py::arg("mu") = 0.0);
  m.def("baxter_check", [](const std::vector<correlation::Vec3>& x, const std::vector<double>& z) {
    return to_dict(correlation::baxter_check(configuration(x, z)));
  }, py::arg("positions"), py::arg("charges"));
  m.def("yukawa_positivity_check", [](const std::vector<correlation::Vec3>& x, const std::vector<double>& z, double mu) {
    return to_dict(correlation::yukawa_positivity_check(configuration(x, z), mu));
  }, py::arg("positions"), py::arg("charges"), py::arg("mu"));
  m.def("cly_localization_check", [](const std::vector<correlation::Vec3>& x, const std::vector<double>& z, double mu,
                                     double omega, int order, int points) {
    return to_dict(correlation::cly_localization_check(configuration(x, z), mu, omega, correlation::PolynomialBump(order),
                                                       {points}));
  }, py::arg("positions"), py::arg("charges"), py::arg("mu"), py::arg("omega"), py::arg("order") = 2,
     py::arg("points") = 8);

  // variational
  m.def("minimize", [](std::size_t nodes, double r_max, double stretch, double step, double tol, int max_iter) {
    const RadialGrid grid(nodes, r_max, stretch);
    const auto r = variational::minimize(variational::default_initial_profile(grid), step, tol, max_iter);
    py::dict d;
    d["energy"] = r.energy;
    d["kinetic"] = r.kinetic;
    d["potential"] = r.potential;
    d["virial_residual"] = r.virial_residual;
    d["chemical_potential"] = r.chemical_potential;
    d["iterations"] = r.iterations;
    d["converged"] = r.converged;
    d["r"] = std::vector<double>(grid.nodes().begin(), grid.nodes().end());
    d["phi"] = r.profile.values();
    return d;
  }, py::arg("nodes") = 400, py::arg("r_max") = 100.0, py::arg("stretch") = 4.0,
     py::arg("step") = variational::kDefaultMinimizeStep, py::arg("tol") = variational::kDefaultMinimizeTol,
     py::arg("max_iter") = variational::kDefaultMinimizeIterations);
  m.def("functional_energy", [](const std::vector<double>& phi, double r_max, double stretch) {
    const auto e = variational::functional_energy(profile_from(phi, r_max, stretch));
    return py::make_tuple(e.energy, e.kinetic, e.potential);
  }, py::arg("phi"), py::arg("r_max") = 100.0, py::arg("stretch") = 4.0);

  // trialstate
  m.def("occupation_f", &trialstate::occupation_f, py::arg("rho"), py::arg("p"));
  m.def("pointwise_pair_energy", [](double rho, double tol, std::optional<double> j) {
    return trialstate::pointwise_pair_energy(rho, tol, j);
  }, py::arg("rho"), py::arg("tol") = kDefaultQuadratureTol, py::arg("j") = py::none());
  m.def("trace_gamma", [](double n, const std::vector<double>& phi, double r_max, double stretch, double tol) {
    return trialstate::trace_gamma(trialstate::condensate_from_minimizer(n, profile_from(phi, r_max, stretch)), tol);
  }, py::arg("n"), py::arg("phi"), py::arg("r_max") = 100.0, py::arg("stretch") = 4.0,
     py::arg("tol") = kDefaultQuadratureTol);
  m.def("upper_bound_energy", [](double n, const std::vector<double>& phi, double r_max, double stretch) {
    return trialstate::upper_bound_energy(n, profile_from(phi, r_max, stretch));
  }, py::arg("n"), py::arg("phi"), py::arg("r_max") = 100.0, py::arg("stretch") = 4.0);
  m.def("berezin_lieb_check", [](const Eigen::MatrixXd& vectors, const Eigen::VectorXd& weights,
                                 const std::vector<double>& f, const Eigen::MatrixXd& y, const std::string& xi) {
    return to_dict(trialstate::berezin_lieb_check(trialstate::CoherentFrame(vectors, weights), f, y,
                                                  trialstate::concave_function_from_name(xi)));
  }, py::arg("vectors"), py::arg("weights"), py::arg("f"), py::arg("y"), py::arg("xi"));
  m.def("random_frame", [](int d, int count, std::uint64_t seed) {
    Engine rng(seed);
    const auto frame = trialstate::CoherentFrame::random(d, count, rng);
    return py::make_tuple(frame.vectors(), frame.weights());
  }, py::arg("dimension"), py::arg("count"), py::arg("seed") = 0);

  // matrixloc
  m.def("localize", [](const matrixloc::Matrix& a, const matrixloc::Vector& psi, int window, double c) {
    const auto r = matrixloc::localize({a, psi, window});
    const auto b = matrixloc::verify_budget(r, c);
    py::dict d;
    d["n"] = r.n;
    d["phi"] = r.phi;
    d["value"] = r.value;
    d["lambda"] = r.lambda;
    d["d"] = r.d;
    d["budget"] = r.budget(c);
    d["c_required"] = b.c_required;
    d["holds"] = b.report.holds;
    return d;
  }, py::arg("a"), py::arg("psi"), py::arg("M"), py::arg("C") = 50.0);

  // spectral
  m.def("ground_state_energy", [](const std::string& kind, double depth, double range,
                                  const std::vector<correlation::Vec3>& centers, std::size_t count, double r_max,
                                  std::size_t count_3d) {
    return spectral::ground_state_energy(potential(kind, depth, range, centers), discretization(count, r_max, 400, count_3d));
  }, py::arg("kind"), py::arg("depth"), py::arg("range"), py::arg("centers") = std::vector<correlation::Vec3>{},
     py::arg("count") = 3000, py::arg("r_max") = 0.0, py::arg("count_3d") = 15);
  m.def("negative_sum", [](const std::string& kind, double depth, double range, std::size_t count, double r_max,
                           int l_max) {
    const auto s = spectral::negative_sum(potential(kind, depth, range, {}), discretization(count, r_max, l_max, 15));
    py::dict d;
    py::list levels;
    for (const auto& level : s.levels) levels.append(py::make_tuple(level.l, level.degeneracy, level.energy));
    d["levels"] = levels;
    d["neg_sum"] = s.neg_sum;
    d["v_integral"] = s.v_integral;
    d["l_max"] = s.l_max;
    d["grid_spec"] = s.grid_spec;
    return d;
  }, py::arg("kind"), py::arg("depth"), py::arg("range"), py::arg("count") = 3000, py::arg("r_max") = 0.0,
     py::arg("l_max") = 400);
  m.def("semiclassical_ratio", &spectral::semiclassical_ratio);
  m.def("stability_bound", [](const std::vector<correlation::Vec3>& nuclei, const std::vector<double>& charges, int q,
                              double c_lt, int n_electrons, std::optional<double> r) {
    const auto b = spectral::stability_bound(nuclei, charges, q, c_lt, n_electrons, r);
    py::dict d;
    d["v_integral"] = b.v_integral;
    d["lt_term"] = b.lt_term;
    d["r_term"] = b.r_term;
    d["total"] = b.total;
    d["per_electron"] = b.per_electron;
    d["R"] = b.r;
    return d;
  }, py::arg("nuclei"), py::arg("charges"), py::arg("q"), py::arg("c_lt"), py::arg("n_electrons"),
     py::arg("R") = py::none());

  // runs
  m.def("run", [](const std::string& subcommand, const std::map<std::string, std::string>& params, std::uint64_t seed,
                  std::optional<std::filesystem::path> output) {
    suite::RunConfig config;
    config.subcommand = subcommand;
    config.params = params;
    config.seed = seed;
    config.output_dir = output;
    suite::RunOutcome outcome;
    {
      py::gil_scoped_release release;
      outcome = suite::run(config);
    }
    return py::make_tuple(outcome.exit_code, outcome.record.to_text(), outcome.message);
  }, py::arg("subcommand"), py::arg("params") = std::map<std::string, std::string>{},
     py::arg("seed") = suite::kDefaultSeed, py::arg("output") = py::none());
  m.def("subcommands", [] {
    std::vector<std::string> names;
    for (const auto& s : suite::schemas()) names.push_back(s.name);
    return names;
  });
}
