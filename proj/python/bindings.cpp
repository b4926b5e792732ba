#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "multiphase/bounds.hpp"
#include "multiphase/channel.hpp"
#include "multiphase/errors.hpp"
#include "multiphase/hilbert.hpp"
#include "multiphase/information.hpp"
#include "multiphase/optimizer.hpp"
#include "multiphase/probes.hpp"
#include "multiphase/quadrature.hpp"

namespace py = pybind11;
using namespace multiphase;

namespace {

std::vector<std::vector<int>> basis_list(int k, int n) {
  const BasisCatalog basis(k, n);
  std::vector<std::vector<int>> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace_back(basis[i].begin(), basis[i].end());
  return out;
}

py::tuple as_tuple(const QuadratureResult& r) {
  return py::make_tuple(r.value, r.abs_error_estimate, r.evaluations);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = "0.1.0";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<CapacityError>(m, "CapacityError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", error.ptr());
  static py::exception<BudgetExceeded> budget(m, "BudgetExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      // The partial (value, error, evaluations) rides along as the second argument.
      py::object type = py::reinterpret_borrow<py::object>(budget.ptr());
      py::object exc = type(py::str(e.what()), as_tuple(e.partial()));
      PyErr_SetObject(budget.ptr(), exc.ptr());
    }
  });

  m.def("dimension", &dimension, py::arg("k"), py::arg("n"));
  m.def("basis", &basis_list, py::arg("k"), py::arg("n"),
        "Occupations (n_1, ..., n_k) in amplitude order.");

  py::class_<ProbeState>(m, "Probe")
      .def(py::init([](int k, int n, std::vector<Amplitude> amps) {
             return ProbeState::normalized(k, n, std::move(amps));
           }),
           py::arg("k"), py::arg("n"), py::arg("amplitudes"), "Normalizes the amplitudes.")
      .def_property_readonly("k", &ProbeState::k)
      .def_property_readonly("n", &ProbeState::n)
      .def_property_readonly("family", [](const ProbeState& p) { return std::string(to_string(p.family())); })
      .def_property_readonly("amplitudes", [](const ProbeState& p) {
        return std::vector<Amplitude>(p.amplitudes().begin(), p.amplitudes().end());
      })
      .def("__len__", &ProbeState::size);

  m.def("equatorial_product", &equatorial_product, py::arg("k"), py::arg("n"));
  m.def("holland_burnett", &holland_burnett, py::arg("k"), py::arg("n"));

  m.def(
      "density",
      [](const ProbeState& p, std::vector<double> gamma) { return density(p, gamma); },
      py::arg("probe"), py::arg("gamma"));
  m.def("fejer_density", &fejer_density, py::arg("n"), py::arg("gamma"));
  m.def("double_hb_density", &double_hb_density, py::arg("n"), py::arg("dphi"), py::arg("dtheta"));
  m.def(
      "discrete_distribution",
      [](const ProbeState& p, std::vector<double> phi) { return discrete_distribution(p, phi); },
      py::arg("probe"), py::arg("phi"));

  m.def(
      "mutual_information",
      [](const ProbeState& p, double tol, std::size_t budget, const std::string& method) {
        MiOptions o;
        o.tol = tol;
        o.budget = budget;
        if (method == "adaptive") {
          o.method = MiMethod::adaptive;
        } else if (method == "spectral") {
          o.method = MiMethod::spectral;
        } else if (method != "automatic") {
          throw DomainError("method must be automatic, adaptive or spectral");
        }
        return as_tuple(mutual_information(p, o));
      },
      py::arg("probe"), py::arg("tol") = 1e-8, py::arg("budget") = 0, py::arg("method") = "automatic",
      "Returns (bits, error estimate, evaluations).");
  m.def(
      "mutual_information_discrete",
      [](const ProbeState& p, double tol, std::size_t budget) {
        return as_tuple(mutual_information_discrete(p, tol, budget));
      },
      py::arg("probe"), py::arg("tol") = 1e-8, py::arg("budget") = 0);
  m.def(
      "bayes_cost",
      [](const ProbeState& p, const std::string& cost, const std::string& mode, double tol) {
        CostFunction f = CostFunction::holevo_sine();
        if (cost == "surprise") {
          f = CostFunction::surprise();
        } else if (cost != "holevo-sine") {
          throw DomainError("cost must be holevo-sine or surprise");
        }
        if (mode != "continuous" && mode != "discrete") throw DomainError("mode must be continuous or discrete");
        const auto m = mode == "continuous" ? EstimatorMode::continuous : EstimatorMode::discrete;
        return as_tuple(bayes_cost(p, f, m, tol));
      },
      py::arg("probe"), py::arg("cost") = "holevo-sine", py::arg("mode") = "continuous",
      py::arg("tol") = 1e-10);

  m.def("sql", &sql, py::arg("n"));
  m.def("hb", &hb, py::arg("n"));
  m.def("hb_k", &hb_k, py::arg("k"), py::arg("n"));
  m.def(
      "regime_asymptote",
      [](int k, int n) {
        const RegimeAsymptote r = regime_asymptote(k, n);
        return py::make_tuple(std::string(to_string(r.regime)), r.per_phase_bits, r.asymptotic);
      },
      py::arg("k"), py::arg("n"));
  m.def(
      "multiphase_advantage",
      [](long long k) {
        const Advantage a = multiphase_advantage(k);
        return py::make_tuple(a.total_bits, a.per_phase_bits);
      },
      py::arg("k"));
  m.def(
      "asymptotic_offset",
      [](const std::string& strategy, int k) {
        if (strategy != "parallel" && strategy != "sequential") {
          throw DomainError("strategy must be parallel or sequential");
        }
        const auto o = asymptotic_offset(strategy == "parallel" ? Strategy::parallel : Strategy::sequential, k);
        return py::make_tuple(o.bits, o.provenance == Provenance::closed_form ? "closed_form" : "numeric");
      },
      py::arg("strategy"), py::arg("k"));

  m.def(
      "geometric_entanglement",
      [](const ProbeState& p, double tol) {
        const EntanglementResult r = geometric_entanglement(p, tol);
        return py::make_tuple(r.eg, r.argmax_probs);
      },
      py::arg("probe"), py::arg("tol") = 1e-13);
  m.def(
      "eg_asymptotic",
      [](int k, int n) {
        const AsymptoticValue a = eg_asymptotic(k, n);
        return py::make_tuple(a.value, a.in_regime);
      },
      py::arg("k"), py::arg("n"));

  m.def(
      "optimize_probe",
      [](int k, int n, double tol, int starts, std::uint64_t seed) {
        const OptimizationRun r = optimize_probe(k, n, tol, starts, seed);
        py::dict d;
        d["probe"] = r.best_probe;
        d["best_mi"] = r.best_mi;
        d["product_mi"] = r.product_mi;
        d["hb_mi"] = r.hb_mi;
        d["iterations"] = r.iterations;
        d["converged"] = r.converged;
        return d;
      },
      py::arg("k"), py::arg("n"), py::arg("tol") = 1e-7, py::arg("starts") = 4, py::arg("seed") = 0);
  m.def(
      "crossover",
      [](int k, int n_max, double tol) {
        const CrossoverResult r = crossover(k, n_max, tol);
        py::list sweep;
        for (const CrossoverPoint& p : r.sweep) sweep.append(py::make_tuple(p.n, p.product_mi, p.hb_mi));
        return py::make_tuple(r.n_star ? py::int_(*r.n_star) : py::object(py::none()), r.stable, sweep);
      },
      py::arg("k"), py::arg("n_max"), py::arg("tol") = 1e-7,
      "Returns (N*, stable, [(N, product bits, uniform bits), ...]).");
}
