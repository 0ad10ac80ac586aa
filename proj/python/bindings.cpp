// Python face of the library: model construction, closed-form spectra,
// degeneracy geometry, response probes, and the table-producing runner.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jctriangle/config.hpp"
#include "jctriangle/dynamics.hpp"
#include "jctriangle/ep.hpp"
#include "jctriangle/errors.hpp"
#include "jctriangle/model.hpp"
#include "jctriangle/params.hpp"
#include "jctriangle/perturb.hpp"
#include "jctriangle/presets.hpp"
#include "jctriangle/runner.hpp"
#include "jctriangle/spectral.hpp"
#include "jctriangle/version.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_jctriangle, m) {
  m.doc() = "gain/loss photonic trimer: spectra, exceptional points, dynamics";
  m.attr("__version__") = jct::kVersion;

  py::register_exception<jct::OutOfReachError>(m, "OutOfReachError");
  py::register_exception<jct::DefectiveAtEpError>(m, "DefectiveAtEpError");
  py::register_exception<jct::ConfigError>(m, "ConfigError");

  py::class_<jct::ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def_readwrite("omega", &jct::ModelParams::omega)
      .def_readwrite("delta", &jct::ModelParams::delta)
      .def_readwrite("g1", &jct::ModelParams::g1)
      .def_readwrite("g2", &jct::ModelParams::g2)
      .def_readwrite("g3", &jct::ModelParams::g3)
      .def_readwrite("gamma", &jct::ModelParams::gamma)
      .def_readwrite("j1", &jct::ModelParams::j1)
      .def_readwrite("j2", &jct::ModelParams::j2)
      .def_readwrite("j3", &jct::ModelParams::j3)
      .def_readwrite("theta", &jct::ModelParams::theta)
      .def("__repr__", [](const jct::ModelParams& p) {
        std::ostringstream s;
        s << "ModelParams(";
        bool first = true;
        for (const auto& name : jct::param_names()) {
          if (!first) s << ", ";
          s << name << '=' << jct::get_param(p, name);
          first = false;
        }
        s << ')';
        return s.str();
      });
  m.def("validate", &jct::validate, py::arg("params"),
        "Check parameter ranges; returns advisory warnings, raises on hard errors.");

  m.def("renormalized_frequencies", &jct::renormalized_frequencies, py::arg("params"));
  m.def(
      "effective_matrix",
      [](const jct::ModelParams& p) { return jct::build_effective_matrix(p).entries; },
      py::arg("params"), "Dressed 3x3 ring matrix (gain/loss on sites 1/3).");
  m.def(
      "full_matrix",
      [](const jct::ModelParams& p) { return jct::build_full_single_excitation(p).entries; },
      py::arg("params"), "Single-excitation 6x6 photon+atom matrix.");

  py::class_<jct::CardanoInputs>(m, "CardanoInputs")
      .def_readonly("p", &jct::CardanoInputs::p)
      .def_readonly("q", &jct::CardanoInputs::q)
      .def_readonly("discriminant", &jct::CardanoInputs::discriminant)
      .def_readonly("shift", &jct::CardanoInputs::shift);
  m.def("cardano_pq", &jct::cardano_pq, py::arg("params"));
  m.def("cardano_eigenvalues", &jct::cardano_eigenvalues, py::arg("params"),
        "Closed-form eigenvalue triplet in the library's fixed label order.");

  py::class_<jct::Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &jct::Spectrum::eigenvalues)
      .def_readonly("right_vectors", &jct::Spectrum::right_vectors)
      .def_readonly("left_vectors", &jct::Spectrum::left_vectors)
      .def_readonly("norm_products", &jct::Spectrum::norm_products)
      .def_readonly("defectiveness", &jct::Spectrum::defectiveness)
      .def_readonly("max_residual", &jct::Spectrum::max_residual)
      .def_readonly("normalized", &jct::Spectrum::normalized);
  m.def("numeric_eigensystem", &jct::numeric_eigensystem, py::arg("matrix"));
  m.def("biorthogonalize", &jct::biorthogonalize, py::arg("spectrum"),
        py::arg("tol") = jct::kDefectivenessTol);
  m.def("eigensystem_cardano_ordered", &jct::eigensystem_cardano_ordered, py::arg("params"));

  py::class_<jct::EpClassification>(m, "EpClassification")
      .def_property_readonly(
          "kind", [](const jct::EpClassification& c) { return jct::to_string(c.kind); })
      .def_readonly("p_residual", &jct::EpClassification::p_residual)
      .def_readonly("q_residual", &jct::EpClassification::q_residual)
      .def_readonly("disc_residual", &jct::EpClassification::disc_residual);
  m.def("classify", &jct::classify, py::arg("params"), py::arg("tol") = jct::kClassifyTol);

  py::class_<jct::CriticalPoint>(m, "CriticalPoint")
      .def_readonly("theta", &jct::CriticalPoint::theta)
      .def_readonly("gamma", &jct::CriticalPoint::gamma)
      .def_readonly("cos3theta_arg", &jct::CriticalPoint::cos3theta_arg);
  m.def("gamma_2c", py::overload_cast<const jct::ModelParams&>(&jct::gamma_2c),
        py::arg("params"));
  m.def("gamma_2c", py::overload_cast<double, double, double>(&jct::gamma_2c), py::arg("j1"),
        py::arg("j3"), py::arg("theta"));
  m.def("critical_3el", py::overload_cast<const jct::ModelParams&>(&jct::critical_3el),
        py::arg("params"));
  m.def("critical_3el",
        py::overload_cast<double, double, double, double, double>(&jct::critical_3el),
        py::arg("g1"), py::arg("g2"), py::arg("delta"), py::arg("j1"), py::arg("j3"));
  m.def("critical_flux", &jct::critical_flux, py::arg("theta_c"), py::arg("n") = 0);

  m.def("fidelity", &jct::fidelity, py::arg("params"), py::arg("gamma"), py::arg("eps"),
        py::arg("pairing_tol") = 0.0,
        "Per-branch overlap survival under gamma -> gamma + eps.");

  py::class_<jct::TimeSeries>(m, "TimeSeries")
      .def_readonly("times", &jct::TimeSeries::times)
      .def_readonly("values", &jct::TimeSeries::values)
      .def_readonly("gamma_initial", &jct::TimeSeries::gamma_initial)
      .def_readonly("gamma_final", &jct::TimeSeries::gamma_final)
      .def_readonly("theta", &jct::TimeSeries::theta)
      .def_readonly("branch", &jct::TimeSeries::branch);
  m.def("loschmidt_echo", &jct::loschmidt_echo, py::arg("initial"), py::arg("quenched"),
        py::arg("branch"), py::arg("times"),
        "Mode-resolved echo of one pre-quench branch under the quenched matrix.");
  m.def("linear_times", &jct::linear_times, py::arg("t_max"), py::arg("n"));

  m.def("preset_names", &jct::preset_names);
  m.def(
      "run",
      [](const std::string& subcommand, const std::string& preset, const std::string& config,
         const std::string& out_dir, int threads) {
        jct::RunConfig cfg = jct::load_config(subcommand, preset, config);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (threads > 0) cfg.threads = threads;
        return jct::run(cfg).files_written;
      },
      py::arg("subcommand"), py::arg("preset") = std::string(),
      py::arg("config") = std::string(), py::arg("out_dir") = std::string(),
      py::arg("threads") = 0, "Produce the CSV/JSON tables of one subcommand run.");
}
