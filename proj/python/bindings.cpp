#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "povmcoh/bounds.hpp"
#include "povmcoh/cli.hpp"
#include "povmcoh/configs.hpp"
#include "povmcoh/error.hpp"
#include "povmcoh/harness.hpp"
#include "povmcoh/measures.hpp"
#include "povmcoh/povm_json.hpp"
#include "povmcoh/qstate.hpp"

namespace py = pybind11;
using namespace povmcoh;

namespace {

PureState as_state(const CVector& v) { return PureState::normalize(v); }

SuperpositionSpec as_spec(const std::vector<Complex>& coeffs, const std::vector<CVector>& states) {
  std::vector<PureState> s;
  s.reserve(states.size());
  for (const auto& v : states) s.push_back(as_state(v));
  return superpose(coeffs, s);
}

py::object optional_value(const BoundResult& r) { return r.value ? py::cast(*r.value) : py::none(); }

py::dict bound_dict(const BoundResult& r) {
  py::dict d;
  d["value"] = optional_value(r);
  d["status"] = std::string(to_string(r.status));
  d["roots"] = r.roots;
  d["pair_constants"] = r.pair_constants;
  d["imag_discarded"] = r.imag_discarded;
  return d;
}

Povm dilation_povm(const std::vector<double>& angles) {
  if (angles.size() == 2) return povm_from_dilation(dilation_unitary_1q({angles[0], angles[1]}), 1, 1);
  if (angles.size() == 4) {
    return povm_from_dilation(dilation_unitary_2q({angles[0], angles[1], angles[2], angles[3]}), 2, 2);
  }
  throw Error(ErrorCode::ConfigError, "dilation angles: 2 for one qubit, 4 for two qubits");
}

TraceConvention parse_convention(const std::string& s) {
  if (s == "real") return TraceConvention::RealPart;
  if (s == "modulus") return TraceConvention::Modulus;
  throw Error(ErrorCode::ConfigError, "convention must be 'real' or 'modulus'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "POVM-based coherence measures and superposition bounds";

  static py::exception<Error> error_type(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  py::class_<Povm>(m, "Povm")
      .def(py::init<Eigen::Index, std::vector<CMatrix>>(), py::arg("dim"), py::arg("effects"))
      .def_static("computational", &Povm::computational, py::arg("dim"))
      .def_property_readonly("dim", &Povm::dim)
      .def_property_readonly("effects", &Povm::effects)
      .def("__len__", &Povm::size)
      .def("validate", [](const Povm& p) {
        const auto r = validate_povm(p);
        py::dict d;
        d["psd_margin"] = r.psd_margin;
        d["completeness_residual"] = r.completeness_residual;
        d["passed"] = r.passed;
        d["message"] = r.message;
        return d;
      })
      .def("to_json", [](const Povm& p) { return povm_to_json(p).dump(); })
      .def_static("from_json", [](const std::string& s) { return povm_from_json(nlohmann::json::parse(s)); });

  m.def("dilation_povm", &dilation_povm, py::arg("angles"));
  m.def("qubit_povm", &configs::qubit_povm);
  m.def("two_qubit_povm", &configs::two_qubit_povm);
  m.def("naimark_outcome_prob",
        [](const CMatrix& u, const CMatrix& rho, Eigen::Index i) {
          return naimark_outcome_prob(u, DensityMatrix(rho), i);
        },
        py::arg("unitary"), py::arg("rho"), py::arg("outcome"));

  m.def("qubit_phi", [] { return configs::qubit_phi().amplitudes(); });
  m.def("qubit_psi", [] { return configs::qubit_psi().amplitudes(); });
  m.def("two_qubit_phi1", [] { return configs::two_qubit_phi1().amplitudes(); });
  m.def("two_qubit_psi1", [] { return configs::two_qubit_psi1().amplitudes(); });
  m.def("two_qubit_psi2", [] { return configs::two_qubit_psi2().amplitudes(); });

  // Measures: a vector is a pure state, a matrix a density matrix.
  m.def("c_r", [](const CVector& v, const Povm& e) { return c_r_pure(as_state(v), e); }, py::arg("state"), py::arg("povm"));
  m.def("c_r", [](const CMatrix& rho, const Povm& e) { return c_r(DensityMatrix(rho), e); });
  m.def("c_l1", [](const CVector& v, const Povm& e) { return c_l1_pure(as_state(v), e); }, py::arg("state"), py::arg("povm"));
  m.def("c_l1", [](const CMatrix& rho, const Povm& e) { return c_l1(DensityMatrix(rho), e); });
  m.def("c_rob", [](const CVector& v, const Povm& e) { return c_rob_pure(as_state(v), e); }, py::arg("state"), py::arg("povm"));
  m.def("c_tsallis", [](const CVector& v, const Povm& e, double lam) { return c_tsallis_pure(as_state(v), e, lam); },
        py::arg("state"), py::arg("povm"), py::arg("lam"));
  m.def("c_tsallis", [](const CMatrix& rho, const Povm& e, double lam) { return c_tsallis(DensityMatrix(rho), e, lam); });

  m.def("solve_theta_constraint", &solve_theta_constraint, py::arg("a"), py::arg("b"));
  m.def("eq13_identity_check", &eq13_identity_check, py::arg("a"), py::arg("b"), py::arg("root"));
  m.def("thm1_upper",
        [](const std::vector<Complex>& c, const std::vector<CVector>& s, const Povm& e) {
          return bound_dict(thm1_upper(as_spec(c, s), e));
        },
        py::arg("coefficients"), py::arg("states"), py::arg("povm"));
  m.def("thm1_lower",
        [](const std::vector<Complex>& c, const std::vector<CVector>& s, const Povm& e) {
          return bound_dict(thm1_lower(as_spec(c, s), e));
        },
        py::arg("coefficients"), py::arg("states"), py::arg("povm"));
  m.def("thm2_bounds",
        [](const std::vector<Complex>& c, const std::vector<CVector>& s, const Povm& e) {
          const auto r = thm2_bounds(as_spec(c, s), e);
          return py::make_tuple(r.lower, r.upper);
        },
        py::arg("coefficients"), py::arg("states"), py::arg("povm"));
  m.def("thm3_upper",
        [](const std::vector<Complex>& c, const std::vector<CVector>& s, const Povm& e, double lam) {
          return bound_dict(thm3_upper(as_spec(c, s), e, lam));
        },
        py::arg("coefficients"), py::arg("states"), py::arg("povm"), py::arg("lam"));
  m.def("thm3_lower",
        [](const std::vector<Complex>& c, const std::vector<CVector>& s, const Povm& e, double lam,
           const std::string& conv) { return bound_dict(thm3_lower(as_spec(c, s), e, lam, parse_convention(conv))); },
        py::arg("coefficients"), py::arg("states"), py::arg("povm"), py::arg("lam"), py::arg("convention") = "real");
  m.def("lemma1_bound", [](const CMatrix& rho, const Povm& e, double lam) { return lemma1_bound(DensityMatrix(rho), e, lam); },
        py::arg("rho"), py::arg("povm"), py::arg("lam"));

  py::class_<BoundRecord>(m, "BoundRecord")
      .def_readonly("experiment", &BoundRecord::experiment)
      .def_readonly("trial", &BoundRecord::trial)
      .def_readonly("seed", &BoundRecord::seed)
      .def_readonly("alpha", &BoundRecord::alpha)
      .def_readonly("beta", &BoundRecord::beta)
      .def_readonly("norm_sq", &BoundRecord::norm_sq)
      .def_readonly("exact", &BoundRecord::exact)
      .def_readonly("upper", &BoundRecord::upper)
      .def_readonly("lower", &BoundRecord::lower)
      .def_readonly("violation", &BoundRecord::violation)
      .def_readonly("imag_discarded_max", &BoundRecord::imag_discarded_max);

  m.def("run_experiment",
        [](const std::string& experiment, int trials, std::uint64_t seed, std::optional<double> lam,
           const std::string& scheme, unsigned threads) {
          ExperimentConfig cfg;
          cfg.experiment = parse_experiment(experiment);
          cfg.trials = trials;
          cfg.seed = seed;
          cfg.lambda = lam;
          cfg.scheme = parse_scheme(scheme);
          cfg.threads = threads;
          py::gil_scoped_release release;
          return run_experiment(cfg);
        },
        py::arg("experiment"), py::arg("trials") = 10, py::arg("seed") = 0, py::arg("lam") = py::none(),
        py::arg("scheme") = "uniform01", py::arg("threads") = 1);
  m.def("to_csv", [](const std::vector<BoundRecord>& r) {
    std::ostringstream os;
    write_csv(r, os);
    return os.str();
  });
  m.def("emit_csv", [](const std::vector<BoundRecord>& r, const std::string& path) { emit_csv(r, path); },
        py::arg("records"), py::arg("path"));
  m.attr("CSV_HEADER") = std::string(kCsvHeader);

  m.def("cli_main", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"povmcoh"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
