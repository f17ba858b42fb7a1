#include "povmcoh/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "povmcoh/bounds.hpp"
#include "povmcoh/error.hpp"
#include "povmcoh/harness.hpp"
#include "povmcoh/measures.hpp"
#include "povmcoh/povm_json.hpp"
#include "povmcoh/qstate.hpp"

namespace povmcoh {

namespace {

std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
  }
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> v;
  for (const auto& part : split(s, ',')) v.push_back(parse_real(part));
  return v;
}

/// "θ1,θ2" → single-qubit dilation, "γ1,γ2,γ3,γ4" → two-qubit dilation.
Povm povm_from_params(const std::string& params) {
  const auto v = parse_reals(params);
  if (v.size() == 2) return povm_from_dilation(dilation_unitary_1q({v[0], v[1]}), 1, 1);
  if (v.size() == 4) return povm_from_dilation(dilation_unitary_2q({v[0], v[1], v[2], v[3]}), 2, 2);
  throw Error(ErrorCode::ParseError, "--params takes 2 (one qubit) or 4 (two qubits) angles");
}

/// computational:D | dilation:ANGLES | path to a POVM JSON file.
Povm povm_from_spec(const std::string& spec) {
  if (spec.rfind("computational:", 0) == 0) {
    const double d = parse_real(spec.substr(14));
    if (d < 1 || d != static_cast<double>(static_cast<long>(d))) {
      throw Error(ErrorCode::ParseError, "computational:D needs a positive integer");
    }
    return Povm::computational(static_cast<Eigen::Index>(d));
  }
  if (spec.rfind("dilation:", 0) == 0) return povm_from_params(spec.substr(9));
  return read_povm_file(spec);
}

/// ry:ANGLE for Ry(angle)|0>, otherwise a comma list of amplitudes "re" or
/// "re:im", normalized on input.
PureState state_from_spec(const std::string& spec) {
  if (spec.rfind("ry:", 0) == 0) {
    return PureState(ry(parse_real(spec.substr(3))) * PureState::basis(2, 0).amplitudes());
  }
  const auto parts = split(spec, ',');
  CVector v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto re_im = split(parts[k], ':');
    if (re_im.empty() || re_im.size() > 2) throw Error(ErrorCode::ParseError, "bad amplitude '" + parts[k] + "'");
    const double re = parse_real(re_im[0]);
    const double im = re_im.size() == 2 ? parse_real(re_im[1]) : 0.0;
    v[static_cast<Eigen::Index>(k)] = Complex(re, im);
  }
  return PureState::normalize(v);
}

void print_report(const ValidationReport& r, const Povm& p, std::ostream& out) {
  double margin = 0.0;
  if (!r.psd_margin.empty()) margin = *std::min_element(r.psd_margin.begin(), r.psd_margin.end());
  out << "effects " << p.size() << "\n"
      << "dim " << p.dim() << "\n"
      << "completeness_residual " << g12(r.completeness_residual) << "\n"
      << "min_psd_margin " << g12(margin) << "\n"
      << (r.passed ? "PASS" : "FAIL") << "\n";
  if (!r.passed && !r.message.empty()) out << r.message << "\n";
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"POVM-based coherence measures and superposition bounds", "povmcoh"};
  app.require_subcommand(1);

  auto* povm_cmd = app.add_subcommand("povm", "Build and check dilation POVMs");
  povm_cmd->require_subcommand(1);
  std::string params;
  std::string povm_file;
  std::string export_out;
  auto* validate_cmd = povm_cmd->add_subcommand("validate", "Print PSD margins and completeness residual");
  auto* params_opt = validate_cmd->add_option("--params", params, "θ1,θ2 or γ1,γ2,γ3,γ4");
  auto* file_opt = validate_cmd->add_option("--povm", povm_file, "POVM JSON file");
  params_opt->excludes(file_opt);
  auto* export_cmd = povm_cmd->add_subcommand("export", "Write a dilation POVM as JSON");
  export_cmd->add_option("--params", params, "θ1,θ2 or γ1,γ2,γ3,γ4")->required();
  export_cmd->add_option("--out", export_out, "output JSON path")->required();

  auto* measure_cmd = app.add_subcommand("measure", "Evaluate a coherence measure on a pure state");
  std::string state_spec;
  std::string povm_spec;
  std::string measure_name;
  std::optional<double> lambda;
  measure_cmd->add_option("--state", state_spec, "ry:ANGLE or amplitudes re[:im],...")->required();
  measure_cmd->add_option("--povm", povm_spec, "computational:D | dilation:ANGLES | FILE.json")->required();
  measure_cmd->add_option("--measure", measure_name, "r | l1 | rob | tsallis")
      ->required()
      ->check(CLI::IsMember({"r", "l1", "rob", "tsallis"}));
  measure_cmd->add_option("--lambda", lambda, "Tsallis parameter in (0,1) U (1,2]");

  auto* bounds_cmd = app.add_subcommand("bounds", "Exact value and bounds for one coefficient pair");
  std::string experiment_name;
  double alpha = 0.0;
  double beta = 0.0;
  bounds_cmd->add_option("--experiment", experiment_name, "l1-1q | relent-2q | tsallis-2q")->required();
  bounds_cmd->add_option("--alpha", alpha, "coefficient of the first state")->required();
  bounds_cmd->add_option("--beta", beta, "coefficient of the second state")->required();
  bounds_cmd->add_option("--lambda", lambda, "Tsallis parameter");

  auto* experiment_cmd = app.add_subcommand("experiment", "Seeded randomized bound verification");
  int trials = 10;
  std::uint64_t seed = 0;
  std::string scheme_name = "uniform01";
  unsigned threads = 1;
  std::string csv_out;
  experiment_cmd->add_option("--experiment", experiment_name, "l1-1q | relent-2q | tsallis-2q")->required();
  experiment_cmd->add_option("--trials", trials, "number of trials")->capture_default_str();
  experiment_cmd->add_option("--seed", seed, "64-bit seed")->required();
  experiment_cmd->add_option("--lambda", lambda, "Tsallis parameter (default 1.5)");
  experiment_cmd->add_option("--scheme", scheme_name, "uniform01 | uniform01-rescaled | uniform01-phase")
      ->capture_default_str();
  experiment_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();
  experiment_cmd->add_option("--out", csv_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) {
      if (params.empty() && povm_file.empty()) {
        err << "povm validate: one of --params or --povm is required\n";
        return kExitUsage;
      }
      const Povm p = params.empty() ? read_povm_file(povm_file) : povm_from_params(params);
      const auto report = validate_povm(p);
      print_report(report, p, out);
      return report.passed ? kExitOk : kExitValidation;
    }
    if (*export_cmd) {
      write_povm_file(povm_from_params(params), export_out);
      return kExitOk;
    }
    if (*measure_cmd) {
      const PureState phi = state_from_spec(state_spec);
      const Povm p = povm_from_spec(povm_spec);
      const auto report = validate_povm(p);
      if (!report.passed) {
        err << "invalid POVM: " << report.message << "\n";
        return kExitValidation;
      }
      double value = 0.0;
      if (measure_name == "r") {
        value = c_r_pure(phi, p);
      } else if (measure_name == "l1") {
        value = c_l1_pure(phi, p);
      } else if (measure_name == "rob") {
        value = c_rob_pure(phi, p);
      } else {
        if (!lambda) {
          err << "measure tsallis requires --lambda\n";
          return kExitUsage;
        }
        value = c_tsallis_pure(phi, p, *lambda);
      }
      out << measure_name << " " << g12(value) << "\n";
      return kExitOk;
    }
    if (*bounds_cmd) {
      ExperimentConfig cfg;
      cfg.experiment = parse_experiment(experiment_name);
      cfg.lambda = lambda;
      if (alpha < 0.0 || beta < 0.0) throw Error(ErrorCode::ConfigError, "--alpha/--beta must be nonnegative");
      const BoundRecord rec = evaluate_trial(cfg, 0, Coefficients{alpha, beta, 0.0, 0.0});
      out << "experiment " << rec.experiment << "\n"
          << "norm_sq " << g12(rec.norm_sq) << "\n"
          << "exact " << g12(rec.exact) << "\n"
          << "upper " << (rec.upper ? g12(*rec.upper) : "n/a") << "\n"
          << "lower " << (rec.lower ? g12(*rec.lower) : "n/a") << "\n"
          << "violation " << (rec.violation ? 1 : 0) << "\n";
      return rec.violation ? kExitValidation : kExitOk;
    }
    if (*experiment_cmd) {
      ExperimentConfig cfg;
      cfg.experiment = parse_experiment(experiment_name);
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.lambda = lambda;
      cfg.scheme = parse_scheme(scheme_name);
      cfg.threads = threads;
      cfg.out = csv_out;
      const auto records = run_experiment(cfg);
      emit_csv(records, cfg.out);
      int violations = 0;
      int upper_ok = 0;
      for (const auto& r : records) {
        violations += r.violation ? 1 : 0;
        upper_ok += r.upper_applicable() ? 1 : 0;
      }
      out << "trials " << records.size() << "\n"
          << "upper_applicable " << upper_ok << "\n"
          << "violations " << violations << "\n"
          << "wrote " << cfg.out.string() << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace povmcoh
