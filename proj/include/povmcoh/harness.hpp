#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace povmcoh {

enum class Experiment {
  L1Qubit,            // "l1-1q": l1 coherence, single-qubit POVM
  RelEntTwoQubit,     // "relent-2q": relative entropy, two-qubit POVM
  TsallisTwoQubit,    // "tsallis-2q": Tsallis, two-qubit POVM
};

enum class CoefficientScheme {
  Uniform01,          // α, β ~ U(0,1), untouched
  Uniform01Rescaled,  // divided by α+β when α+β > 1
  Uniform01Phase,     // |α|, |β| ~ U(0,1) with independent uniform phases
};

std::string_view to_string(Experiment e);
std::string_view to_string(CoefficientScheme s);
Experiment parse_experiment(std::string_view s);
CoefficientScheme parse_scheme(std::string_view s);

inline constexpr double kDefaultTsallisLambda = 1.5;
inline constexpr double kSandwichTol = 1e-9;

struct ExperimentConfig {
  Experiment experiment = Experiment::L1Qubit;
  int trials = 10;
  std::uint64_t seed = 0;
  std::optional<double> lambda;  // tsallis only; defaults to kDefaultTsallisLambda
  CoefficientScheme scheme = CoefficientScheme::Uniform01;
  std::filesystem::path out;
  unsigned threads = 1;
};

/// Throws ConfigError.
void validate(const ExperimentConfig& cfg);

struct BoundRecord {
  std::string experiment;
  int trial = 0;
  std::uint64_t seed = 0;
  double alpha = 0.0;  // |α|
  double beta = 0.0;   // |β|
  double norm_sq = 0.0;
  double exact = 0.0;
  std::optional<double> upper;
  std::optional<double> lower;
  bool violation = false;
  double imag_discarded_max = 0.0;

  bool upper_applicable() const { return upper.has_value(); }
  bool lower_applicable() const { return lower.has_value(); }
};

/// Per-trial generator seed; trials are independent streams.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

struct Coefficients {
  double alpha_mod = 0.0;
  double beta_mod = 0.0;
  double alpha_phase = 0.0;
  double beta_phase = 0.0;
};

Coefficients draw_coefficients(std::uint64_t seed, int trial, CoefficientScheme scheme);

/// One trial of the configured experiment at the given coefficients.
BoundRecord evaluate_trial(const ExperimentConfig& cfg, int trial, const Coefficients& coeffs);

/// Records sorted by trial index. Deterministic in (experiment, trials, seed,
/// lambda, scheme) regardless of cfg.threads.
std::vector<BoundRecord> run_experiment(const ExperimentConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "experiment,trial,seed,alpha,beta,norm_sq,exact,upper,lower,upper_applicable,lower_applicable,violation,"
    "imag_discarded_max";

/// Not-applicable bounds are written as empty fields; flags as 0/1.
void write_csv(std::span<const BoundRecord> records, std::ostream& out);
void emit_csv(std::span<const BoundRecord> records, const std::filesystem::path& path);

}  // namespace povmcoh
