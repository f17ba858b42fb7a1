#include "povmcoh/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <thread>

#include "povmcoh/bounds.hpp"
#include "povmcoh/configs.hpp"
#include "povmcoh/error.hpp"
#include "povmcoh/measures.hpp"

namespace povmcoh {

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::L1Qubit: return "l1-1q";
    case Experiment::RelEntTwoQubit: return "relent-2q";
    case Experiment::TsallisTwoQubit: return "tsallis-2q";
  }
  return "unknown";
}

std::string_view to_string(CoefficientScheme s) {
  switch (s) {
    case CoefficientScheme::Uniform01: return "uniform01";
    case CoefficientScheme::Uniform01Rescaled: return "uniform01-rescaled";
    case CoefficientScheme::Uniform01Phase: return "uniform01-phase";
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view s) {
  for (auto e : {Experiment::L1Qubit, Experiment::RelEntTwoQubit, Experiment::TsallisTwoQubit}) {
    if (to_string(e) == s) return e;
  }
  throw Error(ErrorCode::ConfigError, "unknown experiment '" + std::string(s) + "'");
}

CoefficientScheme parse_scheme(std::string_view s) {
  for (auto c : {CoefficientScheme::Uniform01, CoefficientScheme::Uniform01Rescaled, CoefficientScheme::Uniform01Phase}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::ConfigError, "unknown coefficient scheme '" + std::string(s) + "'");
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::ConfigError, "trials must be >= 1");
  if (cfg.threads < 1) throw Error(ErrorCode::ConfigError, "threads must be >= 1");
  if (cfg.experiment == Experiment::TsallisTwoQubit) {
    check_tsallis_lambda(cfg.lambda.value_or(kDefaultTsallisLambda));
  } else if (cfg.lambda) {
    throw Error(ErrorCode::ConfigError, "lambda only applies to the tsallis-2q experiment");
  }
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  // splitmix64 finalizer over (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Uniform on the open interval (0,1) from the top 53 bits; mt19937_64 output is
// fixed by the standard, so the stream is portable.
double open_unit(std::mt19937_64& gen) {
  for (;;) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u > 0.0) return u;
  }
}

struct Setup {
  Povm povm;
  PureState phi;
  PureState psi;
  double lambda = 0.0;
};

Setup make_setup(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::L1Qubit:
      return {configs::qubit_povm(), configs::qubit_phi(), configs::qubit_psi(), 0.0};
    case Experiment::RelEntTwoQubit:
      return {configs::two_qubit_povm(), configs::two_qubit_phi1(), configs::two_qubit_psi1(), 0.0};
    case Experiment::TsallisTwoQubit:
      return {configs::two_qubit_povm(), configs::two_qubit_phi1(), configs::two_qubit_psi2(),
              cfg.lambda.value_or(kDefaultTsallisLambda)};
  }
  throw Error(ErrorCode::ConfigError, "unknown experiment");
}

BoundRecord evaluate(const ExperimentConfig& cfg, const Setup& setup, int trial, const Coefficients& c) {
  BoundRecord rec;
  rec.experiment = std::string(to_string(cfg.experiment));
  rec.trial = trial;
  rec.seed = cfg.seed;
  rec.alpha = c.alpha_mod;
  rec.beta = c.beta_mod;

  const std::array<Complex, 2> coeffs{std::polar(c.alpha_mod, c.alpha_phase), std::polar(c.beta_mod, c.beta_phase)};
  const std::array<PureState, 2> states{setup.phi, setup.psi};
  const SuperpositionSpec spec = superpose(coeffs, states);
  const PureState omega = spec.normalized_state();
  rec.norm_sq = spec.norm_sq();

  switch (cfg.experiment) {
    case Experiment::L1Qubit: {
      rec.exact = c_l1_pure(omega, setup.povm);
      const auto b = thm2_bounds(spec, setup.povm);
      rec.upper = b.upper;
      rec.lower = b.lower;
      break;
    }
    case Experiment::RelEntTwoQubit: {
      rec.exact = c_r_pure(omega, setup.povm);
      rec.upper = thm1_upper(spec, setup.povm).value;
      rec.lower = thm1_lower(spec, setup.povm).value;
      break;
    }
    case Experiment::TsallisTwoQubit: {
      rec.exact = c_tsallis_pure(omega, setup.povm, setup.lambda);
      const auto up = thm3_upper(spec, setup.povm, setup.lambda);
      rec.upper = up.value;
      rec.imag_discarded_max = up.imag_discarded;
      if (setup.lambda > 1.0) {
        const auto lo = thm3_lower(spec, setup.povm, setup.lambda);
        rec.lower = lo.value;
        rec.imag_discarded_max = std::max(rec.imag_discarded_max, lo.imag_discarded);
      }
      break;
    }
  }
  rec.violation = (rec.upper && rec.exact > *rec.upper + kSandwichTol) ||
                  (rec.lower && rec.exact < *rec.lower - kSandwichTol);
  return rec;
}

}  // namespace

Coefficients draw_coefficients(std::uint64_t seed, int trial, CoefficientScheme scheme) {
  std::mt19937_64 gen(trial_seed(seed, trial));
  Coefficients c;
  c.alpha_mod = open_unit(gen);
  c.beta_mod = open_unit(gen);
  switch (scheme) {
    case CoefficientScheme::Uniform01:
      break;
    case CoefficientScheme::Uniform01Rescaled: {
      // √|α|² + √|β|² <= 1 is the condition for a constraint root.
      const double s = c.alpha_mod + c.beta_mod;
      if (s > 1.0) {
        c.alpha_mod /= s;
        c.beta_mod /= s;
      }
      break;
    }
    case CoefficientScheme::Uniform01Phase:
      c.alpha_phase = 2.0 * std::numbers::pi * open_unit(gen);
      c.beta_phase = 2.0 * std::numbers::pi * open_unit(gen);
      break;
  }
  return c;
}

BoundRecord evaluate_trial(const ExperimentConfig& cfg, int trial, const Coefficients& coeffs) {
  validate(cfg);
  return evaluate(cfg, make_setup(cfg), trial, coeffs);
}

std::vector<BoundRecord> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const Setup setup = make_setup(cfg);
  std::vector<BoundRecord> records(static_cast<std::size_t>(cfg.trials));
  auto run_range = [&](unsigned worker, unsigned stride) {
    for (int t = static_cast<int>(worker); t < cfg.trials; t += static_cast<int>(stride)) {
      records[static_cast<std::size_t>(t)] = evaluate(cfg, setup, t, draw_coefficients(cfg.seed, t, cfg.scheme));
    }
  };
  const unsigned workers = std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials));
  if (workers <= 1) {
    run_range(0, 1);
    return records;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        run_range(w, workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt_real(*v) : std::string(); }

}  // namespace

void write_csv(std::span<const BoundRecord> records, std::ostream& out) {
  out << kCsvHeader << '\n';
  std::vector<const BoundRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->trial < b->trial; });
  for (const auto* r : sorted) {
    out << r->experiment << ',' << r->trial << ',' << r->seed << ',' << fmt_real(r->alpha) << ','
        << fmt_real(r->beta) << ',' << fmt_real(r->norm_sq) << ',' << fmt_real(r->exact) << ','
        << fmt_opt(r->upper) << ',' << fmt_opt(r->lower) << ',' << (r->upper_applicable() ? 1 : 0) << ','
        << (r->lower_applicable() ? 1 : 0) << ',' << (r->violation ? 1 : 0) << ','
        << fmt_real(r->imag_discarded_max) << '\n';
  }
}

void emit_csv(std::span<const BoundRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  write_csv(records, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace povmcoh
