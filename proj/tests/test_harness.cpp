#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "povmcoh/error.hpp"
#include "povmcoh/harness.hpp"

namespace povmcoh {
namespace {

std::string csv_of(const ExperimentConfig& cfg) {
  std::ostringstream os;
  const auto recs = run_experiment(cfg);
  write_csv(recs, os);
  return os.str();
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("povmcoh_test_" + name);
}

TEST(Csv, HeaderOnlyForEmptyRecords) {
  std::ostringstream os;
  write_csv({}, os);
  EXPECT_EQ(os.str(), std::string(kCsvHeader) + "\n");

  const auto path = temp_path("empty.csv");
  emit_csv({}, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvHeader);
  EXPECT_FALSE(std::getline(in, line));
  std::filesystem::remove(path);
}

TEST(Csv, TenTrialsGiveElevenLines) {
  for (auto ex : {Experiment::L1Qubit, Experiment::RelEntTwoQubit, Experiment::TsallisTwoQubit}) {
    ExperimentConfig cfg;
    cfg.experiment = ex;
    cfg.seed = 42;
    const std::string text = csv_of(cfg);
    EXPECT_EQ(count_lines(text), 11) << to_string(ex);
    EXPECT_EQ(text.substr(0, kCsvHeader.size()), kCsvHeader);
  }
}

TEST(Csv, RowsSortedAndNotApplicableFieldsEmpty) {
  std::vector<BoundRecord> recs(2);
  recs[0].experiment = "tsallis-2q";
  recs[0].trial = 1;
  recs[0].upper = 0.5;
  recs[1].experiment = "tsallis-2q";
  recs[1].trial = 0;
  recs[1].exact = 1.0 / 3.0;
  std::ostringstream os;
  write_csv(recs, os);
  std::istringstream in(os.str());
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  EXPECT_EQ(first, "tsallis-2q,0,0,0,0,0,0.333333333333,,,0,0,0,0");
  EXPECT_EQ(second, "tsallis-2q,1,0,0,0,0,0,0.5,,1,0,0,0");
}

TEST(Csv, UnwritablePath) {
  try {
    emit_csv({}, "/nonexistent-dir/x/y.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

TEST(Experiment, SameSeedSameBytes) {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::RelEntTwoQubit;
  cfg.trials = 50;
  cfg.seed = 7;
  const std::string a = csv_of(cfg);
  EXPECT_EQ(a, csv_of(cfg));
  cfg.seed = 8;
  EXPECT_NE(a, csv_of(cfg));
}

TEST(Experiment, ThreadedMatchesSerial) {
  for (auto ex : {Experiment::L1Qubit, Experiment::RelEntTwoQubit, Experiment::TsallisTwoQubit}) {
    ExperimentConfig cfg;
    cfg.experiment = ex;
    cfg.trials = 37;
    cfg.seed = 99;
    const std::string serial = csv_of(cfg);
    cfg.threads = 4;
    EXPECT_EQ(serial, csv_of(cfg)) << to_string(ex);
  }
}

TEST(Experiment, TrialsAreIndependentStreams) {
  // Trial k of a long run equals trial k of a short run.
  ExperimentConfig cfg;
  cfg.experiment = Experiment::L1Qubit;
  cfg.seed = 3;
  cfg.trials = 5;
  const auto short_run = run_experiment(cfg);
  cfg.trials = 20;
  const auto long_run = run_experiment(cfg);
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(short_run[k].alpha, long_run[k].alpha);
    EXPECT_EQ(short_run[k].beta, long_run[k].beta);
  }
}

TEST(Experiment, L1ProtocolNoViolations) {
  ExperimentConfig cfg;
  cfg.seed = 42;
  const auto recs = run_experiment(cfg);
  ASSERT_EQ(recs.size(), 10u);
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(recs[k].trial, k);
    EXPECT_EQ(recs[k].seed, 42u);
    EXPECT_TRUE(recs[k].upper_applicable());
    EXPECT_TRUE(recs[k].lower_applicable());
    EXPECT_FALSE(recs[k].violation);
    EXPECT_GT(recs[k].alpha, 0.0);
    EXPECT_LT(recs[k].alpha, 1.0);
  }
}

TEST(Experiment, TsallisLowLambdaHasUpperOnly) {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::TsallisTwoQubit;
  cfg.lambda = 0.3;
  cfg.trials = 20;
  for (const auto& r : run_experiment(cfg)) {
    EXPECT_TRUE(r.upper_applicable());
    EXPECT_FALSE(r.lower_applicable());
    EXPECT_GE(*r.upper + kSandwichTol, r.exact);
  }
}

TEST(Experiment, RescaledSchemeAlwaysApplicable) {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::RelEntTwoQubit;
  cfg.scheme = CoefficientScheme::Uniform01Rescaled;
  cfg.trials = 200;
  for (const auto& r : run_experiment(cfg)) {
    EXPECT_LE(r.alpha + r.beta, 1.0 + 1e-12);
    EXPECT_TRUE(r.upper_applicable());
    EXPECT_FALSE(r.violation);
  }
}

TEST(Sampling, UniformMarginals) {
  double sa = 0.0;
  double sb = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const auto c = draw_coefficients(2024, k, CoefficientScheme::Uniform01);
    ASSERT_GT(c.alpha_mod, 0.0);
    ASSERT_LT(c.alpha_mod, 1.0);
    sa += c.alpha_mod;
    sb += c.beta_mod;
  }
  EXPECT_NEAR(sa / n, 0.5, 0.01);
  EXPECT_NEAR(sb / n, 0.5, 0.01);
}

TEST(Sampling, PhaseSchemeDrawsPhases) {
  const auto c = draw_coefficients(1, 0, CoefficientScheme::Uniform01Phase);
  EXPECT_NE(c.alpha_phase, 0.0);
  const auto d = draw_coefficients(1, 0, CoefficientScheme::Uniform01);
  EXPECT_EQ(d.alpha_phase, 0.0);
}

TEST(Config, Validation) {
  ExperimentConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(validate(cfg), Error);
  cfg.trials = 1;
  cfg.lambda = 1.5;
  EXPECT_THROW(validate(cfg), Error);  // lambda on a non-Tsallis experiment
  cfg.experiment = Experiment::TsallisTwoQubit;
  EXPECT_NO_THROW(validate(cfg));
  cfg.lambda = 1.0;
  EXPECT_THROW(validate(cfg), Error);
  cfg.lambda = 2.5;
  EXPECT_THROW(validate(cfg), Error);
  cfg.lambda = 1.5;
  cfg.threads = 0;
  EXPECT_THROW(validate(cfg), Error);
}

TEST(Config, Parsing) {
  EXPECT_EQ(parse_experiment("relent-2q"), Experiment::RelEntTwoQubit);
  EXPECT_EQ(parse_scheme("uniform01-rescaled"), CoefficientScheme::Uniform01Rescaled);
  EXPECT_EQ(to_string(Experiment::TsallisTwoQubit), "tsallis-2q");
  try {
    parse_experiment("fig3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
  }
}

}  // namespace
}  // namespace povmcoh
