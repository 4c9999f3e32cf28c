#include <gtest/gtest.h>

#include "cli.hpp"

using namespace loopmod;
using loopmod::cli::run_job;

namespace {

json base_config() {
  return json::parse(R"json({
    "algebra": {"kind": "H_n", "n": 2},
    "level_a": "1",
    "phi": {"exceptions": {"2": "-"}, "default": "+"},
    "truncation": {"max_delta_degree": 2, "max_exponent": 2, "max_total_degree": 2},
    "task": "phi-verma",
    "seed": 1
  })json");
}

}  // namespace

TEST(Cli, RunsAPhiVermaJob) {
  const auto r = run_job(base_config());
  EXPECT_EQ(r.exit_code, cli::kOk) << r.report.dump(2);
  EXPECT_EQ(r.report.at("status"), "pass");
  EXPECT_TRUE(r.report.contains("generated_at"));
  EXPECT_FALSE(cli::without_timestamp(r.report).contains("generated_at"));
}

TEST(Cli, UnknownFieldIsAUsageError) {
  auto cfg = base_config();
  cfg["colour"] = "blue";
  const auto r = run_job(cfg);
  EXPECT_EQ(r.exit_code, cli::kUsage);
  EXPECT_TRUE(r.report.contains("error"));
}

TEST(Cli, UnknownTaskIsAUsageError) {
  auto cfg = base_config();
  cfg["task"] = "dance";
  EXPECT_EQ(run_job(cfg).exit_code, cli::kUsage);
}

TEST(Cli, LevelZeroRealizationIsAUsageError) {
  auto cfg = base_config();
  cfg["level_a"] = "0";
  cfg["task"] = "realization";
  cfg["task_params"] = json::parse(R"json({"K": [1], "theta": {"1": "1/2"}})json");
  EXPECT_EQ(run_job(cfg).exit_code, cli::kUsage);
}

TEST(Cli, ReportsAreReproducible) {
  auto cfg = base_config();
  cfg["task"] = "verify";
  const auto a = run_job(cfg);
  const auto b = run_job(cfg);
  EXPECT_EQ(a.exit_code, cli::kOk) << a.report.dump(2);
  EXPECT_EQ(cli::without_timestamp(a.report), cli::without_timestamp(b.report));
}

TEST(Cli, SeedOverrideIsRecorded) {
  const auto r = run_job(base_config(), 99);
  EXPECT_EQ(r.report.at("seed"), 99);
}
