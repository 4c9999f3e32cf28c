#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "loopmod/serialize.hpp"

namespace loopmod::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kOverflow = 3 };

struct JobResult {
  int exit_code = kOk;
  json report;
  std::optional<std::string> csv;  // weight-dimension table when the task has one
};

// Runs one job. Never throws: config and math errors become exit codes with the
// message recorded under "error" in the report.
JobResult run_job(const json& config, std::optional<std::uint64_t> seed_override = std::nullopt);

// The report without its "generated_at" field, for comparisons.
json without_timestamp(json report);

}  // namespace loopmod::cli
