#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "grmod/error.hpp"
#include "grmod/parse.hpp"

namespace grmod::tools {

/// Command-line overrides; unset fields fall back to the job file and then
/// to the defaults (seed 0, probe 5, max-ext 3, method certificate).
struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<int> probe;
  std::optional<int> max_ext;
  std::optional<std::string> method;
};

struct RunResult {
  nlohmann::ordered_json json;
  std::string text;
  /// 0 success, 1 usage or parse error, 2 hypothesis violation,
  /// 3 internal inconsistency or theorem violation.
  int exit_code = 0;
};

int exit_code_for(ErrorCode code);

/// Parses and runs one job; engine errors land in the JSON `error` field.
RunResult run_text(std::string_view text, std::string_view command, const RunOptions& opts);
RunResult run_job(const JobDescription& job, const RunOptions& opts);

}  // namespace grmod::tools
