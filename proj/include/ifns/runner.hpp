#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ifns/config.hpp"
#include "ifns/core.hpp"

namespace ifns {

inline constexpr const char* kVersion = "0.1.0";

struct RunResult {
  /// config, version, seed, task, payload, duration_ms
  nlohmann::json report;
  int exit_code = 0;
  /// One line for standard error.
  std::string summary;
  /// Set when the config asks for CSV output.
  std::optional<std::string> csv;

  const nlohmann::json& payload() const { return report.at("payload"); }
};

/// Dispatches the configured task. Exit code 0 on pass/holds/nonempty, 1 otherwise.
RunResult run(const RunConfig& cfg, Parallelism par = {});

}  // namespace ifns
