#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ifns/classifier.hpp"
#include "ifns/core.hpp"
#include "ifns/fuzzy_norm.hpp"
#include "ifns/map_spec.hpp"
#include "ifns/tnorm.hpp"

namespace ifns {

enum class Task { axioms, classify, orbit, scan, diameter, regularity, bounds, set_afpp };

Task task_from_name(std::string_view name);
std::string_view to_string(Task t) noexcept;
bool is_sampled(Task t) noexcept;

/// Raised for a config that parses but violates the schema. `key` is the dotted path.
class SchemaError : public InputError {
 public:
  SchemaError(std::string key, const std::string& message)
      : InputError(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct SpaceConfig {
  FuzzyNormPair pair = FuzzyNormPair::standard(BaseNorm::absolute, 1);
  TriangularOp tnorm{OpFamily::product};
  TriangularOp tconorm{OpFamily::lukasiewicz_sum};
};

struct AfpConfig {
  double eps = 0.1;
  std::vector<Scale> scales{Scale(1.0)};
  std::size_t grid = 1001;
  std::size_t orbit_steps = 50;
  std::optional<Vector> x0;
};

struct ClassifyConfig {
  ClassKind kind = ClassKind::contraction;
  double a = 0.5, k = 0.25, c = 0.25, L = 0.0;
  std::size_t samples = 1000;
  bool fit = false;
};

struct AxiomsConfig {
  std::size_t samples = 1000;
  std::size_t scale_count = 16;
};

struct BoundsConfig {
  ClassKind kind = ClassKind::contraction;
  double a = 0.5;
};

struct DiameterConfig {
  std::size_t grid = 101;
};

struct SetAfppConfig {
  std::vector<std::size_t> grids{10, 100, 1000};
  std::size_t samples = 1000;
};

enum class OutputFormat { json, csv };

struct OutputConfig {
  OutputFormat format = OutputFormat::json;
  std::optional<std::filesystem::path> path;
};

struct RunConfig {
  Task task = Task::scan;
  std::optional<std::uint64_t> seed;
  SpaceConfig space;
  std::optional<MapSpec> map;
  AfpConfig afp;
  ClassifyConfig classify;
  AxiomsConfig axioms;
  BoundsConfig bounds;
  DiameterConfig diameter;
  SetAfppConfig set_afpp;
  OutputConfig output;
  nlohmann::json echo;
};

/// The validated ClassSpec for the classify section.
ClassSpec class_spec(const RunConfig& cfg);

/// Validates a parsed document. `task` overrides a top-level "task" key;
/// `seed` overrides any seed in the document.
RunConfig parse_config(const nlohmann::json& doc, std::optional<Task> task = {},
                       std::optional<std::uint64_t> seed = {});

/// Reads and validates a config file. Parse errors carry line and column.
RunConfig load_config(const std::filesystem::path& path, std::optional<Task> task = {},
                      std::optional<std::uint64_t> seed = {});

}  // namespace ifns
