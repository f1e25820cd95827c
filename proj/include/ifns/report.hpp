#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ifns {

enum class CheckStatus { pass, fail, assumed, inapplicable };

const char* to_string(CheckStatus s) noexcept;

/// Outcome of one axiom or property on a sample.
struct AxiomCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<double> witness;  // flattened arguments of the first violation
  double worst_deviation = 0.0;
  std::size_t evaluations = 0;
  bool optional = false;  // does not affect AxiomReport::passed()
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  /// True when no required check failed.
  bool passed() const;
  const AxiomCheck* find(const std::string& name) const;
  AxiomCheck& add(std::string name);
};

}  // namespace ifns
