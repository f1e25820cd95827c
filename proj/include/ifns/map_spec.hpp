#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifns/core.hpp"
#include "ifns/expr.hpp"
#include "ifns/sampling.hpp"

namespace ifns {

/// Self-map f: D -> R^n given componentwise by expressions over x1..xn.
struct MapSpec {
  std::size_t dimension = 1;
  std::vector<ExprPtr> components;
  Box domain;

  std::string source() const;
};

/// Closed box [-1e6, 1e6]^n, the stand-in for "all of R^n".
Box default_domain(std::size_t dimension);

/// Parses `;`-separated component expressions. Errors carry line/column.
MapSpec parse_map(std::string_view source, std::size_t dimension);
MapSpec parse_map(std::string_view source, std::size_t dimension, Box domain);

/// Componentwise evaluation. Throws InputError on dimension mismatch and
/// EvalError when any intermediate value is non-finite.
Vector eval_map(const MapSpec& spec, const Vector& x);

struct SelfMapReport {
  bool holds = true;
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// Point whose image lies furthest outside the domain.
  std::optional<Vector> worst_x;
  std::optional<Vector> worst_fx;
  double worst_excess = 0.0;
  std::string worst_error;  // set when the worst point failed to evaluate
};

/// Checks that sampled domain points map back into the domain. A hit on an
/// open side counts as a violation.
SelfMapReport check_self_map(const MapSpec& spec, const SamplePlan& plan);

}  // namespace ifns
