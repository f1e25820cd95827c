#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "ifns/core.hpp"
#include "ifns/report.hpp"

namespace ifns {

enum class OpKind { tnorm, tconorm };
enum class OpFamily { product, minimum, maximum, lukasiewicz_sum, lukasiewicz_product };

/// Triangular norm or conorm on [0,1]. The family fixes the kind:
/// product, minimum and lukasiewicz_product are t-norms; maximum and
/// lukasiewicz_sum are t-conorms.
class TriangularOp {
 public:
  explicit TriangularOp(OpFamily family);

  /// Parses the config names "product", "min", "max", "lukasiewicz_sum", "lukasiewicz_product".
  static TriangularOp from_name(std::string_view name);

  OpFamily family() const noexcept { return family_; }
  OpKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  /// Identity element: 1 for a t-norm, 0 for a t-conorm.
  double identity() const noexcept { return kind_ == OpKind::tnorm ? 1.0 : 0.0; }

  /// Unchecked evaluation; callers guarantee a, b in [0,1].
  double apply(double a, double b) const noexcept;

 private:
  OpFamily family_;
  OpKind kind_;
};

/// Evaluates op(a, b). Throws DomainError when a or b lies outside [0,1].
double eval_op(const TriangularOp& op, double a, double b);

/// Any binary operation on [0,1], used to audit operations that are not built in.
using RawOp = std::function<double(double, double)>;

/// Samples associativity, commutativity, monotonicity, identity and range
/// (output in [0,1]) on a seeded quasi-random sample of sample_count tuples.
AxiomReport check_op_axioms(const TriangularOp& op, std::size_t sample_count, std::uint64_t seed);
AxiomReport check_op_axioms(OpKind kind, const RawOp& op, std::size_t sample_count, std::uint64_t seed);

/// Checks op(a, a) == a on the uniform grid i/(grid_count-1).
AxiomReport check_idempotency(const TriangularOp& op, std::size_t grid_count);

}  // namespace ifns
