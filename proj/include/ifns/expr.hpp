#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ifns/core.hpp"

namespace ifns {

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Non-finite value produced while evaluating component `component` (1-based).
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& what, std::size_t component);
  std::size_t component() const noexcept { return component_; }

 private:
  std::size_t component_;
};

enum class Arith { add, sub, mul, div, pow };
enum class Func { abs, sqrt, min, max, sin, cos, exp, log };

std::string_view to_string(Func f) noexcept;
std::size_t arity(Func f) noexcept;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ConstantNode {
  double value;
};
struct VariableNode {
  std::size_t index;  // 0-based; printed as x{index+1}
};
struct NegateNode {
  ExprPtr operand;
};
struct BinaryNode {
  Arith op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct CallNode {
  Func func;
  std::vector<ExprPtr> args;
};

/// Immutable expression tree node.
struct Expr {
  std::variant<ConstantNode, VariableNode, NegateNode, BinaryNode, CallNode> node;
};

/// Parses one expression over x1..x{dimension}.
ExprPtr parse_expr(std::string_view source, std::size_t dimension);
/// Same, with error positions offset to where `source` starts in a larger text.
ExprPtr parse_expr(std::string_view source, std::size_t dimension, std::size_t line, std::size_t column);

/// Fully parenthesized form that parses back to the same tree.
std::string print_expr(const Expr& e);

bool same_structure(const Expr& a, const Expr& b) noexcept;

/// Evaluates e at x. Returns NaN/inf as produced; callers decide finiteness.
double eval_expr(const Expr& e, const Vector& x, bool* nonfinite_seen = nullptr);

}  // namespace ifns
