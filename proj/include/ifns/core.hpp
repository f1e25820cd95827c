#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifns {

/// Point of the underlying linear space R^n.
using Vector = Eigen::VectorXd;

/// Inequality slack used by every sampled check.
inline constexpr double kSlack = 1e-12;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (e.g. t <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Scale parameter t of a fuzzy norm evaluation. Always finite and positive.
class Scale {
 public:
  explicit Scale(double t) : t_(t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw DomainError("scale must be finite and > 0, got " + std::to_string(t));
    }
  }
  double value() const noexcept { return t_; }

  friend bool operator==(const Scale&, const Scale&) = default;

 private:
  double t_;
};

std::vector<Scale> to_scales(const std::vector<double>& values);

/// One coordinate interval of a domain box, with per-side open/closed flags.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool open_lo = false;
  bool open_hi = false;

  bool contains(double v) const noexcept {
    const bool above = open_lo ? v > lo : v >= lo;
    const bool below = open_hi ? v < hi : v <= hi;
    return above && below;
  }
};

/// Axis-aligned domain box. Invariant: lo < hi on every side.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> sides);

  static Box cube(std::size_t dim, double lo, double hi, bool open_lo = false, bool open_hi = false);

  std::size_t dimension() const noexcept { return sides_.size(); }
  const Interval& operator[](std::size_t i) const { return sides_[i]; }
  const std::vector<Interval>& sides() const noexcept { return sides_; }

  bool contains(const Vector& x) const;

  /// Smallest side interval actually sampled by grids: open sides shrink by one step.
  Interval grid_range(std::size_t i, std::size_t grid) const;

  /// Distance by which x lies outside the box in the max norm (0 when inside or on an open side).
  double excess(const Vector& x) const;

 private:
  std::vector<Interval> sides_;
};

/// Number of worker threads used by parallel scans. 1 means sequential.
struct Parallelism {
  unsigned threads = 1;
};

}  // namespace ifns
