#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ifns/core.hpp"

namespace ifns {

/// Halton sequence with a seeded Cranley-Patterson rotation. Deterministic
/// for a given (dimension, seed) on every platform.
class QuasiRandom {
 public:
  QuasiRandom(std::size_t dimension, std::uint64_t seed);

  std::size_t dimension() const noexcept { return shift_.size(); }

  /// Next point of [0,1)^dimension.
  std::vector<double> next();

 private:
  std::vector<double> shift_;
  std::uint64_t index_ = 1;
};

/// Uniform double in [0,1) from the top 53 bits of a 64-bit engine draw.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Log-spaced scales from lo to hi inclusive.
std::vector<Scale> log_spaced(double lo, double hi, std::size_t count);

/// How sampled checks draw their points and scales.
struct SamplePlan {
  std::size_t points = 256;
  double scale_lo = 1e-3;
  double scale_hi = 1e3;
  std::size_t scale_count = 16;
  std::uint64_t seed = 0;
  /// Half-width of the cube [-radius, radius]^n used where no map domain applies.
  double radius = 10.0;

  static SamplePlan with_seed(std::uint64_t seed, std::size_t points = 256) {
    SamplePlan plan;
    plan.seed = seed;
    plan.points = points;
    return plan;
  }

  std::vector<Scale> scales() const { return log_spaced(scale_lo, scale_hi, scale_count); }
};

/// Maps u in [0,1) into the interior of a side, never landing on an open endpoint.
double place_in(const Interval& side, double u);

/// Draws `count` points inside the box from a quasi-random stream.
std::vector<Vector> sample_box(const Box& box, std::size_t count, std::uint64_t seed);

/// Full tensor grid with `grid` nodes per side; open sides shrink by one step.
std::vector<Vector> uniform_grid(const Box& box, std::size_t grid);

/// Runs body(begin, end, chunk) over contiguous chunks of [0, n).
void parallel_chunks(std::size_t n, Parallelism par,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

/// Number of chunks parallel_chunks will use for n items.
std::size_t chunk_count(std::size_t n, Parallelism par) noexcept;

}  // namespace ifns
