#include "ifns/sampling.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "ifns/report.hpp"

namespace ifns {

std::vector<Scale> to_scales(const std::vector<double>& values) {
  std::vector<Scale> out;
  out.reserve(values.size());
  for (double v : values) out.emplace_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Box

Box::Box(std::vector<Interval> sides) : sides_(std::move(sides)) {
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    const auto& s = sides_[i];
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || !(s.lo < s.hi)) {
      throw InputError("domain side " + std::to_string(i + 1) + " needs finite lo < hi");
    }
  }
}

Box Box::cube(std::size_t dim, double lo, double hi, bool open_lo, bool open_hi) {
  return Box(std::vector<Interval>(dim, Interval{lo, hi, open_lo, open_hi}));
}

bool Box::contains(const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != sides_.size()) return false;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    if (!sides_[i].contains(x(static_cast<Eigen::Index>(i)))) return false;
  }
  return true;
}

Interval Box::grid_range(std::size_t i, std::size_t grid) const {
  Interval side = sides_.at(i);
  if (grid < 2) return side;
  const double step = (side.hi - side.lo) / static_cast<double>(grid - 1);
  Interval r{side.lo, side.hi, false, false};
  if (side.open_lo) r.lo += step;
  if (side.open_hi) r.hi -= step;
  return r;
}

double Box::excess(const Vector& x) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    const double v = x(static_cast<Eigen::Index>(i));
    if (v < sides_[i].lo) worst = std::max(worst, sides_[i].lo - v);
    if (v > sides_[i].hi) worst = std::max(worst, v - sides_[i].hi);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Quasi-random points

namespace {

constexpr std::array<unsigned, 32> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,  37,  41,  43,  47,  53,
                                              59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

double radical_inverse(std::uint64_t index, unsigned base) {
  const double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

QuasiRandom::QuasiRandom(std::size_t dimension, std::uint64_t seed) : shift_(dimension) {
  if (dimension == 0 || dimension > kPrimes.size()) {
    throw InputError("quasi-random dimension must be in [1, " + std::to_string(kPrimes.size()) + "]");
  }
  std::mt19937_64 rng(seed);
  for (auto& s : shift_) s = unit_double(rng);
}

std::vector<double> QuasiRandom::next() {
  std::vector<double> u(shift_.size());
  for (std::size_t d = 0; d < shift_.size(); ++d) {
    double v = radical_inverse(index_, kPrimes[d]) + shift_[d];
    if (v >= 1.0) v -= 1.0;
    u[d] = v;
  }
  ++index_;
  return u;
}

std::vector<Scale> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo) || count == 0) throw InputError("log_spaced needs 0 < lo <= hi and count >= 1");
  std::vector<Scale> out;
  out.reserve(count);
  if (count == 1) {
    out.emplace_back(lo);
    return out;
  }
  const double llo = std::log10(lo);
  const double lhi = std::log10(hi);
  for (std::size_t i = 0; i < count; ++i) {
    const double e = llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(count - 1);
    out.emplace_back(i == 0 ? lo : (i + 1 == count ? hi : std::pow(10.0, e)));
  }
  return out;
}

double place_in(const Interval& side, double u) {
  double v = side.lo + u * (side.hi - side.lo);
  if (!side.contains(v)) {
    // Only reachable at an open endpoint (u == 0) or through rounding at hi.
    v = 0.5 * (side.lo + side.hi);
  }
  return v;
}

std::vector<Vector> sample_box(const Box& box, std::size_t count, std::uint64_t seed) {
  QuasiRandom qr(box.dimension(), seed);
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto u = qr.next();
    Vector x(static_cast<Eigen::Index>(box.dimension()));
    for (std::size_t d = 0; d < box.dimension(); ++d) x(static_cast<Eigen::Index>(d)) = place_in(box[d], u[d]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Vector> uniform_grid(const Box& box, std::size_t grid) {
  if (grid < 2) throw InputError("grid resolution must be >= 2");
  const std::size_t n = box.dimension();
  std::vector<Interval> ranges;
  for (std::size_t d = 0; d < n; ++d) ranges.push_back(box.grid_range(d, grid));

  std::size_t total = 1;
  for (std::size_t d = 0; d < n; ++d) {
    if (total > (std::size_t{1} << 40) / grid) throw InputError("grid too large");
    total *= grid;
  }

  std::vector<Vector> out;
  out.reserve(total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t p = 0; p < total; ++p) {
    Vector x(static_cast<Eigen::Index>(n));
    for (std::size_t d = 0; d < n; ++d) {
      const auto& r = ranges[d];
      // Endpoints are hit exactly; interior nodes use lo + i * (hi - lo) / (grid - 1).
      const double v = idx[d] + 1 == grid ? r.hi
                                          : r.lo + (r.hi - r.lo) * static_cast<double>(idx[d]) /
                                                       static_cast<double>(grid - 1);
      x(static_cast<Eigen::Index>(d)) = v;
    }
    out.push_back(std::move(x));
    for (std::size_t d = n; d-- > 0;) {
      if (++idx[d] < grid) break;
      idx[d] = 0;
    }
  }
  return out;
}

std::size_t chunk_count(std::size_t n, Parallelism par) noexcept {
  const std::size_t threads = std::max(1u, par.threads);
  return std::max<std::size_t>(1, std::min(threads, n));
}

void parallel_chunks(std::size_t n, Parallelism par,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t chunks = chunk_count(n, par);
  const std::size_t per = (n + chunks - 1) / chunks;
  if (chunks == 1) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = std::min(n, c * per);
    const std::size_t end = std::min(n, begin + per);
    workers.emplace_back([&body, begin, end, c] { body(begin, end, c); });
  }
  for (auto& w : workers) w.join();
}

// ---------------------------------------------------------------------------
// AxiomReport

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::assumed:
      return "assumed";
    case CheckStatus::inapplicable:
      return "inapplicable";
  }
  return "?";
}

bool AxiomReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const AxiomCheck& c) { return !c.optional && c.status == CheckStatus::fail; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AxiomCheck& AxiomReport::add(std::string name) {
  checks.push_back(AxiomCheck{});
  checks.back().name = std::move(name);
  return checks.back();
}

}  // namespace ifns
