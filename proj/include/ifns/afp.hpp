#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifns/classifier.hpp"
#include "ifns/core.hpp"
#include "ifns/fuzzy_norm.hpp"
#include "ifns/map_spec.hpp"
#include "ifns/tnorm.hpp"

namespace ifns {

/// Residual degrees of f(x) - x at scale t.
struct EpsResidual {
  Vector x;
  double t = 1.0;
  double mu_res = 1.0;
  double nu_res = 0.0;
  /// max(1 - mu_res, nu_res); x is an eps-fixed point at t iff eps > eps_star.
  double eps_star = 0.0;

  /// The strict predicate mu > 1 - eps and nu < eps.
  bool is_fixed_within(double eps) const noexcept { return mu_res > 1.0 - eps && nu_res < eps; }
};

EpsResidual residual(const MapSpec& f, const FuzzyNormPair& pair, const Vector& x, Scale t);

struct EpsMember {
  Vector x;
  std::vector<EpsResidual> per_scale;
  /// Worst values across scales.
  double mu_res = 1.0;
  double nu_res = 0.0;
  double eps_star = 0.0;
};

struct EpsFixedPointSet {
  double eps = 0.0;
  std::vector<double> scales;
  std::size_t grid = 0;
  std::size_t points_scanned = 0;
  std::size_t evaluation_errors = 0;
  std::vector<EpsMember> members;

  bool empty() const noexcept { return members.empty(); }
  std::vector<Vector> points() const;
};

/// Uniform grid scan of the domain; members satisfy the eps-fixed-point
/// predicate at every listed scale.
EpsFixedPointSet scan_f_epsilon(const MapSpec& f, const FuzzyNormPair& pair, double eps,
                                std::span<const Scale> scales, std::size_t grid, Parallelism par = {});
EpsFixedPointSet scan_f_epsilon(const MapSpec& f, const FuzzyNormPair& pair, double eps, Scale t, std::size_t grid,
                                Parallelism par = {});

struct OrbitRecord {
  Vector x0;
  std::vector<double> scales;
  std::vector<Vector> iterates;
  /// step_degrees[k][s]: degrees of iterates[k+1] - iterates[k] at scales[s].
  std::vector<std::vector<Degrees>> step_degrees;
  /// Componentwise x_k <= x_{k+1} at every recorded step.
  bool monotone_flag = true;
  bool truncated = false;
  std::string truncation_reason;

  std::size_t steps() const noexcept { return step_degrees.size(); }
};

/// K Picard steps from x0. Leaving the domain (or failing to evaluate)
/// truncates the orbit instead of throwing.
OrbitRecord picard_orbit(const MapSpec& f, const Vector& x0, std::size_t steps, const FuzzyNormPair& pair,
                         std::span<const Scale> scales);

struct RegularityVerdict {
  std::optional<std::size_t> k0;
  std::optional<Vector> witness;  // f^{k0}(x0)
  double t = 1.0;
  double eps = 0.0;
  std::size_t steps = 0;
  bool attained() const noexcept { return k0.has_value(); }
};

/// Smallest k0 with every recorded step k >= k0 inside the eps-band at t.
/// t must be one of the orbit's scales.
RegularityVerdict detect_asymptotic_regularity(const OrbitRecord& orbit, double eps, Scale t);

struct BoundRow {
  std::size_t k = 0;
  double mu_lhs = 1.0, mu_rhs = 1.0;
  double nu_lhs = 0.0, nu_rhs = 0.0;
  bool holds = true;
};

struct BoundReport {
  ClassKind kind = ClassKind::contraction;
  double a = 0.0;
  double rate = 0.0;
  double t = 1.0;
  bool passed = true;
  std::optional<std::size_t> first_failing_k;
  std::vector<BoundRow> rows;
  bool orbit_truncated = false;
};

/// Checks mu(f^k - f^{k+1}, t) >= mu(x0 - f(x0), t / r^k) and the dual nu bound
/// along the orbit, with r = a (contraction, weak) or r = 2a (kannan, chatterjea).
BoundReport verify_iterate_bound(const OrbitRecord& orbit, const FuzzyNormPair& pair, ClassKind kind, double a,
                                 Scale t);

struct DiameterResult {
  double delta_mu = 1.0;
  double delta_nu = 0.0;
  double t = 1.0;
  std::size_t points = 0;
  std::pair<std::size_t, std::size_t> argmin_mu{0, 0};
  std::pair<std::size_t, std::size_t> argmax_nu{0, 0};
};

/// Exhaustive pairwise inf of mu and sup of nu, x == y pairs included.
DiameterResult fuzzy_diameter(std::span<const Vector> points, const FuzzyNormPair& pair, Scale t,
                              Parallelism par = {});

struct ChainReport {
  double mu_lhs = 1.0, mu_rhs = 1.0;
  double nu_lhs = 0.0, nu_rhs = 0.0;
  bool mu_holds = true;
  bool nu_holds = true;
  bool holds() const noexcept { return mu_holds && nu_holds; }
};

/// mu(x-y,t) >= mu(f(x)-x,t/3) * mu(f(x)-f(y),t/3) * mu(f(y)-y,t/3) and the
/// dual chain for nu with the t-conorm.
ChainReport triangle_chain_check(const MapSpec& f, const FuzzyNormPair& pair, const TriangularOp& tnorm,
                                 const TriangularOp& tconorm, const Vector& x, const Vector& y, Scale t);

struct SetAfppLevel {
  std::size_t grid = 0;
  double sup_mu = 0.0;
  double inf_nu = 1.0;
  Vector argsup;
};

struct SetAfppReport {
  bool applicable = true;
  std::string reason;
  double t = 1.0;
  std::vector<SetAfppLevel> levels;
  /// sup_mu nondecreasing and inf_nu nonincreasing across increasing resolutions.
  bool monotone = true;
};

/// Sup of mu-residuals and inf of nu-residuals over grids of increasing
/// resolution. `nonexpansive` must be a holding nonexpansive verdict for f.
SetAfppReport set_afpp_estimate(const MapSpec& f, const FuzzyNormPair& pair, const ClassVerdict& nonexpansive,
                                std::span<const std::size_t> grids, Scale t);

}  // namespace ifns
