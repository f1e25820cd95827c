#include "ifns/afp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <iterator>
#include <limits>

namespace ifns {

namespace {

Degrees deg(const FuzzyNormPair& pair, const Vector& v, double t) { return eval_pair_unchecked(pair, v, t); }

}  // namespace

EpsResidual residual(const MapSpec& f, const FuzzyNormPair& pair, const Vector& x, Scale t) {
  const Vector step = eval_map(f, x) - x;
  const auto d = eval_pair(pair, step, t);
  return EpsResidual{x, t.value(), d.mu, d.nu, std::max(1.0 - d.mu, d.nu)};
}

std::vector<Vector> EpsFixedPointSet::points() const {
  std::vector<Vector> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.x);
  return out;
}

EpsFixedPointSet scan_f_epsilon(const MapSpec& f, const FuzzyNormPair& pair, double eps,
                                std::span<const Scale> scales, std::size_t grid, Parallelism par) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0,1)");
  if (grid < 2) throw InputError("grid resolution must be >= 2");
  if (scales.empty()) throw InputError("scan needs at least one scale");

  EpsFixedPointSet set;
  set.eps = eps;
  set.grid = grid;
  for (const auto& s : scales) set.scales.push_back(s.value());

  const auto nodes = uniform_grid(f.domain, grid);
  set.points_scanned = nodes.size();

  struct Chunk {
    std::vector<EpsMember> members;
    std::size_t errors = 0;
  };
  std::vector<Chunk> chunks(chunk_count(nodes.size(), par));
  parallel_chunks(nodes.size(), par, [&](std::size_t begin, std::size_t end, std::size_t c) {
    auto& out = chunks[c];
    for (std::size_t i = begin; i < end; ++i) {
      const Vector& x = nodes[i];
      Vector step;
      try {
        step = eval_map(f, x) - x;
      } catch (const EvalError&) {
        ++out.errors;
        continue;
      }
      EpsMember m{x, {}, 1.0, 0.0, 0.0};
      bool member = true;
      for (const auto& t : scales) {
        const auto d = eval_pair(pair, step, t);
        const EpsResidual r{x, t.value(), d.mu, d.nu, std::max(1.0 - d.mu, d.nu)};
        member = member && r.is_fixed_within(eps);
        m.mu_res = std::min(m.mu_res, r.mu_res);
        m.nu_res = std::max(m.nu_res, r.nu_res);
        m.eps_star = std::max(m.eps_star, r.eps_star);
        m.per_scale.push_back(r);
      }
      if (member) out.members.push_back(std::move(m));
    }
  });
  for (auto& c : chunks) {
    set.evaluation_errors += c.errors;
    std::move(c.members.begin(), c.members.end(), std::back_inserter(set.members));
  }
  return set;
}

EpsFixedPointSet scan_f_epsilon(const MapSpec& f, const FuzzyNormPair& pair, double eps, Scale t, std::size_t grid,
                                Parallelism par) {
  const std::array<Scale, 1> scales{t};
  return scan_f_epsilon(f, pair, eps, scales, grid, par);
}

OrbitRecord picard_orbit(const MapSpec& f, const Vector& x0, std::size_t steps, const FuzzyNormPair& pair,
                         std::span<const Scale> scales) {
  if (steps == 0) throw InputError("orbit needs at least one step");
  if (scales.empty()) throw InputError("orbit needs at least one scale");
  if (static_cast<std::size_t>(x0.size()) != f.dimension) throw InputError("x0 has the wrong dimension");
  if (!f.domain.contains(x0)) throw InputError("x0 lies outside the map's domain");

  OrbitRecord orbit;
  orbit.x0 = x0;
  for (const auto& s : scales) orbit.scales.push_back(s.value());
  orbit.iterates.push_back(x0);

  for (std::size_t k = 0; k < steps; ++k) {
    const Vector& cur = orbit.iterates.back();
    Vector next;
    try {
      next = eval_map(f, cur);
    } catch (const EvalError& e) {
      orbit.truncated = true;
      orbit.truncation_reason = "evaluation failed at step " + std::to_string(k) + ": " + e.what();
      break;
    }
    if (!f.domain.contains(next)) {
      orbit.truncated = true;
      orbit.truncation_reason = "iterate " + std::to_string(k + 1) + " left the domain";
      break;
    }
    const Vector diff = next - cur;
    std::vector<Degrees> row;
    row.reserve(scales.size());
    for (const auto& t : scales) row.push_back(eval_pair(pair, diff, t));
    orbit.step_degrees.push_back(std::move(row));
    if ((diff.array() < 0.0).any()) orbit.monotone_flag = false;
    orbit.iterates.push_back(std::move(next));
  }
  return orbit;
}

RegularityVerdict detect_asymptotic_regularity(const OrbitRecord& orbit, double eps, Scale t) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0,1)");
  const auto it = std::find(orbit.scales.begin(), orbit.scales.end(), t.value());
  if (it == orbit.scales.end()) throw InputError("scale " + std::to_string(t.value()) + " was not recorded");
  const auto s = static_cast<std::size_t>(it - orbit.scales.begin());

  RegularityVerdict v;
  v.t = t.value();
  v.eps = eps;
  v.steps = orbit.steps();
  std::size_t k0 = 0;
  for (std::size_t k = 0; k < orbit.steps(); ++k) {
    const auto& d = orbit.step_degrees[k][s];
    if (!(d.mu > 1.0 - eps && d.nu < eps)) k0 = k + 1;
  }
  if (k0 < orbit.steps()) {
    v.k0 = k0;
    v.witness = orbit.iterates[k0];
  }
  return v;
}

BoundReport verify_iterate_bound(const OrbitRecord& orbit, const FuzzyNormPair& pair, ClassKind kind, double a,
                                 Scale t) {
  BoundReport report;
  report.kind = kind;
  report.a = a;
  report.t = t.value();
  report.orbit_truncated = orbit.truncated;
  switch (kind) {
    case ClassKind::contraction:
    case ClassKind::weak_contraction:
      if (!(a > 0.0 && a < 1.0)) throw InputError("modulus a must lie in (0,1)");
      report.rate = a;
      break;
    case ClassKind::kannan:
    case ClassKind::chatterjea:
      if (!(a > 0.0 && a < 0.5)) throw InputError("modulus a must lie in (0,1/2)");
      report.rate = 2.0 * a;
      break;
    default:
      throw InputError("iterate bounds are defined for contraction, kannan, chatterjea and weak_contraction");
  }
  if (orbit.iterates.size() < 2) return report;

  const Vector first_step = orbit.iterates[0] - orbit.iterates[1];
  double rate_pow = 1.0;  // r^k
  for (std::size_t k = 0; k < orbit.steps(); ++k) {
    const auto lhs = deg(pair, Vector(orbit.iterates[k] - orbit.iterates[k + 1]), t.value());
    // t / r^k saturates at the largest double instead of overflowing to +inf.
    const double stretched = rate_pow > 0.0 ? std::min(t.value() / rate_pow, std::numeric_limits<double>::max())
                                            : std::numeric_limits<double>::max();
    const auto rhs = deg(pair, first_step, stretched);
    BoundRow row{k, lhs.mu, rhs.mu, lhs.nu, rhs.nu, true};
    row.holds = lhs.mu >= rhs.mu - kSlack && lhs.nu <= rhs.nu + kSlack;
    if (!row.holds && !report.first_failing_k) {
      report.first_failing_k = k;
      report.passed = false;
    }
    report.rows.push_back(row);
    rate_pow *= report.rate;
  }
  return report;
}

DiameterResult fuzzy_diameter(std::span<const Vector> points, const FuzzyNormPair& pair, Scale t, Parallelism par) {
  if (points.empty()) throw InputError("diameter needs at least one point");
  DiameterResult result;
  result.t = t.value();
  result.points = points.size();

  struct Chunk {
    double mu = 1.0, nu = 0.0;
    std::pair<std::size_t, std::size_t> argmin{0, 0}, argmax{0, 0};
  };
  std::vector<Chunk> chunks(chunk_count(points.size(), par));
  parallel_chunks(points.size(), par, [&](std::size_t begin, std::size_t end, std::size_t c) {
    auto& r = chunks[c];
    r.argmin = r.argmax = {begin, begin};
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i; j < points.size(); ++j) {
        const auto d = eval_pair(pair, points[i] - points[j], t);
        if (d.mu < r.mu) {
          r.mu = d.mu;
          r.argmin = {i, j};
        }
        if (d.nu > r.nu) {
          r.nu = d.nu;
          r.argmax = {i, j};
        }
      }
    }
  });
  // Ties resolve to the lowest chunk, so the result is independent of thread count.
  for (const auto& r : chunks) {
    if (r.mu < result.delta_mu) {
      result.delta_mu = r.mu;
      result.argmin_mu = r.argmin;
    }
    if (r.nu > result.delta_nu) {
      result.delta_nu = r.nu;
      result.argmax_nu = r.argmax;
    }
  }
  return result;
}

ChainReport triangle_chain_check(const MapSpec& f, const FuzzyNormPair& pair, const TriangularOp& tnorm,
                                 const TriangularOp& tconorm, const Vector& x, const Vector& y, Scale t) {
  if (tnorm.kind() != OpKind::tnorm || tconorm.kind() != OpKind::tconorm) {
    throw InputError("triangle chain needs a t-norm and a t-conorm");
  }
  const Vector fx = eval_map(f, x);
  const Vector fy = eval_map(f, y);
  const double third = t.value() / 3.0;

  const auto whole = eval_pair(pair, Vector(x - y), t);
  const auto a = deg(pair, Vector(fx - x), third);
  const auto b = deg(pair, Vector(fx - fy), third);
  const auto c = deg(pair, Vector(fy - y), third);

  ChainReport r;
  r.mu_lhs = whole.mu;
  r.mu_rhs = tnorm.apply(tnorm.apply(a.mu, b.mu), c.mu);
  r.nu_lhs = whole.nu;
  r.nu_rhs = tconorm.apply(tconorm.apply(a.nu, b.nu), c.nu);
  r.mu_holds = r.mu_lhs >= r.mu_rhs - kSlack;
  r.nu_holds = r.nu_lhs <= r.nu_rhs + kSlack;
  return r;
}

SetAfppReport set_afpp_estimate(const MapSpec& f, const FuzzyNormPair& pair, const ClassVerdict& nonexpansive,
                                std::span<const std::size_t> grids, Scale t) {
  SetAfppReport report;
  report.t = t.value();
  if (nonexpansive.kind != ClassKind::nonexpansive || !nonexpansive.holds_on_sample) {
    report.applicable = false;
    report.reason = "map is not confirmed nonexpansive on its sample";
    return report;
  }
  if (grids.empty()) throw InputError("set estimate needs at least one grid resolution");

  for (std::size_t g : grids) {
    SetAfppLevel level;
    level.grid = g;
    for (const auto& x : uniform_grid(f.domain, g)) {
      Vector step;
      try {
        step = eval_map(f, x) - x;
      } catch (const EvalError&) {
        continue;
      }
      const auto d = eval_pair(pair, step, t);
      if (d.mu > level.sup_mu) {
        level.sup_mu = d.mu;
        level.argsup = x;
      }
      level.inf_nu = std::min(level.inf_nu, d.nu);
    }
    if (!report.levels.empty()) {
      const auto& prev = report.levels.back();
      if (level.sup_mu < prev.sup_mu || level.inf_nu > prev.inf_nu) report.monotone = false;
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace ifns
