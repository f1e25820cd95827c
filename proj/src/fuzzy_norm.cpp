#include "ifns/fuzzy_norm.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "check_util.hpp"

namespace ifns {

using detail::flatten;
using detail::note_deviation;
using detail::note_outcome;

BaseNorm base_norm_from_name(std::string_view name) {
  if (name == "absolute" || name == "abs") return BaseNorm::absolute;
  if (name == "euclidean") return BaseNorm::euclidean;
  if (name == "max") return BaseNorm::max;
  throw InputError("unknown base norm '" + std::string(name) + "'");
}

std::string_view to_string(BaseNorm b) noexcept {
  switch (b) {
    case BaseNorm::absolute:
      return "absolute";
    case BaseNorm::euclidean:
      return "euclidean";
    case BaseNorm::max:
      return "max";
  }
  return "?";
}

FuzzyNormPair FuzzyNormPair::standard(BaseNorm base, std::size_t dimension) {
  if (dimension == 0) throw InputError("dimension must be >= 1");
  if (base == BaseNorm::absolute && dimension != 1) throw InputError("absolute base norm requires dimension 1");
  return FuzzyNormPair{Construction::standard, base, dimension};
}

namespace {

// Proxy scales and thresholds for the limit axioms (vii) and (xiii).
constexpr double kLargeScale = 1e6;
constexpr double kSmallScale = 1e-6;
constexpr double kLimitHigh = 0.999;
constexpr double kLimitLow = 0.001;
// Points closer to the origin than this cannot be resolved by the small proxy scale.
constexpr double kLimitMinNorm = 1e-2;

Degrees at(const FuzzyNormPair& pair, const Vector& x, double t) { return eval_pair_unchecked(pair, x, t); }

void require_ops(const TriangularOp& tnorm, const TriangularOp& tconorm) {
  if (tnorm.kind() != OpKind::tnorm) throw InputError(std::string(tnorm.name()) + " is not a t-norm");
  if (tconorm.kind() != OpKind::tconorm) throw InputError(std::string(tconorm.name()) + " is not a t-conorm");
}

}  // namespace

AxiomReport check_ifn_axioms(const FuzzyNormPair& pair, const TriangularOp& tnorm, const TriangularOp& tconorm,
                             const SamplePlan& plan) {
  require_ops(tnorm, tconorm);
  if (plan.points == 0) throw InputError("sample plan needs at least one point");

  const std::size_t n = pair.dimension;
  const Box box = Box::cube(n, -plan.radius, plan.radius);
  const auto xs = sample_box(box, plan.points, plan.seed);
  const auto ys = sample_box(box, plan.points, plan.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto scales = plan.scales();
  const std::size_t m = scales.size();

  QuasiRandom factor_stream(1, plan.seed + 7);

  AxiomReport report;
  report.checks.resize(14);
  const char* names[14] = {"(i)",  "(ii)",   "(iii)",  "(iv)",  "(v)",  "(vi)",  "(vii)",
                           "(viii)", "(ix)", "(x)", "(xi)", "(xii)", "(xiii)", "(xiv)"};
  for (std::size_t i = 0; i < 14; ++i) report.checks[i].name = names[i];
  auto& ax = report.checks;

  const Vector zero = Vector::Zero(static_cast<Eigen::Index>(n));
  for (const auto& t : scales) {
    const auto d = at(pair, zero, t.value());
    note_deviation(ax[2], std::abs(1.0 - d.mu), 0.0, flatten({&zero}, {t.value()}));
    note_deviation(ax[8], std::abs(d.nu), 0.0, flatten({&zero}, {t.value()}));
  }

  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Vector& x = xs[i];
    const Vector& y = ys[i];
    const double nx = norm(pair.base, x);

    double a = -5.0 + 10.0 * factor_stream.next()[0];
    if (a == 0.0) a = 1.0;
    const Vector ax_vec = a * x;
    const Vector sum = x + y;

    for (std::size_t j = 0; j < m; ++j) {
      const double t = scales[j].value();
      const double s = scales[(i + j) % m].value();
      const auto dx = at(pair, x, t);
      const auto w = flatten({&x}, {t});

      note_deviation(ax[0], std::max(0.0, dx.mu + dx.nu - 1.0), kSlack, w);
      note_deviation(ax[1], dx.mu > 0.0 ? 0.0 : 1.0, 0.0, w);
      note_deviation(ax[7], dx.nu < 1.0 ? 0.0 : 1.0, 0.0, w);
      if (nx > 0.0) {
        // Only x = 0 may reach full membership / zero non-membership.
        note_deviation(ax[2], dx.mu < 1.0 ? 0.0 : 1.0, 0.0, w);
        note_deviation(ax[8], dx.nu > 0.0 ? 0.0 : 1.0, 0.0, w);
      }

      const auto scaled = at(pair, ax_vec, t);
      const auto rescaled = at(pair, x, t / std::abs(a));
      note_deviation(ax[3], std::abs(scaled.mu - rescaled.mu), kSlack, flatten({&x}, {a, t}));
      note_deviation(ax[9], std::abs(scaled.nu - rescaled.nu), kSlack, flatten({&x}, {a, t}));

      const auto dy = at(pair, y, s);
      const auto dsum = at(pair, sum, t + s);
      note_deviation(ax[4], std::max(0.0, tnorm.apply(dx.mu, dy.mu) - dsum.mu), kSlack, flatten({&x, &y}, {t, s}));
      note_deviation(ax[10], std::max(0.0, dsum.nu - tconorm.apply(dx.nu, dy.nu)), kSlack,
                     flatten({&x, &y}, {t, s}));
    }

    if (nx >= kLimitMinNorm) {
      const auto big = at(pair, x, kLargeScale);
      const auto small = at(pair, x, kSmallScale);
      const bool mu_ok = big.mu > kLimitHigh && small.mu < kLimitLow;
      const bool nu_ok = big.nu < kLimitLow && small.nu > kLimitHigh;
      note_outcome(ax[6], mu_ok, std::max({0.0, kLimitHigh - big.mu, small.mu - kLimitLow}), flatten({&x}, {}));
      note_outcome(ax[12], nu_ok, std::max({0.0, big.nu - kLimitLow, kLimitHigh - small.nu}), flatten({&x}, {}));
    }
  }

  ax[6].note = ax[12].note = "proxy scales 1e6 / 1e-6, thresholds 0.999 / 0.001";
  for (std::size_t idx : {5, 11}) {
    ax[idx].status = CheckStatus::assumed;
    ax[idx].note = "continuity in t holds by construction";
  }

  const auto idem_t = check_idempotency(tnorm, 101);
  const auto idem_c = check_idempotency(tconorm, 101);
  auto& xiv = ax[13];
  xiv.optional = true;
  const auto& ct = idem_t.checks.front();
  const auto& cc = idem_c.checks.front();
  xiv.evaluations = ct.evaluations + cc.evaluations;
  xiv.worst_deviation = std::max(ct.worst_deviation, cc.worst_deviation);
  xiv.status = (ct.status == CheckStatus::pass && cc.status == CheckStatus::pass) ? CheckStatus::pass
                                                                                   : CheckStatus::fail;
  if (xiv.status == CheckStatus::fail) xiv.witness = ct.status == CheckStatus::fail ? ct.witness : cc.witness;
  xiv.note = "idempotency of t-norm (" + std::string(tnorm.name()) + ") and t-conorm (" +
             std::string(tconorm.name()) + ")";
  return report;
}

AxiomReport check_lemma1(const FuzzyNormPair& pair, std::span<const Vector> points, std::span<const Scale> scales) {
  if (points.empty() || scales.empty()) throw InputError("lemma 1 check needs points and scales");
  std::vector<double> ts;
  for (const auto& s : scales) ts.push_back(s.value());
  std::sort(ts.begin(), ts.end());

  AxiomReport report;
  report.checks.resize(2);
  auto& mono = report.checks[0];
  auto& sym = report.checks[1];
  mono.name = "scale-monotonicity";
  sym.name = "symmetry";

  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vector& x = points[i];
    for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
      const auto lo = at(pair, x, ts[j]);
      const auto hi = at(pair, x, ts[j + 1]);
      const double dev = std::max(std::max(0.0, lo.mu - hi.mu), std::max(0.0, hi.nu - lo.nu));
      note_deviation(mono, dev, kSlack, flatten({&x}, {ts[j], ts[j + 1]}));
    }
    if (ts.size() == 1) note_deviation(mono, 0.0, kSlack, {});

    const Vector& y = points[(i + 1) % points.size()];
    const Vector xy = x - y;
    const Vector yx = y - x;
    for (double t : ts) {
      const auto a = at(pair, xy, t);
      const auto b = at(pair, yx, t);
      const double dev = std::max(std::abs(a.mu - b.mu), std::abs(a.nu - b.nu));
      note_deviation(sym, dev, kSlack, flatten({&x, &y}, {t}));
    }
  }
  return report;
}

AxiomReport check_lemma1(const FuzzyNormPair& pair, const SamplePlan& plan) {
  const auto points = sample_box(Box::cube(pair.dimension, -plan.radius, plan.radius), plan.points, plan.seed);
  const auto scales = plan.scales();
  return check_lemma1(pair, points, scales);
}

ConvergenceVerdict assess_convergence(const FuzzyNormPair& pair, std::span<const Vector> seq, const Vector& limit,
                                      std::span<const Scale> scales, double eps) {
  if (scales.empty()) throw InputError("convergence check needs at least one scale");
  if (seq.empty()) throw InputError("convergence check needs a nonempty sequence");
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0,1)");

  ConvergenceVerdict verdict;
  verdict.length = seq.size();
  std::size_t first = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const Vector diff = seq[k] - limit;
    for (const auto& t : scales) {
      const auto d = eval_pair(pair, diff, t);
      if (!(d.mu > 1.0 - eps && d.nu < eps)) {
        first = k + 1;
        break;
      }
    }
  }
  if (first < seq.size()) verdict.first_index = first;
  return verdict;
}

AxiomReport check_lemma2(const FuzzyNormPair& pair, std::span<const Vector> seq_x, std::span<const Vector> seq_y,
                         const Vector& x, const Vector& y, Scale t) {
  AxiomReport report;
  report.checks.resize(2);
  auto& mu_side = report.checks[0];
  auto& nu_side = report.checks[1];
  mu_side.name = "mu-liminf";
  nu_side.name = "nu-limsup";

  constexpr double kPrecondEps = 1e-3;
  constexpr double kTolerance = 1e-6;
  const std::array<Scale, 1> scales{t};
  const bool applicable = seq_x.size() == seq_y.size() && !seq_x.empty() &&
                          assess_convergence(pair, seq_x, x, scales, kPrecondEps).attained() &&
                          assess_convergence(pair, seq_y, y, scales, kPrecondEps).attained();
  if (!applicable) {
    for (auto& c : report.checks) {
      c.status = CheckStatus::inapplicable;
      c.note = "sequences do not converge to the given limits at eps = 1e-3";
    }
    return report;
  }

  const std::size_t len = seq_x.size();
  const std::size_t tail = std::max<std::size_t>(1, (len + 3) / 4);
  double inf_mu = 1.0;
  double sup_nu = 0.0;
  for (std::size_t k = len - tail; k < len; ++k) {
    const auto d = eval_pair(pair, Vector(seq_x[k] - seq_y[k]), t);
    inf_mu = std::min(inf_mu, d.mu);
    sup_nu = std::max(sup_nu, d.nu);
  }
  const auto limit = eval_pair(pair, Vector(x - y), t);
  note_deviation(mu_side, std::max(0.0, limit.mu - inf_mu), kTolerance, {limit.mu, inf_mu});
  note_deviation(nu_side, std::max(0.0, sup_nu - limit.nu), kTolerance, {limit.nu, sup_nu});
  return report;
}

}  // namespace ifns
