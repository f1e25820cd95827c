#include "ifns/classifier.hpp"

#include <exception>
#include <limits>
#include <string>

namespace ifns {

ClassKind class_kind_from_name(std::string_view name) {
  if (name == "contraction") return ClassKind::contraction;
  if (name == "nonexpansive") return ClassKind::nonexpansive;
  if (name == "kannan") return ClassKind::kannan;
  if (name == "chatterjea") return ClassKind::chatterjea;
  if (name == "zamfirescu") return ClassKind::zamfirescu;
  if (name == "weak_contraction" || name == "weak-contraction") return ClassKind::weak_contraction;
  throw InputError("unknown class kind '" + std::string(name) + "'");
}

std::string_view to_string(ClassKind k) noexcept {
  switch (k) {
    case ClassKind::contraction:
      return "contraction";
    case ClassKind::nonexpansive:
      return "nonexpansive";
    case ClassKind::kannan:
      return "kannan";
    case ClassKind::chatterjea:
      return "chatterjea";
    case ClassKind::zamfirescu:
      return "zamfirescu";
    case ClassKind::weak_contraction:
      return "weak_contraction";
  }
  return "?";
}

namespace {

void require_open(double v, double lo, double hi, const char* what) {
  if (!(v > lo && v < hi)) {
    throw InputError(std::string(what) + " must lie in (" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "), got " + std::to_string(v));
  }
}

}  // namespace

ClassSpec ClassSpec::contraction(double a) {
  require_open(a, 0.0, 1.0, "contraction modulus a");
  return ClassSpec(ClassKind::contraction, a, 0.0, 0.0, 0.0);
}

ClassSpec ClassSpec::nonexpansive() { return ClassSpec(ClassKind::nonexpansive, 1.0, 0.0, 0.0, 0.0); }

ClassSpec ClassSpec::kannan(double a) {
  require_open(a, 0.0, 0.5, "Kannan modulus a");
  return ClassSpec(ClassKind::kannan, a, 0.0, 0.0, 0.0);
}

ClassSpec ClassSpec::chatterjea(double a) {
  require_open(a, 0.0, 0.5, "Chatterjea modulus a");
  return ClassSpec(ClassKind::chatterjea, a, 0.0, 0.0, 0.0);
}

ClassSpec ClassSpec::zamfirescu(double a, double k, double c) {
  require_open(a, 0.0, 1.0, "Zamfirescu modulus a");
  require_open(k, 0.0, 0.5, "Zamfirescu modulus k");
  require_open(c, 0.0, 0.5, "Zamfirescu modulus c");
  return ClassSpec(ClassKind::zamfirescu, a, k, c, 0.0);
}

ClassSpec ClassSpec::weak_contraction(double a, double L) {
  require_open(a, 0.0, 1.0, "weak contraction modulus a");
  if (!(L >= 0.0) || !std::isfinite(L)) throw InputError("weak contraction L must be finite and >= 0");
  return ClassSpec(ClassKind::weak_contraction, a, 0.0, 0.0, L);
}

ClassSpec ClassSpec::relaxed(ClassKind kind, double a, double k, double c, double L) {
  if (kind == ClassKind::nonexpansive) a = 1.0;
  if (!(a > 0.0) || !std::isfinite(a)) throw InputError("modulus must be finite and > 0");
  return ClassSpec(kind, a, k, c, L);
}

ClassSpec ClassSpec::with_conditions(bool i, bool ii, bool iii) const {
  if (!(i || ii || iii)) throw InputError("at least one Zamfirescu condition must be enabled");
  ClassSpec copy = *this;
  copy.conditions_ = {i, ii, iii};
  return copy;
}

namespace {

struct Images {
  Vector fx;
  Vector fy;
};

Degrees deg(const FuzzyNormPair& pair, const Vector& v, double t) { return eval_pair_unchecked(pair, v, t); }

// mu(f(x)-f(y), scale*t) against the Banach-type right side mu(x-y, t).
SideValues banach_side(const FuzzyNormPair& pair, const Vector& x, const Vector& y, const Images& im, double modulus,
                       double t) {
  const auto lhs = deg(pair, Vector(im.fx - im.fy), modulus * t);
  const auto rhs = deg(pair, Vector(x - y), t);
  return {lhs.mu, rhs.mu, lhs.nu, rhs.nu};
}

SideValues kannan_side(const FuzzyNormPair& pair, const TriangularOp& tn, const TriangularOp& tc, const Vector& x,
                       const Vector& y, const Images& im, double modulus, double t) {
  const auto lhs = deg(pair, Vector(im.fx - im.fy), modulus * t);
  const auto dx = deg(pair, Vector(x - im.fx), t);
  const auto dy = deg(pair, Vector(y - im.fy), t);
  return {lhs.mu, tn.apply(dx.mu, dy.mu), lhs.nu, tc.apply(dx.nu, dy.nu)};
}

SideValues chatterjea_side(const FuzzyNormPair& pair, const TriangularOp& tn, const TriangularOp& tc,
                           const Vector& x, const Vector& y, const Images& im, double modulus, double t) {
  const auto lhs = deg(pair, Vector(im.fx - im.fy), modulus * t);
  const auto d1 = deg(pair, Vector(x - im.fy), t);
  const auto d2 = deg(pair, Vector(y - im.fx), t);
  return {lhs.mu, tn.apply(d1.mu, d2.mu), lhs.nu, tc.apply(d1.nu, d2.nu)};
}

SideValues weak_side(const FuzzyNormPair& pair, const TriangularOp& tn, const TriangularOp& tc, const Vector& x,
                     const Vector& y, const Images& im, double a, double L, double t) {
  const auto lhs = deg(pair, Vector(im.fx - im.fy), t);
  const auto first = deg(pair, Vector(x - y), t / a);
  // L = 0 drops the cross factor: t/L is infinite and mu(., inf) = 1, nu(., inf) = 0.
  const auto cross = L > 0.0 ? deg(pair, Vector(y - im.fx), t / L) : Degrees{1.0, 0.0};
  return {lhs.mu, tn.apply(first.mu, cross.mu), lhs.nu, tc.apply(first.nu, cross.nu)};
}

double side_margin(const SideValues& v) { return std::min(v.mu_margin(), v.nu_margin()); }

PointCheck evaluate(const FuzzyNormPair& pair, const TriangularOp& tn, const TriangularOp& tc, const ClassSpec& spec,
                    const Vector& x, const Vector& y, const Images& im, double t) {
  PointCheck out;
  switch (spec.kind()) {
    case ClassKind::contraction:
    case ClassKind::nonexpansive:
      out.values = banach_side(pair, x, y, im, spec.a(), t);
      break;
    case ClassKind::kannan:
      out.values = kannan_side(pair, tn, tc, x, y, im, spec.a(), t);
      break;
    case ClassKind::chatterjea:
      out.values = chatterjea_side(pair, tn, tc, x, y, im, spec.a(), t);
      break;
    case ClassKind::weak_contraction:
      out.values = weak_side(pair, tn, tc, x, y, im, spec.a(), spec.L(), t);
      break;
    case ClassKind::zamfirescu: {
      const auto& enabled = spec.zamfirescu_conditions();
      std::optional<SideValues> best;
      double best_margin = -std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < 3; ++c) {
        if (!enabled[c]) continue;
        const SideValues v = c == 0   ? banach_side(pair, x, y, im, spec.a(), t)
                             : c == 1 ? kannan_side(pair, tn, tc, x, y, im, spec.k(), t)
                                      : chatterjea_side(pair, tn, tc, x, y, im, spec.c(), t);
        if (v.holds() && !out.condition) out.condition = c;
        if (!best || side_margin(v) > best_margin) {
          best = v;
          best_margin = side_margin(v);
        }
      }
      out.values = *best;
      out.holds = out.condition.has_value();
      return out;
    }
  }
  out.holds = out.values.holds();
  return out;
}

void require_ops(const TriangularOp& tnorm, const TriangularOp& tconorm) {
  if (tnorm.kind() != OpKind::tnorm) throw InputError(std::string(tnorm.name()) + " is not a t-norm");
  if (tconorm.kind() != OpKind::tconorm) throw InputError(std::string(tconorm.name()) + " is not a t-conorm");
}

struct ChunkResult {
  double mu_margin = std::numeric_limits<double>::infinity();
  double nu_margin = std::numeric_limits<double>::infinity();
  std::size_t pairs = 0;
  std::optional<Violation> violation;
  std::exception_ptr error;
};

}  // namespace

PointCheck check_class_at(const MapSpec& f, const FuzzyNormPair& pair, const TriangularOp& tnorm,
                          const TriangularOp& tconorm, const ClassSpec& spec, const Vector& x, const Vector& y,
                          Scale t) {
  require_ops(tnorm, tconorm);
  const Images im{eval_map(f, x), eval_map(f, y)};
  return evaluate(pair, tnorm, tconorm, spec, x, y, im, t.value());
}

ClassVerdict check_class(const MapSpec& f, const FuzzyNormPair& pair, const TriangularOp& tnorm,
                         const TriangularOp& tconorm, const ClassSpec& spec, const SamplePlan& plan,
                         Parallelism par) {
  require_ops(tnorm, tconorm);
  if (plan.points == 0) throw InputError("sample plan needs at least one pair");
  if (pair.dimension != f.dimension) throw InputError("fuzzy norm and map dimensions differ");

  // Pairs (x, y) come from one quasi-random stream over domain x domain.
  std::vector<Interval> doubled = f.domain.sides();
  doubled.insert(doubled.end(), f.domain.sides().begin(), f.domain.sides().end());
  const auto joint = sample_box(Box(doubled), plan.points, plan.seed);
  const auto n = static_cast<Eigen::Index>(f.dimension);
  const auto scales = plan.scales();

  std::vector<ChunkResult> chunks(chunk_count(joint.size(), par));
  parallel_chunks(joint.size(), par, [&](std::size_t begin, std::size_t end, std::size_t c) {
    ChunkResult& r = chunks[c];
    try {
      for (std::size_t i = begin; i < end && !r.violation; ++i) {
        const Vector x = joint[i].head(n);
        const Vector y = joint[i].tail(n);
        if (x == y) continue;
        ++r.pairs;
        const Images im{eval_map(f, x), eval_map(f, y)};
        for (const auto& t : scales) {
          const auto pc = evaluate(pair, tnorm, tconorm, spec, x, y, im, t.value());
          r.mu_margin = std::min(r.mu_margin, pc.values.mu_margin());
          r.nu_margin = std::min(r.nu_margin, pc.values.nu_margin());
          if (!pc.holds) {
            r.violation = Violation{x, y, t.value(), pc.values, pc.values.mu_holds() ? "nu" : "mu"};
            break;
          }
        }
      }
    } catch (...) {
      r.error = std::current_exception();
    }
  });

  ClassVerdict verdict;
  verdict.kind = spec.kind();
  verdict.spec = spec;
  verdict.seed = plan.seed;
  verdict.scales_tested = scales.size();
  verdict.mu_margin = std::numeric_limits<double>::infinity();
  verdict.nu_margin = std::numeric_limits<double>::infinity();
  for (auto& r : chunks) {
    if (r.error) std::rethrow_exception(r.error);
    verdict.pairs_tested += r.pairs;
    verdict.mu_margin = std::min(verdict.mu_margin, r.mu_margin);
    verdict.nu_margin = std::min(verdict.nu_margin, r.nu_margin);
    if (r.violation) {
      verdict.holds_on_sample = false;
      verdict.violation_witness = std::move(r.violation);
      break;
    }
  }
  if (verdict.pairs_tested == 0) verdict.mu_margin = verdict.nu_margin = 0.0;
  if (spec.kind() == ClassKind::contraction || spec.kind() == ClassKind::nonexpansive) {
    verdict.note = "nu-side compared against nu(x - y, t)";
  } else if (spec.kind() == ClassKind::weak_contraction && spec.L() == 0.0) {
    verdict.note = "L = 0: cross factor dropped";
  }
  return verdict;
}

ModulusFit fit_modulus(const MapSpec& f, const FuzzyNormPair& pair, const TriangularOp& tnorm,
                       const TriangularOp& tconorm, ClassKind kind, const SamplePlan& plan, double weak_L,
                       Parallelism par) {
  ModulusFit fit;
  switch (kind) {
    case ClassKind::contraction:
    case ClassKind::weak_contraction:
      fit.supremum = 1.0;
      break;
    case ClassKind::kannan:
    case ClassKind::chatterjea:
      fit.supremum = 0.5;
      break;
    default:
      throw InputError("fit_modulus supports contraction, kannan, chatterjea and weak_contraction");
  }
  if (kind == ClassKind::weak_contraction && (!(weak_L >= 0.0) || !std::isfinite(weak_L))) {
    throw InputError("weak contraction L must be finite and >= 0");
  }

  auto check = [&](double a) {
    return check_class(f, pair, tnorm, tconorm, ClassSpec::relaxed(kind, a, 0.0, 0.0, weak_L), plan, par);
  };

  fit.verdict = check(fit.supremum);
  if (!fit.verdict.holds_on_sample) return fit;

  double lo = 0.0;
  double hi = fit.supremum;
  while (hi - lo > kModulusResolution) {
    const double mid = 0.5 * (lo + hi);
    auto v = check(mid);
    ++fit.bisection_steps;
    if (v.holds_on_sample) {
      hi = mid;
      fit.verdict = std::move(v);
    } else {
      lo = mid;
    }
  }
  // Only the excluded endpoint itself holds: no legal modulus.
  if (hi < fit.supremum) fit.best_param = hi;
  return fit;
}

}  // namespace ifns
