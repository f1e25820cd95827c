#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ifns/core.hpp"
#include "ifns/fuzzy_norm.hpp"
#include "ifns/map_spec.hpp"
#include "ifns/sampling.hpp"
#include "ifns/tnorm.hpp"

namespace ifns {

enum class ClassKind { contraction, nonexpansive, kannan, chatterjea, zamfirescu, weak_contraction };

ClassKind class_kind_from_name(std::string_view name);
std::string_view to_string(ClassKind k) noexcept;

/// Contraction class together with its modulus parameters.
///   contraction:      a in (0,1)
///   kannan/chatterjea a in (0,1/2)
///   zamfirescu:       a in (0,1), k in (0,1/2), c in (0,1/2)
///   weak_contraction: a in (0,1), L >= 0
class ClassSpec {
 public:
  static ClassSpec contraction(double a);
  static ClassSpec nonexpansive();
  static ClassSpec kannan(double a);
  static ClassSpec chatterjea(double a);
  static ClassSpec zamfirescu(double a, double k, double c);
  static ClassSpec weak_contraction(double a, double L);

  /// Same parameters without range validation, for probing the closed end
  /// of a legal interval (e.g. contraction with a = 1).
  static ClassSpec relaxed(ClassKind kind, double a, double k = 0.0, double c = 0.0, double L = 0.0);

  ClassKind kind() const noexcept { return kind_; }
  double a() const noexcept { return a_; }
  double k() const noexcept { return k_; }
  double c() const noexcept { return c_; }
  double L() const noexcept { return L_; }

  /// Zamfirescu only: which of the three alternative conditions may be used.
  const std::array<bool, 3>& zamfirescu_conditions() const noexcept { return conditions_; }
  ClassSpec with_conditions(bool i, bool ii, bool iii) const;

 private:
  ClassSpec(ClassKind kind, double a, double k, double c, double L) : kind_(kind), a_(a), k_(k), c_(c), L_(L) {}

  ClassKind kind_;
  double a_;
  double k_;
  double c_;
  double L_;
  std::array<bool, 3> conditions_{true, true, true};
};

/// Both sides of one class inequality at one (x, y, t).
struct SideValues {
  double mu_lhs = 1.0, mu_rhs = 1.0;
  double nu_lhs = 0.0, nu_rhs = 0.0;
  double mu_margin() const noexcept { return mu_lhs - mu_rhs; }
  double nu_margin() const noexcept { return nu_rhs - nu_lhs; }
  bool mu_holds() const noexcept { return mu_margin() >= -kSlack; }
  bool nu_holds() const noexcept { return nu_margin() >= -kSlack; }
  bool holds() const noexcept { return mu_holds() && nu_holds(); }
};

struct PointCheck {
  bool holds = true;
  /// Values of the deciding inequality (for Zamfirescu: the best condition).
  SideValues values;
  /// Zamfirescu: index (0..2) of the condition used, if any held.
  std::optional<std::size_t> condition;
};

/// Evaluates the class predicate at a single (x, y, t).
PointCheck check_class_at(const MapSpec& f, const FuzzyNormPair& pair, const TriangularOp& tnorm,
                          const TriangularOp& tconorm, const ClassSpec& spec, const Vector& x, const Vector& y,
                          Scale t);

struct Violation {
  Vector x;
  Vector y;
  double t = 1.0;
  SideValues values;
  std::string side;  // "mu" or "nu"
};

struct ClassVerdict {
  ClassKind kind = ClassKind::contraction;
  ClassSpec spec = ClassSpec::nonexpansive();
  bool holds_on_sample = true;
  std::optional<Violation> violation_witness;
  std::size_t pairs_tested = 0;
  std::size_t scales_tested = 0;
  std::uint64_t seed = 0;
  /// Minimum over evaluated points of mu-lhs - mu-rhs and nu-rhs - nu-lhs.
  double mu_margin = 0.0;
  double nu_margin = 0.0;
  double margin() const noexcept { return std::min(mu_margin, nu_margin); }
  std::string note;
};

/// Tests the class inequalities at every sampled pair (x != y) of f's
/// domain and every plan scale. First violation by sample index wins.
ClassVerdict check_class(const MapSpec& f, const FuzzyNormPair& pair, const TriangularOp& tnorm,
                         const TriangularOp& tconorm, const ClassSpec& spec, const SamplePlan& plan,
                         Parallelism par = {});

struct ModulusFit {
  std::optional<double> best_param;  // empty: none in range
  double supremum = 1.0;
  ClassVerdict verdict;
  std::size_t bisection_steps = 0;
};

inline constexpr double kModulusResolution = 1e-6;

/// Smallest modulus (to 1e-6) whose verdict holds on the sample.
/// For weak contraction the caller fixes L and the fit is over a.
ModulusFit fit_modulus(const MapSpec& f, const FuzzyNormPair& pair, const TriangularOp& tnorm,
                       const TriangularOp& tconorm, ClassKind kind, const SamplePlan& plan, double weak_L = 0.0,
                       Parallelism par = {});

}  // namespace ifns
