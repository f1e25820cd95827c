#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ifns/core.hpp"
#include "ifns/report.hpp"
#include "ifns/sampling.hpp"
#include "ifns/tnorm.hpp"

namespace ifns {

enum class BaseNorm { absolute, euclidean, max };

BaseNorm base_norm_from_name(std::string_view name);
std::string_view to_string(BaseNorm b) noexcept;

/// Classical norm of x. `absolute` is only defined for n == 1.
template <typename Derived>
double norm(BaseNorm base, const Eigen::MatrixBase<Derived>& x) {
  switch (base) {
    case BaseNorm::absolute:
      if (x.size() != 1) throw InputError("absolute base norm requires dimension 1");
      return std::abs(x(0));
    case BaseNorm::euclidean:
      return x.norm();
    case BaseNorm::max:
      return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
  }
  return 0.0;
}

enum class Construction { standard };

/// Membership / non-membership degrees of one evaluation.
struct Degrees {
  double mu;
  double nu;
};

/// Intuitionistic fuzzy norm (mu, nu) induced by a classical norm:
/// mu(x,t) = t / (t + |x|), nu(x,t) = |x| / (t + |x|).
struct FuzzyNormPair {
  Construction construction = Construction::standard;
  BaseNorm base = BaseNorm::absolute;
  std::size_t dimension = 1;

  static FuzzyNormPair standard(BaseNorm base, std::size_t dimension = 1);
};

/// Degrees of a vector whose classical norm is already known. t may be +inf
/// (treated as the limit (1, 0)).
inline Degrees degrees_from_norm(double norm_value, double t) noexcept {
  if (std::isinf(t)) return {1.0, 0.0};
  const double denom = t + norm_value;
  return {t / denom, norm_value / denom};
}

template <typename Derived>
Degrees eval_pair(const FuzzyNormPair& pair, const Eigen::MatrixBase<Derived>& x, Scale t) {
  return degrees_from_norm(norm(pair.base, x), t.value());
}

/// Evaluation at a raw scale that the caller already knows to be positive;
/// scales beyond the largest double saturate instead of overflowing.
template <typename Derived>
Degrees eval_pair_unchecked(const FuzzyNormPair& pair, const Eigen::MatrixBase<Derived>& x, double t) {
  return degrees_from_norm(norm(pair.base, x), t);
}

/// Samples the fuzzy-norm axioms (i)-(xiii); (vi) and (xii) are reported as
/// assumed, (xiv) is an optional flag delegated to check_idempotency.
AxiomReport check_ifn_axioms(const FuzzyNormPair& pair, const TriangularOp& tnorm, const TriangularOp& tconorm,
                             const SamplePlan& plan);

/// Scale monotonicity and sign symmetry on explicit points and scales.
AxiomReport check_lemma1(const FuzzyNormPair& pair, std::span<const Vector> points, std::span<const Scale> scales);
AxiomReport check_lemma1(const FuzzyNormPair& pair, const SamplePlan& plan);

struct ConvergenceVerdict {
  /// First index from which every remaining term is within eps at every scale.
  std::optional<std::size_t> first_index;
  std::size_t length = 0;
  bool attained() const noexcept { return first_index.has_value(); }
};

ConvergenceVerdict assess_convergence(const FuzzyNormPair& pair, std::span<const Vector> seq, const Vector& limit,
                                      std::span<const Scale> scales, double eps);

/// Limit-inequality check mu(x-y,t) <= tail-inf mu(x_k-y_k,t) (and the dual
/// for nu) over the last quarter of the sequences.
AxiomReport check_lemma2(const FuzzyNormPair& pair, std::span<const Vector> seq_x, std::span<const Vector> seq_y,
                         const Vector& x, const Vector& y, Scale t);

}  // namespace ifns
