#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "ifns/core.hpp"
#include "ifns/report.hpp"

namespace ifns::detail {

/// Records one evaluation; the first deviation beyond tolerance fails the
/// check and fixes its witness.
inline void note_deviation(AxiomCheck& check, double deviation, double tolerance, const std::vector<double>& witness) {
  ++check.evaluations;
  if (!(deviation <= tolerance) && check.status != CheckStatus::fail) {
    check.status = CheckStatus::fail;
    check.witness = witness;
  }
  if (std::isnan(deviation)) {
    check.worst_deviation = deviation;
  } else if (!std::isnan(check.worst_deviation)) {
    check.worst_deviation = std::max(check.worst_deviation, deviation);
  }
}

/// Records a strict pass/fail outcome with an informational deviation.
inline void note_outcome(AxiomCheck& check, bool ok, double deviation, const std::vector<double>& witness) {
  ++check.evaluations;
  if (!ok && check.status != CheckStatus::fail) {
    check.status = CheckStatus::fail;
    check.witness = witness;
  }
  check.worst_deviation = std::max(check.worst_deviation, deviation);
}

inline std::vector<double> flatten(std::initializer_list<const Vector*> vecs, std::initializer_list<double> extra) {
  std::vector<double> out;
  for (const Vector* v : vecs) out.insert(out.end(), v->data(), v->data() + v->size());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

}  // namespace ifns::detail
