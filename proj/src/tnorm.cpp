#include "ifns/tnorm.hpp"

#include <algorithm>
#include <cmath>

#include "ifns/core.hpp"
#include "ifns/sampling.hpp"
#include "check_util.hpp"

namespace ifns {

TriangularOp::TriangularOp(OpFamily family) : family_(family) {
  switch (family) {
    case OpFamily::product:
    case OpFamily::minimum:
    case OpFamily::lukasiewicz_product:
      kind_ = OpKind::tnorm;
      break;
    case OpFamily::maximum:
    case OpFamily::lukasiewicz_sum:
      kind_ = OpKind::tconorm;
      break;
  }
}

TriangularOp TriangularOp::from_name(std::string_view name) {
  if (name == "product") return TriangularOp(OpFamily::product);
  if (name == "min") return TriangularOp(OpFamily::minimum);
  if (name == "max") return TriangularOp(OpFamily::maximum);
  if (name == "lukasiewicz_sum") return TriangularOp(OpFamily::lukasiewicz_sum);
  if (name == "lukasiewicz_product") return TriangularOp(OpFamily::lukasiewicz_product);
  throw InputError("unknown triangular operation '" + std::string(name) + "'");
}

std::string_view TriangularOp::name() const noexcept {
  switch (family_) {
    case OpFamily::product:
      return "product";
    case OpFamily::minimum:
      return "min";
    case OpFamily::maximum:
      return "max";
    case OpFamily::lukasiewicz_sum:
      return "lukasiewicz_sum";
    case OpFamily::lukasiewicz_product:
      return "lukasiewicz_product";
  }
  return "?";
}

double TriangularOp::apply(double a, double b) const noexcept {
  switch (family_) {
    case OpFamily::product:
      return a * b;
    case OpFamily::minimum:
      return std::min(a, b);
    case OpFamily::maximum:
      return std::max(a, b);
    case OpFamily::lukasiewicz_sum:
      return std::min(a + b, 1.0);
    case OpFamily::lukasiewicz_product:
      return std::max(a + b - 1.0, 0.0);
  }
  return 0.0;
}

double eval_op(const TriangularOp& op, double a, double b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw DomainError("triangular operation arguments must lie in [0,1]");
  }
  return op.apply(a, b);
}

using detail::note_deviation;

AxiomReport check_op_axioms(OpKind kind, const RawOp& op, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count == 0) throw InputError("sample_count must be >= 1");

  AxiomReport report;
  report.checks.resize(5);
  auto& assoc = report.checks[0];
  auto& comm = report.checks[1];
  auto& mono = report.checks[2];
  auto& ident = report.checks[3];
  auto& range = report.checks[4];
  assoc.name = "associativity";
  comm.name = "commutativity";
  mono.name = "monotonicity";
  ident.name = "identity";
  range.name = "range";

  const double e = kind == OpKind::tnorm ? 1.0 : 0.0;
  QuasiRandom qr(4, seed);

  auto run = [&](double a, double b, double c, double d) {
    const double ab = op(a, b);
    const double out_of_range = ab < 0.0 ? -ab : (ab > 1.0 ? ab - 1.0 : (std::isnan(ab) ? ab : 0.0));
    note_deviation(range, out_of_range, 0.0, {a, b});

    note_deviation(comm, std::abs(ab - op(b, a)), kSlack, {a, b});
    note_deviation(assoc, std::abs(op(ab, c) - op(a, op(b, c))), kSlack, {a, b, c});

    const double lo1 = std::min(a, c), hi1 = std::max(a, c);
    const double lo2 = std::min(b, d), hi2 = std::max(b, d);
    note_deviation(mono, std::max(0.0, op(lo1, lo2) - op(hi1, hi2)), kSlack, {lo1, lo2, hi1, hi2});

    note_deviation(ident, std::abs(op(a, e) - a), kSlack, {a});
  };

  // Corner probes first, then the quasi-random body.
  for (double a : {0.0, 1.0}) {
    for (double b : {0.0, 1.0}) run(a, b, a, b);
  }
  for (std::size_t i = 0; i < sample_count; ++i) {
    const auto u = qr.next();
    run(u[0], u[1], u[2], u[3]);
  }
  return report;
}

AxiomReport check_op_axioms(const TriangularOp& op, std::size_t sample_count, std::uint64_t seed) {
  return check_op_axioms(op.kind(), [&op](double a, double b) { return op.apply(a, b); }, sample_count, seed);
}

AxiomReport check_idempotency(const TriangularOp& op, std::size_t grid_count) {
  if (grid_count < 2) throw InputError("grid_count must be >= 2");
  AxiomReport report;
  auto& check = report.add("idempotency");
  double worst_at = 0.0;
  for (std::size_t i = 0; i < grid_count; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(grid_count - 1);
    const double dev = std::abs(op.apply(a, a) - a);
    ++check.evaluations;
    if (dev > check.worst_deviation) {
      check.worst_deviation = dev;
      worst_at = a;
    }
  }
  check.witness = {worst_at};
  check.status = check.worst_deviation <= kSlack ? CheckStatus::pass : CheckStatus::fail;
  return report;
}

}  // namespace ifns
