#include "ifns/report_json.hpp"

#include <cstdio>

namespace ifns {

using nlohmann::json;

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json vector_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

namespace {

json optional_vector(const std::optional<Vector>& v) { return v ? vector_json(*v) : json(nullptr); }

json side_values(const SideValues& v) {
  return {{"mu_lhs", v.mu_lhs}, {"mu_rhs", v.mu_rhs}, {"nu_lhs", v.nu_lhs}, {"nu_rhs", v.nu_rhs}};
}

}  // namespace

void to_json(json& j, const AxiomCheck& c) {
  j = {{"name", c.name},
       {"status", to_string(c.status)},
       {"witness", c.witness},
       {"worst_deviation", c.worst_deviation},
       {"evaluations", c.evaluations},
       {"optional", c.optional}};
  if (!c.note.empty()) j["note"] = c.note;
}

void to_json(json& j, const AxiomReport& r) {
  j = {{"passed", r.passed()}, {"checks", r.checks}};
}

void to_json(json& j, const ConvergenceVerdict& v) {
  j = {{"attained", v.attained()},
       {"first_index", v.first_index ? json(*v.first_index) : json(nullptr)},
       {"length", v.length}};
}

void to_json(json& j, const SelfMapReport& r) {
  j = {{"holds", r.holds},
       {"samples", r.samples},
       {"violations", r.violations},
       {"worst_x", optional_vector(r.worst_x)},
       {"worst_fx", optional_vector(r.worst_fx)},
       {"worst_excess", std::isfinite(r.worst_excess) ? json(r.worst_excess) : json("inf")}};
  if (!r.worst_error.empty()) j["worst_error"] = r.worst_error;
}

void to_json(json& j, const ClassSpec& s) {
  j = {{"kind", to_string(s.kind())}};
  switch (s.kind()) {
    case ClassKind::nonexpansive:
      break;
    case ClassKind::contraction:
    case ClassKind::kannan:
    case ClassKind::chatterjea:
      j["a"] = s.a();
      break;
    case ClassKind::zamfirescu:
      j["a"] = s.a();
      j["k"] = s.k();
      j["c"] = s.c();
      j["conditions"] = s.zamfirescu_conditions();
      break;
    case ClassKind::weak_contraction:
      j["a"] = s.a();
      j["L"] = s.L();
      break;
  }
}

void to_json(json& j, const ClassVerdict& v) {
  j = {{"kind", to_string(v.kind)},
       {"params", v.spec},
       {"holds_on_sample", v.holds_on_sample},
       {"pairs_tested", v.pairs_tested},
       {"scales_tested", v.scales_tested},
       {"seed", v.seed},
       {"margin", v.margin()},
       {"mu_margin", v.mu_margin},
       {"nu_margin", v.nu_margin},
       {"violation_witness", nullptr}};
  if (v.violation_witness) {
    const auto& w = *v.violation_witness;
    j["violation_witness"] = {{"x", vector_json(w.x)},
                              {"y", vector_json(w.y)},
                              {"t", w.t},
                              {"side", w.side},
                              {"values", side_values(w.values)}};
  }
  if (!v.note.empty()) j["note"] = v.note;
}

void to_json(json& j, const ModulusFit& f) {
  j = {{"best_param", f.best_param ? json(*f.best_param) : json(nullptr)},
       {"none_in_range", !f.best_param.has_value()},
       {"supremum", f.supremum},
       {"resolution", kModulusResolution},
       {"bisection_steps", f.bisection_steps},
       {"verdict", f.verdict}};
}

void to_json(json& j, const EpsResidual& r) {
  j = {{"x", vector_json(r.x)}, {"t", r.t}, {"mu_res", r.mu_res}, {"nu_res", r.nu_res}, {"eps_star", r.eps_star}};
}

void to_json(json& j, const EpsMember& m) {
  j = {{"x", vector_json(m.x)}, {"mu_res", m.mu_res}, {"nu_res", m.nu_res}, {"eps_star", m.eps_star}};
}

void to_json(json& j, const EpsFixedPointSet& s) {
  j = {{"eps", s.eps},
       {"scales", s.scales},
       {"grid", s.grid},
       {"points_scanned", s.points_scanned},
       {"evaluation_errors", s.evaluation_errors},
       {"member_count", s.members.size()},
       {"nonempty", !s.empty()},
       {"members", s.members}};
}

void to_json(json& j, const OrbitRecord& o) {
  json iterates = json::array();
  for (const auto& x : o.iterates) iterates.push_back(vector_json(x));
  json steps = json::array();
  for (const auto& row : o.step_degrees) {
    json r = json::array();
    for (const auto& d : row) r.push_back({{"mu", d.mu}, {"nu", d.nu}});
    steps.push_back(std::move(r));
  }
  j = {{"x0", vector_json(o.x0)},     {"scales", o.scales},
       {"iterates", iterates},         {"step_residuals", steps},
       {"monotone_flag", o.monotone_flag}, {"truncated", o.truncated}};
  if (o.truncated) j["truncation_reason"] = o.truncation_reason;
}

void to_json(json& j, const RegularityVerdict& v) {
  j = {{"attained", v.attained()},
       {"k0", v.k0 ? json(*v.k0) : json(nullptr)},
       {"witness", optional_vector(v.witness)},
       {"t", v.t},
       {"eps", v.eps},
       {"steps", v.steps}};
}

void to_json(json& j, const BoundReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"mu_lhs", row.mu_lhs},
                    {"mu_rhs", row.mu_rhs},
                    {"nu_lhs", row.nu_lhs},
                    {"nu_rhs", row.nu_rhs},
                    {"holds", row.holds}});
  }
  j = {{"kind", to_string(r.kind)},
       {"a", r.a},
       {"rate", r.rate},
       {"t", r.t},
       {"passed", r.passed},
       {"first_failing_k", r.first_failing_k ? json(*r.first_failing_k) : json(nullptr)},
       {"orbit_truncated", r.orbit_truncated},
       {"rows", rows}};
}

void to_json(json& j, const DiameterResult& d) {
  j = {{"delta_mu", d.delta_mu},
       {"delta_nu", d.delta_nu},
       {"t", d.t},
       {"points", d.points},
       {"argmin_mu", {d.argmin_mu.first, d.argmin_mu.second}},
       {"argmax_nu", {d.argmax_nu.first, d.argmax_nu.second}}};
}

void to_json(json& j, const ChainReport& c) {
  j = {{"mu_lhs", c.mu_lhs}, {"mu_rhs", c.mu_rhs}, {"nu_lhs", c.nu_lhs},
       {"nu_rhs", c.nu_rhs}, {"mu_holds", c.mu_holds}, {"nu_holds", c.nu_holds}};
}

void to_json(json& j, const SetAfppReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"grid", l.grid}, {"sup_mu", l.sup_mu}, {"inf_nu", l.inf_nu}, {"argsup", vector_json(l.argsup)}});
  }
  j = {{"applicable", r.applicable}, {"t", r.t}, {"levels", levels}, {"monotone", r.monotone}};
  if (!r.reason.empty()) j["reason"] = r.reason;
}

std::string members_csv(const EpsFixedPointSet& set, std::size_t dimension) {
  std::string out;
  for (std::size_t i = 0; i < dimension; ++i) out += "x" + std::to_string(i + 1) + ",";
  out += "mu_res,nu_res,eps_star\n";
  for (const auto& m : set.members) {
    for (Eigen::Index i = 0; i < m.x.size(); ++i) out += format_g17(m.x(i)) + ",";
    out += format_g17(m.mu_res) + "," + format_g17(m.nu_res) + "," + format_g17(m.eps_star) + "\n";
  }
  return out;
}

}  // namespace ifns
