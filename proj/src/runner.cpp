#include "ifns/runner.hpp"

#include <chrono>

#include "ifns/afp.hpp"
#include "ifns/report_json.hpp"

namespace ifns {

using nlohmann::json;

namespace {

struct Outcome {
  json payload;
  bool ok = true;
  std::string summary;
  std::optional<std::string> csv;
};

SamplePlan plan_for(const RunConfig& cfg, std::size_t points) { return SamplePlan::with_seed(*cfg.seed, points); }

Outcome run_axioms(const RunConfig& cfg) {
  SamplePlan plan = plan_for(cfg, cfg.axioms.samples);
  plan.scale_count = cfg.axioms.scale_count;
  const auto report = check_ifn_axioms(cfg.space.pair, cfg.space.tnorm, cfg.space.tconorm, plan);
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.status == CheckStatus::fail && !c.optional;
  return {report, report.passed(),
          report.passed() ? "axioms: all required checks pass" : "axioms: " + std::to_string(failed) + " failed",
          std::nullopt};
}

Outcome run_classify(const RunConfig& cfg, Parallelism par) {
  const MapSpec& f = *cfg.map;
  const SamplePlan plan = plan_for(cfg, cfg.classify.samples);
  const auto verdict = check_class(f, cfg.space.pair, cfg.space.tnorm, cfg.space.tconorm, class_spec(cfg), plan, par);
  Outcome out;
  out.payload = {{"verdict", verdict}, {"self_map", check_self_map(f, plan)}};
  if (cfg.classify.fit) {
    out.payload["fit"] =
        fit_modulus(f, cfg.space.pair, cfg.space.tnorm, cfg.space.tconorm, cfg.classify.kind, plan, cfg.classify.L, par);
  }
  out.ok = verdict.holds_on_sample;
  out.summary = std::string("classify ") + std::string(to_string(verdict.kind)) + ": " +
                (verdict.holds_on_sample ? "holds on " : "violated within ") + std::to_string(verdict.pairs_tested) +
                " pairs";
  return out;
}

Outcome run_scan(const RunConfig& cfg, Parallelism par) {
  const auto set = scan_f_epsilon(*cfg.map, cfg.space.pair, cfg.afp.eps, cfg.afp.scales, cfg.afp.grid, par);
  Outcome out{set, !set.empty(),
              "scan: " + std::to_string(set.members.size()) + " of " + std::to_string(set.points_scanned) +
                  " grid points are eps-fixed",
              std::nullopt};
  if (cfg.output.format == OutputFormat::csv) out.csv = members_csv(set, cfg.map->dimension);
  return out;
}

OrbitRecord orbit_for(const RunConfig& cfg) {
  return picard_orbit(*cfg.map, *cfg.afp.x0, cfg.afp.orbit_steps, cfg.space.pair, cfg.afp.scales);
}

Outcome run_orbit(const RunConfig& cfg) {
  const auto orbit = orbit_for(cfg);
  return {orbit, !orbit.truncated,
          orbit.truncated ? "orbit: truncated, " + orbit.truncation_reason
                          : "orbit: " + std::to_string(orbit.steps()) + " steps",
          std::nullopt};
}

Outcome run_regularity(const RunConfig& cfg) {
  const auto orbit = orbit_for(cfg);
  Outcome out;
  out.payload = {{"orbit_truncated", orbit.truncated}, {"verdicts", json::array()}};
  for (const auto& t : cfg.afp.scales) {
    const auto v = detect_asymptotic_regularity(orbit, cfg.afp.eps, t);
    out.ok = out.ok && v.attained();
    out.payload["verdicts"].push_back(v);
  }
  out.summary = out.ok ? "regularity: attained at every scale" : "regularity: not attained within the orbit";
  return out;
}

Outcome run_bounds(const RunConfig& cfg) {
  const auto orbit = orbit_for(cfg);
  Outcome out;
  out.payload = {{"orbit_truncated", orbit.truncated}, {"reports", json::array()}};
  for (const auto& t : cfg.afp.scales) {
    const auto r = verify_iterate_bound(orbit, cfg.space.pair, cfg.bounds.kind, cfg.bounds.a, t);
    out.ok = out.ok && r.passed;
    out.payload["reports"].push_back(r);
  }
  out.summary = out.ok ? "bounds: hold at every step and scale" : "bounds: violated";
  return out;
}

Outcome run_diameter(const RunConfig& cfg, Parallelism par) {
  const auto points = uniform_grid(cfg.map->domain, cfg.diameter.grid);
  Outcome out;
  out.payload = {{"grid", cfg.diameter.grid}, {"results", json::array()}};
  for (const auto& t : cfg.afp.scales) out.payload["results"].push_back(fuzzy_diameter(points, cfg.space.pair, t, par));
  out.summary = "diameter: " + std::to_string(points.size()) + " points";
  return out;
}

Outcome run_set_afpp(const RunConfig& cfg, Parallelism par) {
  const MapSpec& f = *cfg.map;
  const SamplePlan plan = plan_for(cfg, cfg.set_afpp.samples);
  const auto verdict =
      check_class(f, cfg.space.pair, cfg.space.tnorm, cfg.space.tconorm, ClassSpec::nonexpansive(), plan, par);
  Outcome out;
  out.payload = {{"nonexpansive", verdict}, {"estimates", json::array()}};
  for (const auto& t : cfg.afp.scales) {
    const auto r = set_afpp_estimate(f, cfg.space.pair, verdict, cfg.set_afpp.grids, t);
    out.ok = out.ok && r.applicable;
    out.payload["estimates"].push_back(r);
  }
  out.summary = out.ok ? "set-afpp: estimated" : "set-afpp: map not confirmed nonexpansive";
  return out;
}

Outcome dispatch(const RunConfig& cfg, Parallelism par) {
  switch (cfg.task) {
    case Task::axioms: return run_axioms(cfg);
    case Task::classify: return run_classify(cfg, par);
    case Task::orbit: return run_orbit(cfg);
    case Task::scan: return run_scan(cfg, par);
    case Task::diameter: return run_diameter(cfg, par);
    case Task::regularity: return run_regularity(cfg);
    case Task::bounds: return run_bounds(cfg);
    case Task::set_afpp: return run_set_afpp(cfg, par);
  }
  throw InputError("unknown task");
}

}  // namespace

RunResult run(const RunConfig& cfg, Parallelism par) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = dispatch(cfg, par);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  RunResult result;
  result.report = {{"config", cfg.echo},
                   {"version", kVersion},
                   {"seed", cfg.seed ? json(*cfg.seed) : json(nullptr)},
                   {"task", to_string(cfg.task)},
                   {"payload", std::move(out.payload)},
                   {"duration_ms", elapsed.count()}};
  result.exit_code = out.ok ? 0 : 1;
  result.summary = std::move(out.summary);
  result.csv = std::move(out.csv);
  return result;
}

}  // namespace ifns
