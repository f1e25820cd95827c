// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ifns/afp.hpp"
#include "ifns/report_json.hpp"
#include "oracles.hpp"

using namespace ifns;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  json payload;
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  std::function<Outcome(Parallelism)> body;
};

const FuzzyNormPair kAbs = FuzzyNormPair::standard(BaseNorm::absolute);
const TriangularOp kProd(OpFamily::product);
const TriangularOp kLuk(OpFamily::lukasiewicz_sum);
const TriangularOp kMin(OpFamily::minimum);
const TriangularOp kMax(OpFamily::maximum);

Vector v1(double x) { return Vector::Constant(1, x); }

void require(Outcome& out, bool cond, const std::string& what) {
  if (!cond && out.ok) {
    out.ok = false;
    out.detail = what;
  }
}

Outcome translation_threshold(Parallelism par) {
  Outcome out;
  const auto f = parse_map("x1 + 0.5", 1, Box::cube(1, -10.0, 10.0));
  double worst = 0.0;
  for (double t : {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
    for (double x : {-10.0, -3.3, 0.0, 0.25, 4.0, 9.9}) {
      const double expected = 1.0 / (2.0 * t + 1.0);
      worst = std::max(worst, std::fabs(residual(f, kAbs, v1(x), Scale(t)).eps_star - expected));
    }
  }
  require(out, worst <= 1e-12, "eps_star deviates from 1/(2t+1) by " + format_g17(worst));
  const auto below = scan_f_epsilon(f, kAbs, 0.333, Scale(1.0), 1001, par);
  const auto above = scan_f_epsilon(f, kAbs, 0.334, Scale(1.0), 1001, par);
  require(out, below.empty(), "scan at eps=0.333 is not empty");
  require(out, above.members.size() == above.points_scanned, "scan at eps=0.334 is not full");
  out.payload = {{"worst_deviation", worst}, {"below", below}, {"above", above}};
  if (out.ok) out.detail = "max |eps_star - 1/(2t+1)| = " + format_g17(worst) + "; 0/1001 vs 1001/1001";
  return out;
}

Outcome square_ifafpp(Parallelism par) {
  Outcome out;
  const auto f = parse_map("x1^2", 1, Box::cube(1, 0.0, 1.0, true, true));
  std::string counts;
  for (double eps : {0.1, 0.01, 0.001}) {
    const auto s = scan_f_epsilon(f, kAbs, eps, Scale(1.0), 100000, par);
    require(out, !s.empty(), "empty scan at eps=" + format_g17(eps));
    for (const auto& m : s.members) {
      const double x = m.x(0);
      require(out, std::fabs(x * x - x) < eps * 1.0 / (1.0 - eps), "member " + format_g17(x) + " violates bound");
    }
    counts += (counts.empty() ? "" : ", ") + std::to_string(s.members.size());
    out.payload.push_back(s);
  }
  if (out.ok) out.detail = "members per eps: " + counts;
  return out;
}

Outcome halving_classification(Parallelism par) {
  Outcome out;
  const auto f = parse_map("0.5*x1", 1, Box::cube(1, 0.0, 1.0, true, true));
  const auto plan = SamplePlan::with_seed(20240601, 10000);
  const auto v = check_class(f, kAbs, kProd, kLuk, ClassSpec::contraction(0.5), plan, par);
  require(out, v.holds_on_sample, "contraction a=0.5 violated");
  require(out, v.pairs_tested == 10000, "pairs tested " + std::to_string(v.pairs_tested));
  require(out, v.margin() >= -1e-12, "margin " + format_g17(v.margin()));
  const auto fit = fit_modulus(f, kAbs, kProd, kLuk, ClassKind::contraction, plan, 0.0, par);
  require(out, fit.best_param && std::fabs(*fit.best_param - 0.5) <= 1e-6, "fit_modulus did not return 0.5");
  out.payload = {{"verdict", v}, {"fit", fit}};
  if (out.ok) out.detail = "margin " + format_g17(v.margin()) + ", best a = " + format_g17(*fit.best_param);
  return out;
}

Outcome regularity_witness(Parallelism) {
  Outcome out;
  const auto f = parse_map("x1/2", 1);
  const std::vector<Scale> t{Scale(1.0)};
  const auto orbit = picard_orbit(f, v1(1.0), 40, kAbs, t);
  const auto v = detect_asymptotic_regularity(orbit, 0.01, Scale(1.0));
  // closed form: smallest k with 2^-(k+1) < eps / (1 - eps)
  std::size_t k = 0;
  while (!(std::ldexp(1.0, -static_cast<int>(k + 1)) < 0.01 / (1.0 - 0.01))) ++k;
  require(out, v.k0 && *v.k0 == k && k == 6, "k0 mismatch");
  double eps_star = 1.0;
  if (v.witness) eps_star = residual(f, kAbs, *v.witness, Scale(1.0)).eps_star;
  require(out, eps_star < 0.01, "witness eps_star " + format_g17(eps_star));
  out.payload = {{"verdict", v}, {"eps_star", eps_star}};
  if (out.ok) out.detail = "k0 = 6, eps_star(f^6(1)) = " + format_g17(eps_star);
  return out;
}

Outcome iterate_bound_suite(Parallelism) {
  Outcome out;
  const std::vector<Scale> scales{Scale(0.1), Scale(1.0), Scale(10.0)};
  for (double c : {0.1, 0.25, 0.5, 0.9}) {
    const auto f = parse_map(format_g17(c) + "*x1", 1);
    const auto orbit = picard_orbit(f, v1(1.0), 50, kAbs, scales);
    for (const auto& t : scales) {
      const auto r = verify_iterate_bound(orbit, kAbs, ClassKind::contraction, c, t);
      require(out, r.passed && r.rows.size() == 50, "bound fails for c=" + format_g17(c));
      // both sides by hand
      for (const auto& row : r.rows) {
        const double lhs = oracle::mu(std::fabs(orbit.iterates[row.k](0) - orbit.iterates[row.k + 1](0)), t.value());
        const double rhs = oracle::mu(1.0 - c, t.value() / std::pow(c, static_cast<double>(row.k)));
        require(out, std::fabs(lhs - row.mu_lhs) <= 1e-12 && std::fabs(rhs - row.mu_rhs) <= 1e-12,
                "row disagrees with oracle");
      }
      out.payload.push_back(r);
    }
  }
  const auto f = parse_map("0.9*x1", 1);
  const std::vector<Scale> one{Scale(1.0)};
  const auto r = verify_iterate_bound(picard_orbit(f, v1(1.0), 50, kAbs, one), kAbs, ClassKind::contraction, 0.5,
                                      Scale(1.0));
  std::size_t expected = 0;
  while (expected <= 50 && !(oracle::mu(0.1 * std::pow(0.9, expected), 1.0) <
                             oracle::mu(0.1, 1.0 / std::pow(0.5, expected)) - 1e-12)) {
    ++expected;
  }
  require(out, !r.passed && r.first_failing_k && *r.first_failing_k == expected && expected <= 50,
          "claimed a=0.5 on c=0.9 did not fail where expected");
  out.payload.push_back(r);
  if (out.ok) out.detail = "12 orbits pass; c=0.9 with a=0.5 fails first at k = " + std::to_string(expected);
  return out;
}

// f(x) = c x + d on [0,1]; fit the modulus, pad it, confirm with the oracle, then run orbits.
Outcome kannan_chatterjea_shape(Parallelism par) {
  Outcome out;
  const Box box = Box::cube(1, 0.0, 1.0);
  const auto plan = SamplePlan::with_seed(7, 2000);
  const std::vector<Scale> scales{Scale(0.1), Scale(1.0), Scale(10.0)};
  std::string summary;
  for (ClassKind kind : {ClassKind::kannan, ClassKind::chatterjea}) {
    std::size_t accepted = 0;
    for (double c : {0.05, 0.1, 0.15, 0.25, 0.4}) {
      for (double d : {0.2, 0.5}) {
        const auto f = parse_map(format_g17(c) + "*x1 + " + format_g17(d), 1, box);
        const auto fit = fit_modulus(f, kAbs, kMin, kMax, kind, plan, 0.0, par);
        if (!fit.best_param) continue;
        const double a = *fit.best_param + 0.01;
        if (!(a < 0.5)) continue;
        const auto spec = kind == ClassKind::kannan ? ClassSpec::kannan(a) : ClassSpec::chatterjea(a);
        if (!check_class(f, kAbs, kMin, kMax, spec, plan, par).holds_on_sample) continue;
        bool confirmed = true;
        for (int i = 0; i <= 100 && confirmed; ++i) {
          for (int j = 0; j <= 100 && confirmed; ++j) {
            for (double t : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
              const double x = i / 100.0, y = j / 100.0;
              confirmed = confirmed && (kind == ClassKind::kannan
                                            ? oracle::affine_kannan_holds(c, d, a, x, y, t, oracle::minimum)
                                            : oracle::affine_chatterjea_holds(c, d, a, x, y, t, oracle::minimum));
            }
          }
        }
        if (!confirmed) continue;
        ++accepted;
        const auto starts = sample_box(box, 20, 99);
        for (const auto& x0 : starts) {
          const auto orbit = picard_orbit(f, x0, 30, kAbs, scales);
          for (const auto& t : scales) {
            const auto r = verify_iterate_bound(orbit, kAbs, kind, a, t);
            require(out, r.passed, std::string(to_string(kind)) + " bound fails for c=" + format_g17(c));
            out.payload.push_back({{"c", c}, {"d", d}, {"a", a}, {"passed", r.passed}});
          }
        }
      }
    }
    require(out, accepted > 0, std::string("no confirmed ") + std::string(to_string(kind)) + " candidate");
    summary += (summary.empty() ? "" : ", ") + std::string(to_string(kind)) + ": " + std::to_string(accepted) + " maps";
  }
  if (out.ok) out.detail = summary + ", 20 orbits x 30 steps each";
  return out;
}

Outcome axiom_suite(Parallelism) {
  Outcome out;
  SamplePlan plan = SamplePlan::with_seed(3, 1000);
  plan.scale_count = 16;
  const auto prod = check_ifn_axioms(kAbs, kProd, kLuk, plan);
  const auto mm = check_ifn_axioms(kAbs, kMin, kMax, plan);
  for (const auto* r : {&prod, &mm}) {
    for (const auto& c : r->checks) {
      if (c.optional) continue;
      require(out, c.status == CheckStatus::pass || c.status == CheckStatus::assumed, "axiom " + c.name + " failed");
    }
  }
  require(out, prod.find("(xiv)") && prod.find("(xiv)")->status == CheckStatus::fail, "(xiv) should fail for product");
  require(out, mm.find("(xiv)") && mm.find("(xiv)")->status == CheckStatus::pass, "(xiv) should pass for min");
  out.payload = {{"product", prod}, {"minmax", mm}};
  if (out.ok) out.detail = "(i)-(xiii) pass for both pairs; (xiv) fails for product, passes for min";
  return out;
}

Outcome lemma_and_chain(Parallelism) {
  Outcome out;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-5.0, 5.0), ul(-3.0, 3.0);

  const auto l1 = check_lemma1(kAbs, SamplePlan::with_seed(11, 1000));
  require(out, l1.passed(), "lemma 1 property failed");

  std::size_t l2_passed = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng), y = u(rng), dx = u(rng), dy = u(rng);
    const Scale t(std::pow(10.0, ul(rng)));
    std::vector<Vector> xs, ys;
    for (int k = 0; k <= 60; ++k) {
      xs.push_back(v1(x + dx * std::ldexp(1.0, -k)));
      ys.push_back(v1(y + dy * std::ldexp(1.0, -k)));
    }
    l2_passed += check_lemma2(kAbs, xs, ys, v1(x), v1(y), t).passed();
  }
  require(out, l2_passed == 1000, "lemma 2 passed on " + std::to_string(l2_passed) + " of 1000");

  const std::vector<std::string> maps{"0.5*x1", "x1^2", "x1 + 0.5", "sin(3*x1)", "-2*x1 + 1"};
  std::size_t chains = 0;
  for (auto [tn, tc] : {std::pair{kProd, kLuk}, std::pair{kMin, kMax}}) {
    require(out, check_ifn_axioms(kAbs, tn, tc, SamplePlan::with_seed(5, 200)).passed(), "pair fails axioms");
    for (int i = 0; i < 1000; ++i) {
      const auto f = parse_map(maps[i % maps.size()], 1);
      chains += triangle_chain_check(f, kAbs, tn, tc, v1(u(rng)), v1(u(rng)), Scale(std::pow(10.0, ul(rng)))).holds();
    }
  }
  require(out, chains == 2000, "triangle chain held on " + std::to_string(chains) + " of 2000");
  out.payload = {{"lemma1", l1}, {"lemma2_passed", l2_passed}, {"chains_held", chains}};
  if (out.ok) out.detail = "lemma 1 (1000 points), lemma 2 1000/1000, chain 2000/2000";
  return out;
}

Outcome set_afpp_analogue(Parallelism par) {
  Outcome out;
  const auto f = parse_map("x1/2", 1, Box::cube(1, 0.0, 1.0, true, true));
  const auto ne = check_class(f, kAbs, kProd, kLuk, ClassSpec::nonexpansive(), SamplePlan::with_seed(13, 1000), par);
  require(out, ne.holds_on_sample, "nonexpansive verdict does not hold");
  const std::vector<std::size_t> grids{10, 100, 1000, 10000};
  const auto r = set_afpp_estimate(f, kAbs, ne, grids, Scale(1.0));
  require(out, r.applicable && r.levels.size() == 4, "estimate not applicable");
  if (out.ok) {
    require(out, r.monotone && r.levels.back().sup_mu > r.levels.front().sup_mu, "sup mu not increasing");
    require(out, r.levels.back().sup_mu >= 0.9999, "final sup mu " + format_g17(r.levels.back().sup_mu));
    require(out, r.levels.back().inf_nu <= 0.0001, "final inf nu " + format_g17(r.levels.back().inf_nu));
  }
  out.payload = {{"nonexpansive", ne}, {"estimate", r}};
  if (out.ok) {
    out.detail = "sup mu " + format_g17(r.levels.front().sup_mu) + " -> " + format_g17(r.levels.back().sup_mu) +
                 ", inf nu -> " + format_g17(r.levels.back().inf_nu);
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Translation map eps threshold", 1000, translation_threshold},
      {2, "Square map approximate fixed point property", 5000, square_ifafpp},
      {3, "Halving map classification and modulus fit", 5000, halving_classification},
      {4, "Asymptotic regularity witness", 1000, regularity_witness},
      {5, "Contraction iterate bound suite", 1000, iterate_bound_suite},
      {6, "Kannan/Chatterjea iterate bound shape", 30000, kannan_chatterjea_shape},
      {7, "Fuzzy-norm axiom suite", 5000, axiom_suite},
      {8, "Lemma and triangle-chain properties", 5000, lemma_and_chain},
      {9, "Set approximate fixed point analogue", 5000, set_afpp_analogue},
  };

  bool all = true;
  std::vector<std::string> first_payloads;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body(Parallelism{1});
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double ms = elapsed_ms(start);
    const bool in_time = ms < c.limit_ms;
    const bool ok = out.ok && in_time;
    all = all && ok;
    std::printf("criterion %2d %s  %s (%.1f ms, limit %.0f ms): %s\n", c.id, ok ? "PASS" : "FAIL", c.title, ms,
                c.limit_ms, in_time ? out.detail.c_str() : "time limit exceeded");
    first_payloads.push_back(out.payload.dump());
  }

  // Rerun every criterion with more threads; payloads must match byte for byte.
  const auto start = std::chrono::steady_clock::now();
  std::string mismatch;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string again;
    try {
      again = criteria[i].body(Parallelism{3}).payload.dump();
    } catch (const std::exception& e) {
      again = e.what();
    }
    if (again != first_payloads[i] && mismatch.empty()) mismatch = std::to_string(criteria[i].id);
  }
  const bool same = mismatch.empty();
  all = all && same;
  std::printf("criterion 10 %s  Determinism (%.1f ms): %s\n", same ? "PASS" : "FAIL", elapsed_ms(start),
              same ? "criteria 1-9 rerun with 3 threads give byte-identical JSON payloads"
                   : ("payload of criterion " + mismatch + " differs").c_str());
  return all ? 0 : 1;
}
