#include "app/bundle.hpp"

#include <algorithm>

#include "yukawa/parallel.hpp"

#ifndef YUKAWA_VERSION
#define YUKAWA_VERSION "0.0.0"
#endif

namespace yukawa::app {

std::string_view tool_version() { return YUKAWA_VERSION; }

bool Bundle::failed() const {
  if (config_error || !errors.empty()) return true;
  return std::any_of(reports.begin(), reports.end(), [](const MarginReport& r) { return r.verdict == Verdict::fail; });
}

int Bundle::exit_code() const {
  if (config_error) return 2;
  return failed() ? 1 : 0;
}

std::vector<MeanCurve> mean_curves(const Solution& f, const std::vector<double>& p_list,
                                   const std::vector<double>& r_grid, bool gradient, const HarnessOptions& opt) {
  const SphereRule rule = harness_sphere_rule(f.dim(), opt);
  std::vector<MeanCurve> out;
  for (double p : p_list) {
    out.push_back(mean_curve(f, p, MeanSelector::value, r_grid, rule));
    if (gradient) out.push_back(mean_curve(f, p, MeanSelector::gradient, r_grid, rule));
  }
  return out;
}

Bundle config_failure(const std::string& scenario, const std::string& message) {
  Bundle b;
  b.scenario = scenario;
  b.config_error = true;
  b.errors.push_back(message);
  return b;
}

Bundle run_scenario(Scenario s, const RunConfig& config) {
  Bundle b;
  b.scenario = s.name;
  b.scenario_hash = hex64(s.hash);
  if (config.seed) {
    s.options.seed = *config.seed;
    s.seed_given = true;
  }
  b.seed = s.options.seed;
  if (!s.solution) return config_failure(s.name, "scenario has no solution");
  b.solution = s.solution->describe();
  if (needs_seed(s) && !s.seed_given) {
    b.config_error = true;
    b.errors.push_back(ConfigError("required by the requested sampled checks (or pass --seed)", "/quadrature/seed").what());
    return b;
  }
  set_thread_count(std::max(1, config.parallel));
  const Solution& f = *s.solution;
  for (const auto& id : s.checks) {
    try {
      MarginReport r = run_check(id, f, s.params, s.options);
      if (r.verdict == Verdict::inapplicable) b.warnings.push_back(id + " inapplicable: " + r.reason);
      b.reports.push_back(std::move(r));
    } catch (const std::exception& e) {
      MarginReport r;
      r.check_id = id;
      r.solution = b.solution;
      r.verdict = Verdict::fail;
      r.reason = std::string("error: ") + e.what();
      b.errors.push_back(id + ": " + e.what());
      b.reports.push_back(std::move(r));
    }
  }
  try {
    if (s.mean_r_grid) {
      b.mean_curves = mean_curves(f, s.params.p.value_or(std::vector<double>{2.0}), *s.mean_r_grid, true, s.options);
    }
    if (s.params.lambda_grid) {
      const double p = s.params.p ? s.params.p->front() : 2.0;
      const Majorant w = s.params.majorants ? s.params.majorants->front() : Majorant::power(1.0);
      const std::vector<double> grid = s.params.r_grid.value_or(std::vector<double>{0.3, 0.6, 0.9});
      b.sweep = lambda_sweep(f, p, w, *s.params.lambda_grid, grid, s.options);
    }
  } catch (const std::exception& e) {
    b.errors.push_back(std::string("curves: ") + e.what());
  }
  set_thread_count(1);
  return b;
}

}  // namespace yukawa::app
