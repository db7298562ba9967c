#include <CLI11.hpp>

#include <iostream>

#include "app/bundle.hpp"
#include "app/emit.hpp"
#include "app/scenario.hpp"
#include "yukawa/parallel.hpp"

namespace {

using namespace yukawa;
using namespace yukawa::app;

constexpr int kIoExit = 3;

struct Common {
  std::string scenario;
  std::string solution;
  std::string out;
  int parallel = 1;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Common& c, bool scenario_required) {
  auto* s = cmd->add_option("--scenario", c.scenario, "Scenario JSON file")->check(CLI::ExistingFile);
  if (scenario_required) s->required();
  cmd->add_option("--out", c.out, "Output directory")->required();
  cmd->add_option("--parallel", c.parallel, "Worker threads")->check(CLI::Range(1, 256));
  cmd->add_option("--seed", c.seed, "Seed override for sampled checks");
}

/// Scenario from --scenario, or a bare catalogue solution from --solution.
Scenario scenario_for(const Common& c) {
  if (!c.scenario.empty()) return load_scenario(c.scenario);
  if (c.solution.empty()) throw ConfigError("either --scenario or --solution is required");
  nlohmann::json j = {{"solution", {{"catalogue", c.solution}}}};
  return parse_scenario(j.dump(), c.solution);
}

void print_config_error(const ConfigError& e, const std::string& origin) {
  std::cerr << "config error";
  if (!origin.empty()) std::cerr << " in " << origin;
  std::cerr << ": " << e.what() << "\n";
}

int run_verify(const Common& c, const std::string& format_name) {
  const Format format = format_name == "csv" ? Format::csv : Format::json;
  Bundle b;
  try {
    b = run_scenario(load_scenario(c.scenario), RunConfig{c.parallel, c.seed});
  } catch (const ConfigError& e) {
    print_config_error(e, c.scenario);
    b = config_failure(std::filesystem::path(c.scenario).stem().string(), e.what());
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoExit;
  }
  for (const auto& w : b.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& e : b.errors) std::cerr << "error: " << e << "\n";
  try {
    emit(b, format, c.out);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoExit;
  }
  for (const auto& r : b.reports) {
    std::cout << r.check_id << ": " << to_string(r.verdict);
    if (r.verdict == Verdict::inapplicable) {
      std::cout << " (" << r.reason << ")";
    } else {
      std::cout << " min_margin=" << format_number(r.min_margin) << " rows=" << r.size();
    }
    std::cout << "\n";
  }
  std::cout << "status: " << b.status() << "\n";
  return b.exit_code();
}

int run_means(const Common& c, std::vector<double> p_list, const std::string& grid, bool gradient) {
  try {
    Scenario s = scenario_for(c);
    if (c.seed) s.options.seed = *c.seed;
    if (p_list.empty()) p_list = s.params.p.value_or(std::vector<double>{2.0});
    std::vector<double> r_grid = grid.empty() ? s.mean_r_grid.value_or(parse_range("0:0.99:100")) : parse_range(grid);
    for (double r : r_grid) {
      if (!(r >= 0.0 && r < 1.0)) throw ConfigError("radius must lie in [0, 1)", "--r-grid");
    }
    set_thread_count(c.parallel);
    const auto curves = mean_curves(*s.solution, p_list, r_grid, gradient, s.options);
    std::filesystem::create_directories(c.out);
    for (const auto& curve : curves) {
      write_text(std::filesystem::path(c.out) / mean_curve_file_name(curve), mean_curve_csv(curve));
      std::cout << mean_curve_file_name(curve) << "\n";
    }
    return 0;
  } catch (const ConfigError& e) {
    print_config_error(e, c.scenario);
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoExit;
  }
}

int run_sweep(const Common& c, std::optional<double> p, std::optional<double> alpha, const std::string& lambdas,
              const std::string& grid) {
  try {
    Scenario s = scenario_for(c);
    if (c.seed) s.options.seed = *c.seed;
    const Solution& f = *s.solution;
    const double pp = p ? *p : (s.params.p ? s.params.p->front() : 2.0);
    const Majorant w = alpha ? Majorant::power(*alpha)
                             : (s.params.majorants ? s.params.majorants->front() : Majorant::power(1.0));
    const std::vector<double> lam =
        lambdas.empty() ? s.params.lambda_grid.value_or(default_lambda_grid(f.dim(), pp)) : parse_range(lambdas);
    const std::vector<double> r_grid =
        grid.empty() ? s.params.r_grid.value_or(std::vector<double>{0.3, 0.6, 0.9}) : parse_range(grid);
    set_thread_count(c.parallel);
    const SweepTable t = lambda_sweep(f, pp, w, lam, r_grid, s.options);
    std::filesystem::create_directories(c.out);
    write_text(std::filesystem::path(c.out) / "sweep_lambda.csv", sweep_csv(t));
    for (const auto& row : t.rows) {
      std::cout << "lambda=" << format_number(row.lambda) << " " << row.status;
      if (row.min_margin) std::cout << " min_margin=" << format_number(*row.min_margin);
      std::cout << "\n";
    }
    return 0;
  } catch (const ConfigError& e) {
    print_config_error(e, c.scenario);
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoExit;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification harness for Yukawa-equation mean and energy estimates"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  Common verify;
  std::string format = "json";
  auto* v = app.add_subcommand("verify", "Run the checks of a scenario and write a report bundle");
  add_common(v, verify, true);
  v->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  Common means;
  std::vector<double> mean_p;
  std::string mean_grid;
  bool gradient = false;
  auto* m = app.add_subcommand("means", "Write integral-mean curves M_p(r, f) as CSV");
  add_common(m, means, false);
  m->add_option("--solution", means.solution, "Catalogue solution name");
  m->add_option("--p", mean_p, "Exponents");
  m->add_option("--r-grid", mean_grid, "Radii as start:stop:count");
  m->add_flag("--gradient", gradient, "Also write M_p(r, grad f)");

  Common sweep;
  std::optional<double> sweep_p;
  std::optional<double> alpha;
  std::string lambdas;
  std::string sweep_grid;
  auto* s = app.add_subcommand("sweep-lambda", "Radial-growth margins across a lambda grid");
  add_common(s, sweep, false);
  s->add_option("--solution", sweep.solution, "Catalogue solution name");
  s->add_option("--p", sweep_p, "Exponent");
  s->add_option("--alpha", alpha, "Majorant exponent, omega(t) = t^alpha");
  s->add_option("--lambda-grid", lambdas, "Lambdas as start:stop:count");
  s->add_option("--r-grid", sweep_grid, "Radii as start:stop:count");

  CLI11_PARSE(app, argc, argv);

  if (*v) return run_verify(verify, format);
  if (*m) return run_means(means, mean_p, mean_grid, gradient);
  return run_sweep(sweep, sweep_p, alpha, lambdas, sweep_grid);
}
