#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "app/bundle.hpp"
#include "app/emit.hpp"
#include "app/scenario.hpp"

namespace yukawa::app {
namespace {

Scenario parse(const std::string& text) { return parse_scenario(text, "test"); }

ConfigError config_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ConfigError";
  return ConfigError("none");
}

TEST(Scenario, ParsesFamilies) {
  const Scenario e = parse(R"({"solution": {"family": "exponential", "n": 1, "a": [[1, 0]], "b": [[0.5, 0]]}})");
  ASSERT_TRUE(e.solution);
  EXPECT_EQ(e.solution->family(), Family::exponential);
  EXPECT_DOUBLE_EQ(e.solution->lambda(), 2.0);

  const Scenario s = parse(R"({"solution": {"family": "separable", "n": 2, "lambda": 3, "harmonic": "z1z2"}})");
  EXPECT_EQ(s.solution->family(), Family::separable);
  EXPECT_EQ(s.solution->dim(), 2);

  const Scenario p = parse(R"({"solution": {"family": "planar_harmonic", "h": [[0, 0], [1, 0]], "g": [[0, 0], [0, 1]]}})");
  const Jet j = p.solution->jet(CVec{Complex(0.2, 0.1)});
  EXPECT_NEAR(std::abs(j.dz[0] - Complex(1.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(j.dzbar[0] - Complex(0.0, -1.0)), 0.0, 1e-15);

  const Scenario c = parse(R"({"solution": {"catalogue": "planar_mix"}, "checks": "all"})");
  EXPECT_EQ(c.checks, check_ids());
  EXPECT_EQ(c.solution_label, "planar_mix");
}

TEST(Scenario, ExplicitHarmonicPolynomial) {
  const Scenario s = parse(R"({"solution": {"family": "separable", "n": 1, "lambda": 1,
    "harmonic": {"degree": 2, "terms": [{"coef": [1, 0], "powers": [2, 0]}, {"coef": [-1, 0], "powers": [0, 2]}]}}})");
  EXPECT_EQ(s.solution->family(), Family::separable);
  const ConfigError e = config_error(R"({"solution": {"family": "separable", "n": 1, "lambda": 1,
    "harmonic": {"degree": 2, "terms": [{"coef": [1, 0], "powers": [2, 0]}]}}})");
  EXPECT_EQ(e.field(), "/solution/harmonic");
}

TEST(Scenario, ParsesParamsAndQuadrature) {
  const Scenario s = parse(R"({
    "solution": {"catalogue": "exp_n1_scaled"},
    "checks": ["radial_growth", "energy_reduction"],
    "params": {"p": 3, "beta": [0.5, 1], "majorants": [0.5, {"kind": "scaled_power", "scale": 2, "alpha": 1}]},
    "quadrature": {"sphere_order": 32, "radial_order": 16, "seed": 9, "auto_double": false},
    "grids": {"r_grid": {"start": 0.1, "stop": 0.9, "count": 5}, "z_samples": 10},
    "tolerance": {"abs": 1e-7, "rel": 0}
  })");
  EXPECT_EQ(s.checks.size(), 2u);
  EXPECT_EQ(*s.params.p, std::vector<double>{3.0});
  EXPECT_EQ(s.params.beta->size(), 2u);
  EXPECT_EQ(s.params.majorants->at(1).kind(), MajorantKind::scaled_power);
  EXPECT_EQ(s.options.sphere_order, 32);
  EXPECT_EQ(s.options.seed, 9u);
  EXPECT_TRUE(s.seed_given);
  EXPECT_FALSE(s.options.auto_double);
  ASSERT_EQ(s.params.r_grid->size(), 5u);
  EXPECT_DOUBLE_EQ(s.params.r_grid->at(4), 0.9);
  EXPECT_EQ(*s.params.z_samples, 10u);
  EXPECT_DOUBLE_EQ(s.options.tolerance->abs, 1e-7);
}

TEST(Scenario, LambdaOverride) {
  const Scenario s = parse(R"({"solution": {"catalogue": "exp_n1"}, "params": {"lambda": 1}})");
  EXPECT_DOUBLE_EQ(s.solution->lambda(), 1.0);
  const ConfigError e = config_error(R"({"solution": {"catalogue": "planar_z"}, "params": {"lambda": 1}})");
  EXPECT_EQ(e.field(), "/params/lambda");
}

TEST(Scenario, SyntaxErrorReportsLine) {
  const ConfigError e = config_error("{\n  \"solution\": {\"catalogue\": \"exp_n1\"},\n  \"checks\": [\"residual\",]\n}");
  EXPECT_EQ(e.line(), 3);
}

TEST(Scenario, FieldErrorsReportPointerAndLine) {
  const std::string text =
      "{\n"
      "  \"solution\": {\"catalogue\": \"exp_n1\"},\n"
      "  \"checks\": [\"residual\", \"no_such_check\"]\n"
      "}\n";
  const ConfigError e = config_error(text);
  EXPECT_EQ(e.field(), "/checks/1");
  EXPECT_EQ(e.line(), 3);
  EXPECT_NE(std::string(e.what()).find("no_such_check"), std::string::npos);

  const ConfigError q = config_error("{\n \"solution\": {\"catalogue\": \"exp_n1\"},\n \"quadrature\": {\n  \"radial_order\": \"x\"\n }\n}");
  EXPECT_EQ(q.field(), "/quadrature/radial_order");
  EXPECT_EQ(q.line(), 4);
}

TEST(Scenario, RejectsInvalidInput) {
  EXPECT_EQ(config_error(R"({"checks": []})").field(), "/solution");
  EXPECT_EQ(config_error(R"({"solution": {"catalogue": "nope"}})").field(), "/solution/catalogue");
  EXPECT_EQ(config_error(R"({"solution": {"family": "exponential", "n": 1, "a": [1], "b": [[0, 0]]}})").field(), "/solution/a/0");
  EXPECT_EQ(config_error(R"({"solution": {"family": "exponential", "n": 1, "a": [[0, 1]], "b": [[1, 0]]}})").field(), "/solution");
  EXPECT_EQ(config_error(R"({"solution": {"catalogue": "exp_n1"}, "extra": 1})").field(), "/extra");
  EXPECT_EQ(config_error(R"({"solution": {"catalogue": "exp_n1"}, "grids": {"r_grid": []}})").field(), "/grids/r_grid");
  EXPECT_EQ(config_error(R"({"solution": {"catalogue": "exp_n1"}, "grids": {"r_grid": [0.5, 1.0]}})").field(), "/grids/r_grid/1");
  EXPECT_EQ(config_error(R"({"solution": {"catalogue": "exp_n1"}, "checks": ["bmo", "bmo"]})").field(), "/checks/1");
}

TEST(Scenario, HashIgnoresWhitespace) {
  const Scenario a = parse(R"({"solution": {"catalogue": "exp_n1"}})");
  const Scenario b = parse("{ \"solution\" :\n {\"catalogue\":\"exp_n1\"} }");
  const Scenario c = parse(R"({"solution": {"catalogue": "exp_n2"}})");
  EXPECT_EQ(a.hash, b.hash);
  EXPECT_NE(a.hash, c.hash);
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}

TEST(Scenario, Ranges) {
  EXPECT_EQ(parse_range("0:1:3"), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(parse_range("0.5:0.5:1"), std::vector<double>{0.5});
  EXPECT_THROW(parse_range("0:1"), ConfigError);
  EXPECT_THROW(parse_range("a:1:3"), ConfigError);
  EXPECT_THROW(parse_range("0:1:0"), ConfigError);
}

TEST(Run, SeedRequiredForSampledChecks) {
  const Bundle b = run_scenario(parse(R"({"solution": {"catalogue": "exp_n1"}, "checks": ["residual"]})"), {});
  EXPECT_TRUE(b.config_error);
  EXPECT_EQ(b.exit_code(), 2);
  const Bundle ok = run_scenario(parse(R"({"solution": {"catalogue": "exp_n1"}, "checks": ["residual"]})"), {1, 5});
  EXPECT_EQ(ok.exit_code(), 0);
  EXPECT_EQ(ok.seed, 5u);
  const Bundle none = run_scenario(parse(R"({"solution": {"catalogue": "exp_n1"}, "checks": ["green_identity"]})"), {});
  EXPECT_EQ(none.exit_code(), 0);
}

TEST(Run, EmptyCheckListGivesEmptyBundle) {
  const Bundle b = run_scenario(parse(R"({"solution": {"catalogue": "exp_n1"}, "checks": []})"), {});
  EXPECT_TRUE(b.reports.empty());
  EXPECT_EQ(b.exit_code(), 0);
  const auto meta = bundle_metadata(b, Format::json, {});
  EXPECT_EQ(meta["status"], "passed");
  EXPECT_TRUE(meta["checks"].empty());
  EXPECT_EQ(meta["scenario_hash"].get<std::string>().size(), 16u);
}

TEST(Run, InapplicableExitsZeroWithWarning) {
  const Bundle b = run_scenario(
      parse(R"({"solution": {"family": "exponential", "n": 1, "a": [[1, 0]], "b": [[0.75, 0]]},
                "checks": ["radial_growth"], "params": {"p": [2]}})"),
      {});
  ASSERT_EQ(b.reports.size(), 1u);
  EXPECT_EQ(b.reports[0].verdict, Verdict::inapplicable);
  EXPECT_EQ(b.exit_code(), 0);
  ASSERT_EQ(b.warnings.size(), 1u);
  EXPECT_NE(b.warnings[0].find("lambda >= 4n/p"), std::string::npos);
}

TEST(Run, RuntimeErrorsBecomeFailingReports) {
  const Bundle b = run_scenario(
      parse(R"({"solution": {"catalogue": "exp_n1_scaled"}, "checks": ["radial_growth", "green_identity"], "params": {"p": [1]}})"),
      {});
  ASSERT_EQ(b.reports.size(), 2u);
  EXPECT_EQ(b.reports[0].verdict, Verdict::fail);
  EXPECT_EQ(b.reports[1].verdict, Verdict::pass);
  EXPECT_EQ(b.status(), "failed");
  EXPECT_EQ(b.exit_code(), 1);
}

TEST(Emit, ReportJsonCarriesProvenance) {
  const Bundle b = run_scenario(parse(R"({"solution": {"catalogue": "exp_n1"}, "checks": ["green_identity"]})"), {});
  const auto j = report_json(b.reports.at(0), b);
  EXPECT_EQ(j["check_id"], "green_identity");
  EXPECT_EQ(j["scenario_hash"], b.scenario_hash);
  EXPECT_EQ(j["tool_version"], std::string(tool_version()));
  EXPECT_TRUE(j["quadrature"].contains("sphere_order"));
  EXPECT_EQ(j["rows"].size(), b.reports[0].size());
}

TEST(Emit, CsvRows) {
  const Bundle b = run_scenario(parse(R"({"solution": {"catalogue": "exp_n1"}, "checks": ["green_identity"]})"), {});
  const std::string csv = reports_csv(b);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "check_id,verdict,row,label,params,relation,lhs,rhs,margin,allowance");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(line.rfind("green_identity,pass,", 0), 0u);
    ++rows;
  }
  EXPECT_EQ(rows, b.reports[0].size());
}

TEST(Emit, MeanCurveOfIdentityIsDiagonal) {
  const Solution f = make_planar_harmonic({0.0, 1.0}, {});
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75};
  const auto curves = mean_curves(f, {2.0, 3.0}, grid, false, {});
  ASSERT_EQ(curves.size(), 2u);
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(c.values[i], grid[i], 1e-15);
  }
  EXPECT_EQ(mean_curve_file_name(curves[0]), "means_value_p2.csv");
  EXPECT_EQ(mean_curve_csv(curves[0]).substr(0, 10), "r,M_p\n0,0\n");
}

TEST(Emit, NumberFormatting) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  EXPECT_EQ(format_number(0.1 + 0.2), "0.30000000000000004");
  EXPECT_EQ(format_number(NAN), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
}

TEST(Emit, SweepCsv) {
  SweepTable t;
  t.rows.push_back({0.0, true, "pass", 0.25});
  t.rows.push_back({3.0, false, "outside theorem hypothesis", std::nullopt});
  EXPECT_EQ(sweep_csv(t), "lambda,inside_hypothesis,status,min_margin\n0,true,pass,0.25\n3,false,outside theorem hypothesis,\n");
}

}  // namespace
}  // namespace yukawa::app
