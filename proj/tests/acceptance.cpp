// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "app/bundle.hpp"
#include "app/emit.hpp"
#include "yukawa/energy.hpp"
#include "yukawa/green.hpp"
#include "yukawa/harness.hpp"
#include "yukawa/parallel.hpp"

namespace {

using namespace yukawa;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Suite = std::map<std::pair<std::string, std::string>, MarginReport>;

bool f_independent(const std::string& id) { return id == "power_inequality" || id == "majorant_regularity"; }

Suite run_suite(int threads) {
  set_thread_count(threads);
  Suite s;
  for (const auto& e : solution_catalogue()) {
    for (const auto& id : check_ids()) {
      if (f_independent(id)) continue;
      s.emplace(std::make_pair(e.name, id), run_check(id, e.solution, {}, {}));
    }
  }
  s.emplace(std::make_pair(std::string("none"), std::string("power_inequality")),
            verify_power_inequality(10000, {}));
  s.emplace(std::make_pair(std::string("none"), std::string("majorant_regularity")),
            verify_majorant_regularity({Majorant::power(0.5), Majorant::power(1.0), Majorant::power(0.25)}, {}));
  set_thread_count(1);
  return s;
}

std::string serialize(const Suite& s) {
  app::Bundle b;
  b.scenario = "acceptance";
  b.scenario_hash = app::hex64(app::fnv1a("acceptance"));
  std::string out;
  for (const auto& [key, r] : s) out += app::report_json(r, b).dump() + "\n";
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

/// Smallest margin over rows whose label passes `keep`.
double worst_margin(const MarginReport& r, const std::function<bool(const GridPoint&)>& keep = {}) {
  double w = INFINITY;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (keep && !keep(r.grid[i])) continue;
    w = std::min(w, r.margins[i]);
  }
  return w;
}

double param(const GridPoint& g, const std::string& key) {
  for (const auto& [k, v] : g.params) {
    if (k == key) return v;
  }
  return NAN;
}

double constant(const MarginReport& r, const std::string& key) {
  for (const auto& [k, v] : r.constants) {
    if (k == key) return v;
  }
  return NAN;
}

struct Tally {
  int applicable = 0;
  int failed = 0;
  std::string first_failure;

  void take(const std::string& name, const MarginReport& r) {
    if (r.verdict == Verdict::inapplicable) return;
    ++applicable;
    if (r.verdict == Verdict::fail) {
      if (failed++ == 0) first_failure = name + " min_margin " + sci(r.min_margin);
    }
  }
  std::string text() const {
    std::string s = std::to_string(applicable - failed) + "/" + std::to_string(applicable) + " solutions pass";
    if (failed) s += " (first failure: " + first_failure + ")";
    return s;
  }
};

Tally tally(const Suite& s, const std::string& id, const std::function<bool(const Solution&)>& select = {}) {
  Tally t;
  for (const auto& e : solution_catalogue()) {
    if (select && !select(e.solution)) continue;
    t.take(e.name, s.at({e.name, id}));
  }
  return t;
}

SphereRule circle() { return sphere_rule(1, 128, SphereMethod::circle_trapezoid); }
Solution identity() { return make_planar_harmonic({0.0, 1.0}, {}); }

Outcome residuals(const Suite& s) {
  Tally t = tally(s, "residual");
  double res = 0.0, fd = 0.0;
  for (const auto& e : solution_catalogue()) {
    const auto& r = s.at({e.name, "residual"});
    res = std::max(res, constant(r, "max_residual"));
    fd = std::max(fd, constant(r, "max_fd_rel_error"));
  }
  return {t.failed == 0 && t.applicable == static_cast<int>(solution_catalogue().size()),
          t.text() + "; max residual " + sci(res) + ", max fd error " + sci(fd)};
}

Outcome green(const Suite& s) {
  bool ok = true;
  double worst_rel = 0.0, worst_closed = 0.0;
  for (const char* name : {"exp_n1", "exp_n2"}) {
    const auto& r = s.at({name, "green_identity"});
    ok = ok && r.verdict == Verdict::pass;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double d = std::abs(r.lhs[i] - r.rhs[i]);
      if (r.grid[i].label.rfind("abs_z_sq_closed_form", 0) == 0) {
        worst_closed = std::max(worst_closed, d);
      } else {
        const double scale = (r.allowances[i] - r.tolerance.abs) / r.tolerance.rel;
        worst_rel = std::max(worst_rel, d / scale);
      }
    }
  }
  ok = ok && worst_rel <= 1e-6 && worst_closed <= 1e-9;
  return {ok, "n in {1,2}: worst relative gap " + sci(worst_rel) + ", |z|^2 closed form within " + sci(worst_closed)};
}

Outcome representation(const Suite& s) {
  Tally t = tally(s, "mp_representation");
  double rep = 0.0, der = 0.0;
  for (const auto& e : solution_catalogue()) {
    const auto& r = s.at({e.name, "mp_representation"});
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.lhs[i] == 0.0 && r.rhs[i] == 0.0) continue;
      const double d = std::abs(r.lhs[i] - r.rhs[i]) / std::max(std::abs(r.lhs[i]), std::abs(r.rhs[i]));
      double& worst = r.grid[i].label == "derivative" ? der : rep;
      worst = std::max(worst, d);
    }
  }
  return {t.failed == 0 && rep <= 1e-5 && der <= 1e-4,
          t.text() + "; worst relative gap " + sci(rep) + ", differential form " + sci(der)};
}

Outcome monotone(const Suite& s) {
  Tally t = tally(s, "monotone_subharmonic");
  int p1 = 0, harmonic = 0;
  for (const auto& e : solution_catalogue()) {
    if (e.solution.lambda() != 0.0) continue;
    ++harmonic;
    const auto& r = s.at({e.name, "monotone_subharmonic"});
    if (std::any_of(r.grid.begin(), r.grid.end(), [](const GridPoint& g) { return param(g, "p") == 1.0; })) ++p1;
  }
  return {t.failed == 0 && p1 == harmonic,
          t.text() + "; p = 1 curves checked on " + std::to_string(p1) + "/" + std::to_string(harmonic) + " lambda = 0 solutions"};
}

Outcome kernel_moment(const Suite& s) {
  Tally t = tally(s, "kernel_moment", [](const Solution& f) { return f.dim() == 2; });
  const Solution one = make_exponential(2, {0.0, 0.0}, {0.0, 0.0});
  const GreenRules rules{sphere_rule(2, 16, SphereMethod::hopf_product), 24};
  double eq = 0.0;
  for (double r : {0.3, 0.5, 0.8}) eq = std::max(eq, std::abs(kernel_moment_margin(one, 2.0, r, rules).margin()));
  return {t.failed == 0 && t.applicable > 0 && eq <= 1e-9, t.text() + "; constant-function margin " + sci(eq)};
}

Outcome growth(const Suite& s) {
  Tally t = tally(s, "radial_growth");
  int zero = 0, positive = 0;
  bool prefactor_one = radial_growth_prefactor(1, 2.0, 0.0) == 1.0 && radial_growth_prefactor(2, 2.0, 0.0) == 1.0;
  double worst_change = 0.0;
  for (const auto& e : solution_catalogue()) {
    const auto& r = s.at({e.name, "radial_growth"});
    if (r.verdict == Verdict::inapplicable) continue;
    (e.solution.lambda() == 0.0 ? zero : positive)++;
    if (e.solution.lambda() == 0.0) prefactor_one = prefactor_one && constant(r, "prefactor[p=2]") == 1.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.grid[i].label == "log_ratio_change") worst_change = std::max(worst_change, r.lhs[i]);
    }
  }
  return {t.failed == 0 && zero > 0 && positive > 0 && prefactor_one && worst_change < 0.05,
          t.text() + " (" + std::to_string(zero) + " with lambda = 0, " + std::to_string(positive) +
              " with 0 < lambda < 4n/p); worst log-ratio change " + sci(worst_change) +
              (prefactor_one ? "; prefactor 1 at lambda = 0" : "; prefactor at lambda = 0 differs from 1")};
}

Outcome lipschitz(const Suite& s) {
  Tally t = tally(s, "lipschitz_mean");
  const BallPoint origin = BallPoint::origin(1);
  double fx = 0.0;
  for (double r : {0.25, 0.5, 0.9}) fx = std::max(fx, std::abs(mean_oscillation(identity(), origin, r, circle(), 12) - 2.0 * r / 3.0));
  bool sizes = true;
  for (const auto& e : solution_catalogue()) sizes = sizes && s.at({e.name, "lipschitz_mean"}).size() == 200;
  return {t.failed == 0 && sizes && fx <= 1e-10,
          t.text() + " with 100 balls x 2 majorants; oscillation fixture within " + sci(fx)};
}

Outcome gradient_means(const Suite& s) {
  Tally t = tally(s, "gradient_from_means");
  const InequalityCheck c = gradient_mean_margin(identity(), BallPoint::origin(1), 1.0, circle());
  const double err = std::max(std::abs(c.lhs - 1.0), std::abs(c.rhs - 4.0));
  return {t.failed == 0 && t.applicable > 0 && err <= 1e-10,
          t.text() + " (lambda = 0); fixture lhs " + sci(c.lhs) + ", rhs " + sci(c.rhs)};
}

Outcome bmo(const Suite& s) {
  Tally t = tally(s, "bmo");
  std::string consts;
  const auto& r = s.at({"planar_mix", "bmo"});
  consts = "planar_mix M_hat " + sci(constant(r, "M_hat")) + ", B_hat " + sci(constant(r, "B_hat"));
  return {t.failed == 0 && t.applicable > 0, t.text() + "; " + consts};
}

Outcome energy_reduction(const Suite& s) {
  Tally t = tally(s, "energy_reduction");
  const InequalityCheck c = lemma31_margin(identity(), 2.0, 1.0, circle());
  const double err = std::max(std::abs(c.lhs - 1.0 / 3.0), std::abs(c.rhs - std::sqrt(2.0) / 3.0));
  return {t.failed == 0 && err <= 1e-10, t.text() + "; fixture lhs " + sci(c.lhs) + ", rhs " + sci(c.rhs)};
}

Outcome energy(const Suite& s) {
  Tally t = tally(s, "energy_laplacian");
  const MarginReport r = verify_energy_laplacian(identity(), {1.0}, {});
  const double err = std::abs(r.lhs.at(0) - 4.0 / 3.0);
  return {t.failed == 0 && err <= 1e-9 && r.verdict == Verdict::pass,
          t.text() + "; fixture lhs " + sci(r.lhs.at(0)) + " (error " + sci(err) + "), rhs " + sci(r.rhs.at(0))};
}

Outcome hardy(const Suite& s) {
  Tally t = tally(s, "hardy_membership", [](const Solution& f) { return f.family() == Family::planar_harmonic; });
  double slack = INFINITY;
  std::string tightest;
  for (const auto& e : solution_catalogue()) {
    if (e.solution.family() != Family::planar_harmonic) continue;
    const auto& r = s.at({e.name, "hardy_membership"});
    if (e.name == "constant" || e.name == "zero") continue;
    const double m = worst_margin(r, [](const GridPoint& g) { return g.label == "bounded"; });
    if (m < slack) {
      slack = m;
      tightest = e.name;
    }
  }
  return {t.failed == 0 && t.applicable > 0, t.text() + " on planar harmonic fixtures; tightest bound slack " + sci(slack)};
}

Outcome power(const Suite& s) {
  const auto& r = s.at({"none", "power_inequality"});
  return {r.verdict == Verdict::pass && r.size() == 10000,
          std::to_string(r.size()) + " triples; min scaled margin " + sci(constant(r, "min_scaled_margin"))};
}

Outcome regularity(const Suite&) {
  const auto h = regularity_constants(Majorant::power(0.5));
  const auto l = regularity_constants(Majorant::power(1.0));
  const auto q = regularity_constants(Majorant::power(0.25));
  const bool ok = std::abs(h.c_low - 2.0) <= 0.02 && std::abs(h.c_high - 2.0) <= 0.02 && l.high_diverges &&
                  !h.high_diverges && !q.high_diverges && std::abs(q.c_low - 4.0) <= 0.04 &&
                  std::abs(q.c_high - 4.0 / 3.0) <= 4.0 / 300.0;
  return {ok, "t^1/2 -> (" + sci(h.c_low) + ", " + sci(h.c_high) + "); t -> " +
                  (l.high_diverges ? "divergent" : "finite") + "; t^1/4 -> (" + sci(q.c_low) + ", " + sci(q.c_high) + ")"};
}

}  // namespace

int main() {
  const Suite suite = run_suite(1);
  const Suite again = run_suite(4);
  const std::string a = serialize(suite);
  const std::string b = serialize(again);

  struct Criterion {
    const char* title;
    std::function<Outcome(const Suite&)> run;
  };
  const std::vector<Criterion> criteria{
      {"solution residuals and finite-difference jets", residuals},
      {"Green identity on the ball", green},
      {"Green representation of integral means", representation},
      {"monotone integral means and sub-mean values", monotone},
      {"kernel moment bound in C^2", kernel_moment},
      {"radial growth of integral means", growth},
      {"Lipschitz-type mean oscillation", lipschitz},
      {"gradient from sphere means and reverse Lipschitz", gradient_means},
      {"BMO characterisation of harmonic maps", bmo},
      {"weighted energy reduction", energy_reduction},
      {"energy Laplacian bound with explicit constants", energy},
      {"Hardy-space membership in the disk", hardy},
      {"elementary power inequality", power},
      {"majorant regularity constants", regularity},
  };

  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run(suite);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s  %2d  %s: %s\n", o.ok ? "PASS" : "FAIL", index++, c.title, o.detail.c_str());
  }
  const bool same = a == b;
  failures += same ? 0 : 1;
  std::printf("%s  %2d  %s: %zu reports, %zu bytes, thread counts 1 and 4 %s\n", same ? "PASS" : "FAIL", index,
              "determinism across thread counts", suite.size(), a.size(), same ? "byte-identical" : "differ");
  std::printf("%d/%d criteria pass\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
