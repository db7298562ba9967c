#include "yukawa/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "yukawa/energy.hpp"
#include "yukawa/green.hpp"
#include "yukawa/sampling.hpp"

namespace yukawa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9E3779B97F4A7C15ULL);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

enum Salt : std::uint64_t {
  kSaltSphere = 1,
  kSaltResidual,
  kSaltSubMean,
  kSaltLipschitz,
  kSaltHypothesis,
  kSaltGradientMeans,
  kSaltBmo,
  kSaltDecay,
  kSaltPower,
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

GridPoint point(std::string label, NamedValues params) { return {std::move(label), std::move(params)}; }

std::vector<double> linspace(double a, double b, std::size_t count) {
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return out;
}

int sphere_order_for(int n, int requested, int n1_default, int n2_default, int mc) {
  if (requested > 0) return requested;
  if (n == 1) return n1_default;
  if (n == 2) return n2_default;
  return mc;
}

SphereRule make_rule(int n, int order, const HarnessOptions& opt) {
  const SphereMethod m = default_sphere_method(n);
  if (m == SphereMethod::monte_carlo) return sphere_rule(n, order, m, derive_seed(opt.seed, kSaltSphere));
  return sphere_rule(n, order, m);
}

double abs_at_origin(const Solution& f) { return std::abs(f.value(CVec(static_cast<std::size_t>(f.dim())))); }

double grad_at_origin(const Solution& f) { return f.jet(CVec(static_cast<std::size_t>(f.dim()))).gradient_norm(); }

MarginReport start(std::string_view id, const Solution* f, const HarnessOptions& opt) {
  MarginReport r;
  r.check_id = std::string(id);
  r.solution = f ? f->describe() : "none";
  r.tolerance = opt.tolerance.value_or(default_tolerance(id));
  return r;
}

void record_quadrature(MarginReport& r, int n, const HarnessOptions& opt) {
  r.quadrature = {
      {"sphere_order", harness_sphere_rule(n, opt).orders.front()},
      {"radial_order", opt.radial_order},
      {"energy_radial_order", opt.energy_radial_order},
      {"oscillation_sphere_order", oscillation_sphere_rule(n, opt).orders.front()},
      {"oscillation_radial_order", opt.oscillation_radial_order},
  };
  if (default_sphere_method(n) == SphereMethod::monte_carlo) r.quadrature.emplace_back("mc_samples", opt.mc_samples);
}

template <class Impl>
MarginReport with_doubling(const HarnessOptions& opt, Impl&& impl) {
  MarginReport r = impl(opt);
  if (opt.auto_double && r.verdict != Verdict::inapplicable && r.near_violation()) {
    HarnessOptions d = doubled(opt);
    d.auto_double = false;
    MarginReport again = impl(d);
    again.auto_doubled = true;
    again.note("quadrature orders doubled after a margin fell inside (-allowance, 0)");
    return again;
  }
  return r;
}

std::vector<BallPoint> hypothesis_sample(int n, const std::vector<BallPoint>& extra, std::uint64_t seed) {
  std::vector<BallPoint> pts{BallPoint::origin(n)};
  for (auto& z : sample_ball_points(n, 256, 0.99, seed)) pts.push_back(std::move(z));
  pts.insert(pts.end(), extra.begin(), extra.end());
  return pts;
}

double mean_power(const Solution& f, double r, double p, MeanSelector sel, const SphereRule& rule) {
  if (r == 0.0) return std::pow(sel == MeanSelector::value ? abs_at_origin(f) : grad_at_origin(f), p);
  return integral_mean_power(f, r, p, sel, rule);
}

std::string omega_label(const Majorant& w) { return w.describe(); }

}  // namespace

HarnessOptions doubled(const HarnessOptions& opt) {
  HarnessOptions d = opt;
  const int n1 = 2;
  d.sphere_order = opt.sphere_order > 0 ? 2 * opt.sphere_order : 0;
  d.oscillation_sphere_order = opt.oscillation_sphere_order > 0 ? 2 * opt.oscillation_sphere_order : 0;
  if (opt.sphere_order == 0) d.sphere_order = -n1;
  if (opt.oscillation_sphere_order == 0) d.oscillation_sphere_order = -n1;
  d.radial_order = 2 * opt.radial_order;
  d.energy_radial_order = 2 * opt.energy_radial_order;
  d.oscillation_radial_order = 2 * opt.oscillation_radial_order;
  d.mc_samples = 2 * opt.mc_samples;
  return d;
}

SphereRule harness_sphere_rule(int n, const HarnessOptions& opt) {
  const int factor = opt.sphere_order < 0 ? -opt.sphere_order : 1;
  const int order = sphere_order_for(n, std::max(opt.sphere_order, 0), 128, 16, opt.mc_samples) * factor;
  return make_rule(n, order, opt);
}

SphereRule oscillation_sphere_rule(int n, const HarnessOptions& opt) {
  const int factor = opt.oscillation_sphere_order < 0 ? -opt.oscillation_sphere_order : 1;
  const int order = sphere_order_for(n, std::max(opt.oscillation_sphere_order, 0), 64, 12, opt.mc_samples) * factor;
  return make_rule(n, order, opt);
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "residual",         "green_identity",     "mp_representation", "monotone_subharmonic",
      "kernel_moment",    "radial_growth",      "lipschitz_mean",    "gradient_from_means",
      "bmo",              "energy_reduction",   "gradient_decay",    "energy_laplacian",
      "hardy_membership", "power_inequality",   "majorant_regularity",
  };
  return ids;
}

bool is_check_id(std::string_view id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Tolerance default_tolerance(std::string_view id) {
  if (id == "residual") return {1e-9, 0.0};
  if (id == "green_identity") return {1e-14, 1e-6};
  if (id == "mp_representation") return {1e-14, 1e-5};
  if (id == "monotone_subharmonic") return {1e-10, 0.0};
  if (id == "energy_laplacian") return {1e-14, 1e-6};
  if (id == "hardy_membership") return {1e-10, 0.0};
  if (id == "power_inequality") return {0.0, 1e-12};
  if (id == "majorant_regularity") return {1e-12, 0.0};
  return {1e-8, 0.0};
}

double radial_growth_prefactor(int n, double p, double lambda) {
  const double cap = 4.0 * n / p;
  if (!(lambda < cap)) throw DomainError("radial growth: requires lambda < 4n/p");
  return std::sqrt(4.0 * n / (4.0 * n - p * lambda));
}

double radial_growth_constant(const Solution& f, double p, const Majorant& omega, const std::vector<double>& grid,
                              const SphereRule& rule) {
  double c = grad_at_origin(f) / omega(1.0);
  for (double r : grid) {
    if (r <= 0.0) continue;
    c = std::max(c, integral_mean(f, r, p, MeanSelector::gradient, rule) / omega(1.0 / (1.0 - r)));
  }
  return c;
}

double lipschitz_factor(int n) {
  double h = 0.0;
  for (int j = 1; j <= 2 * n; ++j) h += 1.0 / j;
  return std::sqrt(2.0 * n) * h;
}

double hardy_bound(const Solution& f, double p, const HarnessOptions& opt) {
  if (f.dim() != 1) throw DomainError("hardy_bound: requires n = 1");
  const SphereRule angular = harness_sphere_rule(1, opt);
  const GreenRules rules{angular, opt.radial_order};
  const auto inner = green_ball_rule(1, 0.5, rules);
  const double log_part = integrate_ball_vn(inner, [&](const BallNode& nd) {
    return laplacian_abs_power(f.jet(nd.z), p, f.lambda()) * green_kernel(1, nd.rho, 1.0);
  });
  const auto outer = annulus_rule(1, 0.5, 1.0, opt.radial_order, angular);
  const double rim_part = integrate_ball_vn(outer, [&](const BallNode& nd) {
    return laplacian_abs_power(f.jet(nd.z), p, f.lambda()) * (1.0 - nd.rho);
  });
  return std::pow(abs_at_origin(f), p) + log_part + 2.0 * rim_part;
}

InequalityCheck gradient_mean_margin(const Solution& f, const BallPoint& a, double r, const SphereRule& rule) {
  const int n = f.dim();
  const Complex fa = f.value(a);
  const double mean = integrate_sphere_at(rule, a.coords(), r, [&](CSpan w) { return std::abs(f.value(w) - fa); });
  return {f.jet(a).gradient_norm(), 4.0 * n * std::sqrt(static_cast<double>(n)) / r * mean};
}

// ---------------------------------------------------------------------------

MarginReport verify_residual(const Solution& f, std::size_t count, const HarnessOptions& opt) {
  MarginReport r = start("residual", &f, opt);
  const auto pts = sample_ball_points(f.dim(), count, 0.99, derive_seed(opt.seed, kSaltResidual));
  double worst_res = 0.0;
  double worst_fd = 0.0;
  std::vector<double> fd_err(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Jet a = f.jet(pts[i]);
    const Jet d = finite_difference_jet(f.evaluator(), pts[i]);
    double e = 0.0;
    for (int k = 0; k < f.dim(); ++k) {
      e = std::max(e, std::abs(a.dz[k] - d.dz[k]) / std::max(1.0, std::abs(a.dz[k])));
      e = std::max(e, std::abs(a.dzbar[k] - d.dzbar[k]) / std::max(1.0, std::abs(a.dzbar[k])));
    }
    fd_err[i] = e;
  });
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Jet j = f.jet(pts[i]);
    const double res = std::abs(j.laplacian - f.lambda() * j.value) / (1.0 + std::abs(j.value));
    worst_res = std::max(worst_res, res);
    worst_fd = std::max(worst_fd, fd_err[i]);
    const NamedValues at{{"index", static_cast<double>(i)}, {"abs_z", pts[i].modulus()}};
    r.add_with_allowance(point("residual", at), res, 0.0, r.tolerance.allowance(0.0));
    r.add_with_allowance(point("fd_jet", at), fd_err[i], 0.0, 1e-5);
  }
  r.constant("max_residual", worst_res);
  r.constant("max_fd_rel_error", worst_fd);
  r.constant("fd_step", kFiniteDifferenceStep);
  r.note("residual rows: |Lap f - lambda f| / (1 + |f|) <= allowance; fd_jet rows: componentwise error / max(1, |analytic|) <= 1e-5");
  record_quadrature(r, f.dim(), opt);
  r.finalize();
  return r;
}

MarginReport verify_green_identity(const Solution& f, const std::vector<double>& r_grid, const HarnessOptions& opt) {
  MarginReport r = start("green_identity", &f, opt);
  const int n = f.dim();
  const GreenRules rules{harness_sphere_rule(n, opt), opt.radial_order};
  const std::vector<TestFunction> tests{constant_test_function(1.0), modulus_squared_test_function(),
                                        real_part_test_function(), abs_squared_of(f)};
  for (double rad : r_grid) {
    for (const auto& g : tests) {
      const IdentityCheck c = green_identity_margin(g, n, rad, rules);
      r.add(point(g.name, {{"r", rad}}), c.lhs, c.rhs, std::max({c.scale, std::abs(c.lhs), std::abs(c.rhs)}),
            Relation::eq);
      if (g.name == "abs_z_sq") {
        r.add_with_allowance(point("abs_z_sq_closed_form_lhs", {{"r", rad}}), c.lhs, rad * rad, 1e-9, Relation::eq);
        r.add_with_allowance(point("abs_z_sq_closed_form_rhs", {{"r", rad}}), c.rhs, rad * rad, 1e-9, Relation::eq);
      }
    }
  }
  if (n == 1) r.note("n = 1 uses the normalized area measure dA = dx dy / pi and the kernel log(r/|z|)/2");
  record_quadrature(r, n, opt);
  r.finalize();
  return r;
}

MarginReport verify_mp_representation(const Solution& f, const std::vector<double>& p_list,
                                      const std::vector<double>& r_grid, const HarnessOptions& opt) {
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("mp_representation", &f, o);
    const int n = f.dim();
    const GreenRules rules{harness_sphere_rule(n, o), o.radial_order};
    for (double p : p_list) {
      for (double rad : r_grid) {
        const IdentityCheck c = mp_representation_margin(f, p, rad, rules);
        r.add(point("representation", {{"p", p}, {"r", rad}}), c.lhs, c.rhs, std::max(c.lhs, c.rhs), Relation::eq);
      }
      for (double rad : {0.4, 0.7}) {
        const IdentityCheck c = mp_derivative_margin(f, p, rad, rules);
        r.add_with_allowance(point("derivative", {{"p", p}, {"r", rad}}), c.lhs, c.rhs,
                             1e-14 + 1e-4 * std::max(std::abs(c.lhs), std::abs(c.rhs)), Relation::eq);
      }
    }
    r.note("derivative rows compare a centered difference (h = 1e-4) of M_p^p with (1/(2n r^{2n-1})) int Lap|f|^p dV_N");
    record_quadrature(r, n, o);
    r.finalize();
    return r;
  });
}

MarginReport verify_monotone_subharmonic(const Solution& f, const std::vector<double>& p_list,
                                         const std::vector<double>& r_grid, std::size_t centers,
                                         const HarnessOptions& opt) {
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("monotone_subharmonic", &f, o);
    const int n = f.dim();
    const SphereRule rule = harness_sphere_rule(n, o);
    std::vector<double> ps;
    for (double p : p_list) {
      if (p >= 2.0 || (p >= 1.0 && f.lambda() == 0.0)) {
        ps.push_back(p);
      } else {
        r.note("p = " + fmt(p) + " skipped: p < 2 is covered only when lambda = 0 (and p >= 1)");
      }
    }
    if (f.lambda() == 0.0 && std::find(ps.begin(), ps.end(), 1.0) == ps.end()) ps.push_back(1.0);
    auto curve_rows = [&](double p, MeanSelector sel, const std::string& label) {
      std::vector<double> v(r_grid.size());
      for (std::size_t i = 0; i < r_grid.size(); ++i) v[i] = mean_power(f, r_grid[i], p, sel, rule);
      for (std::size_t i = 0; i + 1 < r_grid.size(); ++i) {
        r.add(point(label, {{"p", p}, {"r", r_grid[i]}, {"r_next", r_grid[i + 1]}}), v[i], v[i + 1], 0.0);
      }
    };
    for (double p : ps) curve_rows(p, MeanSelector::value, "mean_increment");
    curve_rows(2.0, MeanSelector::gradient, "gradient_mean_increment");
    SeededRng rng(derive_seed(o.seed, kSaltSubMean));
    for (std::size_t i = 0; i < centers; ++i) {
      const BallPoint z0(rng.in_ball(n, 0.8));
      const double rad = rng.uniform(0.2, 0.9) * z0.boundary_distance();
      for (double p : ps) {
        const double centre = std::pow(std::abs(f.value(z0)), p);
        const double mean =
            integrate_sphere_at(rule, z0.coords(), rad, [&](CSpan w) { return std::pow(std::abs(f.value(w)), p); });
        r.add_with_allowance(point("sub_mean_value", {{"p", p}, {"index", static_cast<double>(i)},
                                                      {"abs_center", z0.modulus()}, {"r", rad}}),
                             centre, mean, 1e-9);
      }
    }
    record_quadrature(r, n, o);
    r.finalize();
    return r;
  });
}

MarginReport verify_kernel_moment(const Solution& f, const std::vector<double>& p_list,
                                  const std::vector<double>& r_grid, const HarnessOptions& opt) {
  if (f.dim() < 2) return MarginReport::inapplicable("kernel_moment", f.describe(), "requires n >= 2");
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("kernel_moment", &f, o);
    const GreenRules rules{harness_sphere_rule(f.dim(), o), o.radial_order};
    for (double p : p_list) {
      for (double rad : r_grid) {
        const InequalityCheck c = kernel_moment_margin(f, p, rad, rules);
        r.add(point("moment", {{"p", p}, {"r", rad}}), c.lhs, c.rhs, c.rhs);
      }
    }
    r.constant("kernel_mass_factor", 1.0 / (4.0 * f.dim()));
    record_quadrature(r, f.dim(), o);
    r.finalize();
    return r;
  });
}

MarginReport verify_radial_growth(const Solution& f, const std::vector<double>& p_list,
                                  const std::vector<Majorant>& omegas, const std::vector<double>& r_grid,
                                  const HarnessOptions& opt) {
  const int n = f.dim();
  std::vector<double> ps;
  std::vector<std::string> skipped;
  for (double p : p_list) {
    if (p < 2.0) throw DomainError("verify_radial_growth: p must be >= 2");
    if (f.lambda() < 4.0 * n / p) {
      ps.push_back(p);
    } else {
      skipped.push_back("p = " + fmt(p) + " outside theorem hypothesis: lambda >= 4n/p = " + fmt(4.0 * n / p));
    }
  }
  if (ps.empty()) {
    auto r = MarginReport::inapplicable("radial_growth", f.describe(), "lambda >= 4n/p");
    r.notes = skipped;
    return r;
  }
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("radial_growth", &f, o);
    for (const auto& s : skipped) r.note(s);
    const SphereRule rule = harness_sphere_rule(n, o);
    const double rmax = *std::max_element(r_grid.begin(), r_grid.end());
    std::vector<double> dense = linspace(0.0, rmax, 65);
    dense.insert(dense.end(), r_grid.begin(), r_grid.end());
    const double f0 = abs_at_origin(f);
    for (double p : ps) {
      const double pre = radial_growth_prefactor(n, p, f.lambda());
      r.constant("prefactor[p=" + fmt(p) + "]", pre);
      std::vector<double> mp(r_grid.size());
      for (std::size_t i = 0; i < r_grid.size(); ++i) mp[i] = integral_mean(f, r_grid[i], p, MeanSelector::value, rule);
      for (const auto& w : omegas) {
        const double c = radial_growth_constant(f, p, w, dense, rule);
        const std::string key = "[p=" + fmt(p) + ",omega=" + omega_label(w) + "]";
        r.constant("C_hat" + key, c);
        r.constant("omega(1)" + key, w(1.0));
        for (std::size_t i = 0; i < r_grid.size(); ++i) {
          const double t = majorant_transform_T(w, r_grid[i]);
          const double bound = pre * std::sqrt(f0 * f0 + 2.0 * p * (p - 1.0) * c * c * w(1.0) * t);
          r.add(point("growth", {{"p", p}, {"alpha", w.alpha()}, {"r", r_grid[i]}}), mp[i], bound, bound);
        }
      }
      auto ratio_sup = [&](int kmax) {
        double sup = 0.0;
        for (int k = 0; k <= kmax; ++k) {
          const double rr = 1.0 - 0.1 * std::pow(10.0, -k / 20.0);
          sup = std::max(sup, integral_mean(f, rr, p, MeanSelector::value, rule) / std::sqrt(std::log(1.0 / (1.0 - rr))));
        }
        return sup;
      };
      const double s1 = ratio_sup(20);
      const double s2 = ratio_sup(40);
      const double change = s1 > 0.0 ? (s2 - s1) / s1 : 0.0;
      r.constant("log_ratio_sup_0.99[p=" + fmt(p) + "]", s1);
      r.constant("log_ratio_sup_0.999[p=" + fmt(p) + "]", s2);
      r.add_with_allowance(point("log_ratio_change", {{"p", p}, {"endpoint_from", 0.99}, {"endpoint_to", 0.999}}),
                           change, 0.05, 0.0);
    }
    r.note("C_hat is the maximum of M_p(r, grad f) / omega(1/(1-r)) over r in [0, max r_grid] (65 points plus r_grid)");
    r.note("log_ratio_change: relative growth of sup M_p(r,f) / (log 1/(1-r))^{1/2} over [0.9, endpoint] must stay below 5%");
    record_quadrature(r, n, o);
    r.finalize();
    return r;
  });
}

MarginReport verify_lipschitz_mean(const Solution& f, const std::vector<Majorant>& omegas, std::size_t samples,
                                   const HarnessOptions& opt) {
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("lipschitz_mean", &f, o);
    const int n = f.dim();
    const auto balls = sample_balls(n, samples, 0.9, 0.1, derive_seed(o.seed, kSaltLipschitz));
    std::vector<BallPoint> centers;
    for (const auto& b : balls) centers.push_back(b.center);
    const auto hyp = hypothesis_sample(n, centers, derive_seed(o.seed, kSaltHypothesis));
    const SphereRule angular = oscillation_sphere_rule(n, o);
    std::vector<double> osc(balls.size());
    for (std::size_t i = 0; i < balls.size(); ++i) {
      osc[i] = mean_oscillation(f, balls[i].center, balls[i].radius, angular, o.oscillation_radial_order);
    }
    const double factor = lipschitz_factor(n);
    r.constant("sqrt(2n)*H_2n", factor);
    for (const auto& w : omegas) {
      double c = 0.0;
      for (const auto& z : hyp) c = std::max(c, f.jet(z).gradient_norm() / w(1.0 / z.boundary_distance()));
      r.constant("C_hat[omega=" + omega_label(w) + "]", c);
      r.constant("C_conclusion[omega=" + omega_label(w) + "]", c * factor);
      for (std::size_t i = 0; i < balls.size(); ++i) {
        const double rad = balls[i].radius;
        const double bound = c * factor * rad * w(1.0 / rad);
        r.add(point("oscillation", {{"alpha", w.alpha()}, {"index", static_cast<double>(i)},
                                    {"abs_center", balls[i].center.modulus()}, {"r", rad}}),
              osc[i], bound, bound);
      }
    }
    r.note("C_hat: max of |grad f(z)| / omega(1/d(z)) over the origin, the sample centers and 256 seeded points with |z| <= 0.99");
    record_quadrature(r, n, o);
    r.finalize();
    return r;
  });
}

MarginReport verify_gradient_from_means(const Solution& f, const std::vector<Majorant>& omegas,
                                        std::size_t samples, const HarnessOptions& opt) {
  if (f.lambda() != 0.0) return MarginReport::inapplicable("gradient_from_means", f.describe(), "requires lambda = 0");
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("gradient_from_means", &f, o);
    const int n = f.dim();
    const double sn = std::sqrt(static_cast<double>(n));
    const auto balls = sample_balls(n, samples, 0.9, 0.1, derive_seed(o.seed, kSaltGradientMeans));
    const SphereRule sphere = harness_sphere_rule(n, o);
    const SphereRule angular = oscillation_sphere_rule(n, o);
    for (std::size_t i = 0; i < balls.size(); ++i) {
      const auto& a = balls[i].center;
      const InequalityCheck c = gradient_mean_margin(f, a, balls[i].radius, sphere);
      r.add(point("poisson_gradient", {{"index", static_cast<double>(i)}, {"abs_center", a.modulus()}, {"r", balls[i].radius}}),
            c.lhs, c.rhs, 0.0);
    }
    std::vector<BallSample> osc_balls = balls;
    for (const auto& b : balls) osc_balls.push_back({b.center, b.center.boundary_distance()});
    std::vector<double> osc(osc_balls.size());
    for (std::size_t i = 0; i < osc_balls.size(); ++i) {
      osc[i] = mean_oscillation(f, osc_balls[i].center, osc_balls[i].radius, angular, o.oscillation_radial_order);
    }
    for (const auto& w : omegas) {
      double c = 0.0;
      for (std::size_t i = 0; i < osc_balls.size(); ++i) {
        const double rad = osc_balls[i].radius;
        c = std::max(c, osc[i] / (rad * w(1.0 / rad)));
      }
      r.constant("C_osc[omega=" + omega_label(w) + "]", c);
      for (std::size_t i = 0; i < balls.size(); ++i) {
        const auto& z = balls[i].center;
        const double bound = 2.0 * (2.0 * n + 1.0) * sn * c * w(1.0 / z.boundary_distance());
        r.add(point("reverse_lipschitz", {{"alpha", w.alpha()}, {"index", static_cast<double>(i)}, {"abs_z", z.modulus()}}),
              f.jet(z).gradient_norm(), bound, bound);
      }
    }
    r.note("C_osc: max of oscillation / (r omega(1/r)) over the sampled balls and the balls B(z, d(z)) at the sample centers");
    record_quadrature(r, n, o);
    r.finalize();
    return r;
  });
}

MarginReport verify_bmo(const Solution& f, std::size_t centers, const HarnessOptions& opt) {
  if (f.lambda() != 0.0) return MarginReport::inapplicable("bmo", f.describe(), "requires lambda = 0");
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("bmo", &f, o);
    const int n = f.dim();
    SeededRng rng(derive_seed(o.seed, kSaltBmo));
    std::vector<BallSample> balls;
    std::vector<BallPoint> cs;
    for (std::size_t i = 0; i < centers; ++i) {
      BallPoint z(rng.in_ball(n, 0.9));
      for (double u : {0.25, 0.5, 0.75, 1.0}) balls.push_back({z, u * z.boundary_distance()});
      cs.push_back(std::move(z));
    }
    const SphereRule angular = oscillation_sphere_rule(n, o);
    const BmoEstimate est = bmo_estimate(f, balls, angular, o.oscillation_radial_order);
    const auto hyp = hypothesis_sample(n, cs, derive_seed(o.seed, kSaltHypothesis));
    double m = 0.0;
    for (const auto& z : hyp) m = std::max(m, f.jet(z).gradient_norm() * z.boundary_distance());
    const double forward = 2.0 * m * lipschitz_factor(n);
    const double reverse_factor = 2.0 * (2.0 * n + 1.0) * std::sqrt(static_cast<double>(n));
    r.constant("M_hat", m);
    r.constant("B_hat", est.value);
    r.constant("forward_bound", forward);
    r.constant("reverse_factor", reverse_factor);
    for (std::size_t i = 0; i < balls.size(); ++i) {
      r.add(point("forward", {{"index", static_cast<double>(i)}, {"abs_center", balls[i].center.modulus()},
                              {"r", balls[i].radius}}),
            est.per_sample[i], forward, forward);
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
      r.add(point("reverse", {{"index", static_cast<double>(i)}, {"abs_z", cs[i].modulus()}}),
            f.jet(cs[i]).gradient_norm() * cs[i].boundary_distance(), reverse_factor * est.value,
            reverse_factor * est.value);
    }
    r.note("B_hat is a lower estimate of the BMO norm: the maximum over 4 radii (d/4 .. d) at each seeded center");
    r.note("forward: ball deviation <= 2 M_hat sqrt(2n) H_2n; reverse: |grad f(z)| d(z) <= 2(2n+1) sqrt(n) B_hat");
    record_quadrature(r, n, o);
    r.finalize();
    return r;
  });
}

MarginReport verify_energy_reduction(const Solution& f, const std::vector<double>& p_list, const std::vector<double>& beta_list,
                            const HarnessOptions& opt) {
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("energy_reduction", &f, o);
    const SphereRule angular = harness_sphere_rule(f.dim(), o);
    for (double beta : beta_list) {
      if (!(beta > 0.0)) throw DomainError("verify_energy_reduction: beta must be positive");
      for (double p : p_list) {
        const InequalityCheck c = lemma31_margin(f, p, beta, angular, o.energy_radial_order);
        r.add(point("energy_reduction", {{"p", p}, {"beta", beta}}), c.lhs, c.rhs, c.rhs);
      }
    }
    record_quadrature(r, f.dim(), o);
    r.finalize();
    return r;
  });
}

MarginReport verify_gradient_decay(const Solution& f, const std::vector<double>& beta_list, std::size_t count,
                                   const HarnessOptions& opt) {
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("gradient_decay", &f, o);
    const SphereRule angular = harness_sphere_rule(f.dim(), o);
    const auto pts = sample_ball_points(f.dim(), count, 0.97, derive_seed(o.seed, kSaltDecay));
    for (double beta : beta_list) {
      const double D = dirichlet_energy(f, EnergySpec{beta - 1.0, 1.0, 1.0, o.energy_radial_order}, angular);
      const DecaySlack s = gradient_decay_margin(f, beta, D, pts);
      r.constant("D[beta=" + fmt(beta) + "]", D);
      r.constant("C3[beta=" + fmt(beta) + "]", s.C3);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        r.add(point("decay", {{"beta", beta}, {"index", static_cast<double>(i)}, {"abs_z", pts[i].modulus()}}),
              s.gradient[i], s.bound[i], s.bound[i]);
      }
    }
    record_quadrature(r, f.dim(), o);
    r.finalize();
    return r;
  });
}

MarginReport verify_energy_laplacian(const Solution& f, const std::vector<double>& beta_list,
                                     const HarnessOptions& opt) {
  for (double beta : beta_list) {
    if (!(beta > 0.0 && beta <= 1.0)) {
      return MarginReport::inapplicable("energy_laplacian", f.describe(), "requires beta in (0, 1], got " + fmt(beta));
    }
  }
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("energy_laplacian", &f, o);
    const int n = f.dim();
    const SphereRule angular = harness_sphere_rule(n, o);
    for (double beta : beta_list) {
      const double D = dirichlet_energy(f, EnergySpec{beta - 1.0, 1.0, 1.0, o.energy_radial_order}, angular);
      const ConstantChain c = constant_chain(f, beta, D);
      const double nu = 1.0 + c.p * (n - 1.0);
      const BallRule rule = energy_rule(n, EnergySpec{nu, 0.0, 0.0, o.energy_radial_order}, angular);
      const double lhs = integrate_ball_vn(rule, [&](const BallNode& nd) {
        return std::pow(nd.rim_gap, nu) * laplacian_abs_power(f.jet(nd.z), c.p, f.lambda());
      });
      const double rhs = c.C1 * D + c.C2;
      const std::string key = "[beta=" + fmt(beta) + "]";
      r.constant("D" + key, D);
      r.constant("C1" + key, c.C1);
      r.constant("C2" + key, c.C2);
      r.constant("C3" + key, c.C3);
      r.constant("C4" + key, c.C4);
      r.constant("C5" + key, c.C5);
      r.constant("C6" + key, c.C6);
      if (c.zero_power_convention) r.note("beta = " + fmt(beta) + ": p = 2 and a zero base in C6; 0^0 taken as 1");
      r.add(point("energy_laplacian", {{"beta", beta}, {"p", c.p}}), lhs, rhs, rhs);
    }
    r.note("lhs integrates over the unit ball of C^n (the statement writes the disk; the exponent 1 + p(n-1) and the proof use the ball)");
    r.note("C1 = C6 beta sqrt(2)/2 and C2 = C5 from the proof's explicit chain");
    record_quadrature(r, n, o);
    r.finalize();
    return r;
  });
}

MarginReport verify_hardy_membership(const Solution& f, const std::vector<double>& beta_list,
                                     const std::vector<double>& r_grid, const HarnessOptions& opt) {
  if (f.dim() != 1) return MarginReport::inapplicable("hardy_membership", f.describe(), "requires n = 1");
  for (double beta : beta_list) {
    if (!(beta > 0.0 && beta <= 1.0)) {
      return MarginReport::inapplicable("hardy_membership", f.describe(), "requires beta in (0, 1], got " + fmt(beta));
    }
  }
  return with_doubling(opt, [&](const HarnessOptions& o) {
    MarginReport r = start("hardy_membership", &f, o);
    const SphereRule rule = harness_sphere_rule(1, o);
    for (double beta : beta_list) {
      const double p = 2.0 / beta;
      const double D = dirichlet_energy(f, EnergySpec{beta - 1.0, 1.0, 1.0, o.energy_radial_order}, rule);
      const double bound = hardy_bound(f, p, o);
      const double root = std::pow(bound, 1.0 / p);
      std::vector<double> mp(r_grid.size());
      for (std::size_t i = 0; i < r_grid.size(); ++i) mp[i] = integral_mean(f, r_grid[i], p, MeanSelector::value, rule);
      const std::string key = "[beta=" + fmt(beta) + "]";
      r.constant("D" + key, D);
      r.constant("bound_p_power" + key, bound);
      r.constant("grid_sup" + key, mp.empty() ? 0.0 : *std::max_element(mp.begin(), mp.end()));
      for (std::size_t i = 0; i + 1 < mp.size(); ++i) {
        r.add(point("mean_increment", {{"beta", beta}, {"r", r_grid[i]}, {"r_next", r_grid[i + 1]}}), mp[i], mp[i + 1],
              0.0);
      }
      for (std::size_t i = 0; i < mp.size(); ++i) {
        r.add_with_allowance(point("bounded", {{"beta", beta}, {"r", r_grid[i]}}), mp[i], root, 1e-8);
      }
    }
    r.note("bound: |f(0)|^p + (1/2) int_{|z|<1/2} Lap|f|^p log(1/|z|) dA + 2 int_{|z|>1/2} Lap|f|^p (1-|z|) dA, dA normalized");
    r.note("split radius r0 = 1/2: log(r/|z|) <= (2/r)(r-|z|) holds on [r0, r], and (r-|z|)/r <= (1-|z|)/r0");
    record_quadrature(r, 1, o);
    r.finalize();
    return r;
  });
}

MarginReport verify_power_inequality(std::size_t count, const HarnessOptions& opt) {
  MarginReport r = start("power_inequality", nullptr, opt);
  SeededRng rng(derive_seed(opt.seed, kSaltPower));
  double worst = kInf;
  for (std::size_t i = 0; i < count; ++i) {
    const double a = rng.uniform(0.0, 10.0);
    const double b = rng.uniform(0.0, 10.0);
    const double q = 4.0 * (1.0 - rng.uniform());
    const double lhs = std::pow(a + b, q);
    const double rhs = std::pow(2.0, std::max(q - 1.0, 0.0)) * (std::pow(a, q) + std::pow(b, q));
    const double scale = std::pow(std::max(a + b, 1.0), q);
    worst = std::min(worst, (rhs - lhs) / scale);
    r.add(point("triple", {{"a", a}, {"b", b}, {"q", q}}), lhs, rhs, scale);
  }
  r.constant("min_scaled_margin", count ? worst : 0.0);
  r.finalize();
  return r;
}

MarginReport verify_majorant_regularity(const std::vector<Majorant>& omegas, const HarnessOptions& opt) {
  MarginReport r = start("majorant_regularity", nullptr, opt);
  for (const auto& w : omegas) {
    const std::string key = "[omega=" + omega_label(w) + "]";
    const MajorantAxioms ax = check_majorant_axioms(w);
    r.add(point("axioms", {{"alpha", w.alpha()}}), ax.ok() ? 0.0 : 1.0, 0.0, 0.0, Relation::eq);
    const RegularityConstants c = regularity_constants(w);
    r.constant("c_low" + key, c.c_low);
    r.constant("growth_ratio" + key, c.growth_ratio);
    r.constant("high_diverges" + key, c.high_diverges ? 1.0 : 0.0);
    if (!c.high_diverges) r.constant("c_high" + key, c.c_high);
    if (c.high_diverges) r.note(omega_label(w) + ": the upper integral diverges, omega is not regular");
    for (std::size_t i = 0; i < c.delta_grid.size(); ++i) {
      r.add(point("lower", {{"alpha", w.alpha()}, {"delta", c.delta_grid[i]}}), c.low_ratios[i], c.c_low, c.c_low);
      if (!c.high_diverges) {
        r.add(point("upper", {{"alpha", w.alpha()}, {"delta", c.delta_grid[i]}}), c.high_ratios[i], c.c_high, c.c_high);
      }
    }
  }
  r.note("upper integral cutoffs 1e4, 1e5, 1e6; divergence when successive increments shrink by less than a factor 0.8");
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------

std::vector<double> default_lambda_grid(int n, double p, std::size_t count) {
  return linspace(0.0, 8.0 * n / p, count);
}

SweepTable lambda_sweep(const Solution& f, double p, const Majorant& omega, const std::vector<double>& lambda_grid,
                        const std::vector<double>& r_grid, const HarnessOptions& opt) {
  SweepTable t;
  t.solution = f.describe();
  t.p = p;
  t.omega = omega_label(omega);
  for (double lam : lambda_grid) {
    SweepRow row;
    row.lambda = lam;
    row.inside_hypothesis = lam < 4.0 * f.dim() / p;
    if (!row.inside_hypothesis) {
      row.status = "outside theorem hypothesis";
      t.rows.push_back(row);
      continue;
    }
    std::optional<Solution> g;
    try {
      g = with_lambda(f, lam);
    } catch (const DomainError&) {
      row.status = "unsupported by family";
      t.rows.push_back(row);
      continue;
    }
    const MarginReport rep = verify_radial_growth(*g, {p}, {omega}, r_grid, opt);
    row.min_margin = rep.min_margin;
    row.status = std::string(to_string(rep.verdict));
    t.rows.push_back(row);
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
T param_or(const std::optional<T>& v, T fallback) {
  return v ? *v : std::move(fallback);
}

std::vector<double> default_growth_grid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
}

std::vector<double> default_hardy_grid() {
  std::vector<double> g = linspace(0.05, 0.95, 19);
  for (double r : {0.99, 0.995, 0.999}) g.push_back(r);
  return g;
}

}  // namespace

MarginReport run_check(std::string_view id, const Solution& f, const CheckParams& prm, const HarnessOptions& opt) {
  using V = std::vector<double>;
  using M = std::vector<Majorant>;
  if (id == "residual") return verify_residual(f, param_or(prm.z_samples, std::size_t{1000}), opt);
  if (id == "green_identity") return verify_green_identity(f, param_or(prm.r_grid, V{0.3, 0.7}), opt);
  if (id == "mp_representation") {
    return verify_mp_representation(f, param_or(prm.p, V{2.0, 3.0, 4.0}), param_or(prm.r_grid, V{0.3, 0.6, 0.9}), opt);
  }
  if (id == "monotone_subharmonic") {
    return verify_monotone_subharmonic(f, param_or(prm.p, V{2.0, 2.5, 3.0, 4.0, 6.0}),
                                       param_or(prm.r_grid, linspace(0.02, 0.98, 50)),
                                       param_or(prm.z_samples, std::size_t{20}), opt);
  }
  if (id == "kernel_moment") {
    return verify_kernel_moment(f, param_or(prm.p, V{2.0, 3.0, 4.0}), param_or(prm.r_grid, V{0.3, 0.5, 0.8}), opt);
  }
  if (id == "radial_growth") {
    return verify_radial_growth(f, param_or(prm.p, V{2.0}), param_or(prm.majorants, M{Majorant::power(1.0)}),
                                param_or(prm.r_grid, default_growth_grid()), opt);
  }
  if (id == "lipschitz_mean") {
    return verify_lipschitz_mean(f, param_or(prm.majorants, M{Majorant::power(1.0), Majorant::power(0.5)}),
                                 param_or(prm.ball_samples, std::size_t{100}), opt);
  }
  if (id == "gradient_from_means") {
    return verify_gradient_from_means(f, param_or(prm.majorants, M{Majorant::power(1.0)}),
                                      param_or(prm.ball_samples, std::size_t{50}), opt);
  }
  if (id == "bmo") return verify_bmo(f, param_or(prm.ball_samples, std::size_t{32}), opt);
  if (id == "energy_reduction") {
    return verify_energy_reduction(f, param_or(prm.p, V{2.0, 3.0, 4.0}), param_or(prm.beta, V{0.25, 0.5, 1.0}), opt);
  }
  if (id == "gradient_decay") {
    return verify_gradient_decay(f, param_or(prm.beta, V{0.5, 1.0}), param_or(prm.z_samples, std::size_t{200}), opt);
  }
  if (id == "energy_laplacian") return verify_energy_laplacian(f, param_or(prm.beta, V{0.5, 1.0}), opt);
  if (id == "hardy_membership") {
    return verify_hardy_membership(f, param_or(prm.beta, V{0.5, 1.0}), param_or(prm.r_grid, default_hardy_grid()), opt);
  }
  if (id == "power_inequality") return verify_power_inequality(param_or(prm.z_samples, std::size_t{10000}), opt);
  if (id == "majorant_regularity") {
    return verify_majorant_regularity(
        param_or(prm.majorants, M{Majorant::power(0.5), Majorant::power(1.0), Majorant::power(0.25)}), opt);
  }
  throw DomainError("unknown check id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------

const std::vector<CatalogueEntry>& solution_catalogue() {
  static const std::vector<CatalogueEntry> entries = [] {
    const auto H = [](std::string_view name, int n) { return HarmonicPolynomial::catalogue(name, n); };
    CVec reciprocal;
    for (int k = 0; k <= 30; ++k) reciprocal.push_back(0.5 * std::pow(0.9, k));
    return std::vector<CatalogueEntry>{
        {"exp_n1", make_exponential(1, {1.0}, {0.5})},
        {"exp_n1_scaled", make_exponential(1, {1.0}, {0.25})},
        {"exp_n2", make_exponential(2, {1.0, 1.0}, {0.5, 0.5})},
        {"exp_n2_scaled", make_exponential(2, {0.5, 0.5}, {0.25, 0.25})},
        {"sep_n1_one", make_separable(1, H("one", 1), 4.0)},
        {"sep_n1_z1", make_separable(1, H("z1", 1), 4.0)},
        {"sep_n2_z1z2", make_separable(2, H("z1z2", 2), 3.0)},
        {"sep_n2_z1z2_harmonic", make_separable(2, H("z1z2", 2), 0.0)},
        {"planar_z", make_planar_harmonic({0.0, 1.0}, {})},
        {"planar_mix", make_planar_harmonic({0.0, 0.0, 1.0}, {0.0, 1.0})},
        {"planar_reciprocal", make_planar_harmonic(reciprocal, reciprocal)},
        {"constant", make_planar_harmonic({1.0}, {})},
        {"zero", make_planar_harmonic({}, {})},
    };
  }();
  return entries;
}

const Solution& catalogue_solution(std::string_view name) {
  for (const auto& e : solution_catalogue()) {
    if (e.name == name) return e.solution;
  }
  throw DomainError("unknown catalogue solution '" + std::string(name) + "'");
}

}  // namespace yukawa
