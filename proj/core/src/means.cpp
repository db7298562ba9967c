#include "yukawa/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "yukawa/gauss_legendre.hpp"
#include "yukawa/sampling.hpp"
#include "yukawa/summation.hpp"

namespace yukawa {

std::string_view to_string(MajorantKind k) {
  switch (k) {
    case MajorantKind::power: return "power";
    case MajorantKind::scaled_power: return "scaled_power";
    case MajorantKind::log_damped: return "log_damped";
  }
  return "unknown";
}

Majorant::Majorant(MajorantKind kind, double scale, double alpha)
    : kind_(kind), scale_(scale), alpha_(alpha) {}

Majorant Majorant::power(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("power majorant: alpha must lie in (0, 1]");
  return Majorant(MajorantKind::power, 1.0, alpha);
}

Majorant Majorant::scaled_power(double scale, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("scaled_power majorant: alpha must lie in (0, 1]");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("scaled_power majorant: scale must be positive");
  return Majorant(MajorantKind::scaled_power, scale, alpha);
}

Majorant Majorant::log_damped() { return Majorant(MajorantKind::log_damped, 1.0, 1.0); }

double Majorant::operator()(double t) const {
  if (t <= 0.0) return 0.0;
  switch (kind_) {
    case MajorantKind::power: return alpha_ == 1.0 ? t : std::pow(t, alpha_);
    case MajorantKind::scaled_power: return scale_ * std::pow(t, alpha_);
    case MajorantKind::log_damped: return t / (1.0 + std::log1p(t));
  }
  return 0.0;
}

std::string Majorant::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case MajorantKind::power: os << "t^" << alpha_; break;
    case MajorantKind::scaled_power: os << scale_ << "*t^" << alpha_; break;
    case MajorantKind::log_damped: os << "t/(1+log(1+t))"; break;
  }
  return os.str();
}

MajorantAxioms check_majorant_axioms(const Majorant& omega) {
  MajorantAxioms ax;
  ax.zero_at_origin = omega(0.0) == 0.0;
  ax.nondecreasing = true;
  ax.ratio_nonincreasing = true;
  constexpr int kPerDecade = 10;
  double prev_t = 1e-8;
  double prev = omega(prev_t);
  for (int i = 1; i <= 16 * kPerDecade; ++i) {
    const double t = 1e-8 * std::pow(10.0, static_cast<double>(i) / kPerDecade);
    const double w = omega(t);
    if (w < prev * (1.0 - 1e-14)) ax.nondecreasing = false;
    if (w / t > (prev / prev_t) * (1.0 + 1e-14)) ax.ratio_nonincreasing = false;
    prev = w;
    prev_t = t;
  }
  return ax;
}

double majorant_transform_T(const Majorant& omega, double r, int quad_order) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("majorant_transform_T: r must lie in (0, 1)");
  // T(r) = (1/r) int_{log(1-r)}^{0} omega(e^{-s}) e^{s} ds
  const double lo = std::log1p(-r);
  const int panels = std::max(1, static_cast<int>(std::ceil(-lo)));
  CompensatedSum acc;
  for (int k = 0; k < panels; ++k) {
    const double a = lo + (-lo) * k / panels;
    const double b = lo + (-lo) * (k + 1) / panels;
    const auto gl = gauss_legendre(quad_order, a, b);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double s = gl.nodes[i];
      acc.add(gl.weights[i] * omega(std::exp(-s)) * std::exp(s));
    }
  }
  return acc.value() / r;
}

std::vector<double> default_delta_grid() {
  std::vector<double> g;
  for (int i = 0; i < 20; ++i) g.push_back(1e-6 * std::pow(0.9e6, i / 19.0));
  return g;
}

namespace {

constexpr int kPanelOrder = 16;

// int_0^inf omega(d e^{-s}) ds over unit panels until contributions vanish.
double lower_integral(const Majorant& omega, double delta) {
  const auto gl = gauss_legendre(kPanelOrder, 0.0, 1.0);
  CompensatedSum acc;
  for (int k = 0; k < 800; ++k) {
    CompensatedSum panel;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      panel.add(gl.weights[i] * omega(delta * std::exp(-(k + gl.nodes[i]))));
    }
    acc.add(panel.value());
    if (panel.value() <= 1e-17 * acc.value()) break;
  }
  return acc.value();
}

// int_0^{log(T/d)} omega(d e^s) e^{-s} ds on unit panels.
double upper_integral(const Majorant& omega, double delta, double cutoff) {
  const double end = std::log(cutoff / delta);
  const int panels = std::max(1, static_cast<int>(std::ceil(end)));
  CompensatedSum acc;
  for (int k = 0; k < panels; ++k) {
    const double a = end * k / panels;
    const double b = end * (k + 1) / panels;
    const auto gl = gauss_legendre(kPanelOrder, a, b);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double s = gl.nodes[i];
      acc.add(gl.weights[i] * omega(delta * std::exp(s)) * std::exp(-s));
    }
  }
  return acc.value();
}

}  // namespace

RegularityConstants regularity_constants(const Majorant& omega, const std::vector<double>& delta_grid) {
  if (delta_grid.empty()) throw DomainError("regularity_constants: empty delta grid");
  RegularityConstants out;
  out.delta_grid = delta_grid;
  for (double delta : delta_grid) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("regularity_constants: delta must lie in (0, 1)");
    const double w = omega(delta);
    out.low_ratios.push_back(lower_integral(omega, delta) / w);

    const double i4 = upper_integral(omega, delta, kRegularityCutoffs[0]);
    const double i5 = upper_integral(omega, delta, kRegularityCutoffs[1]);
    const double i6 = upper_integral(omega, delta, kRegularityCutoffs[2]);
    const double d1 = i5 - i4;
    const double d2 = i6 - i5;
    const double q = d1 > 0.0 ? d2 / d1 : 0.0;
    out.growth_ratio = std::max(out.growth_ratio, q);
    double total = i6;
    if (q >= kDivergenceRatio) {
      out.high_diverges = true;
    } else if (q > 0.0) {
      total += d2 * q / (1.0 - q);  // geometric tail beyond the last cutoff
    }
    out.high_ratios.push_back(total / w);
  }
  out.c_low = *std::max_element(out.low_ratios.begin(), out.low_ratios.end());
  out.c_high = out.high_diverges ? std::numeric_limits<double>::infinity()
                                 : *std::max_element(out.high_ratios.begin(), out.high_ratios.end());
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(MeanSelector s) { return s == MeanSelector::value ? "value" : "gradient"; }

double integral_mean_power(const Solution& f, double r, double p, MeanSelector selector,
                           const SphereRule& rule) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("integral_mean: r must lie in (0, 1)");
  if (!(p > 0.0)) throw DomainError("integral_mean: p must be positive");
  if (rule.n != f.dim()) throw DomainError("integral_mean: rule dimension mismatch");
  const CVec origin(static_cast<std::size_t>(f.dim()));
  if (selector == MeanSelector::value) {
    return integrate_sphere_at(rule, origin, r, [&](CSpan z) { return std::pow(std::abs(f.value(z)), p); });
  }
  return integrate_sphere_at(rule, origin, r, [&](CSpan z) {
    const double g2 = f.jet(z).gradient_norm_sq();
    return p == 2.0 ? g2 : std::pow(g2, 0.5 * p);
  });
}

double integral_mean(const Solution& f, double r, double p, MeanSelector selector, const SphereRule& rule) {
  return std::pow(integral_mean_power(f, r, p, selector, rule), 1.0 / p);
}

bool MeanCurve::nondecreasing(double tol) const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] < -tol) return false;
  }
  return true;
}

MeanCurve mean_curve(const Solution& f, double p, MeanSelector selector, const std::vector<double>& r_grid,
                     const SphereRule& rule) {
  MeanCurve c;
  c.p = p;
  c.selector = selector;
  c.r_grid = r_grid;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) throw DomainError("mean_curve: r grid must be increasing");
    if (r_grid[i] == 0.0) {
      const CVec origin(static_cast<std::size_t>(f.dim()));
      c.values.push_back(selector == MeanSelector::value ? std::abs(f.value(origin)) : f.jet(origin).gradient_norm());
    } else {
      c.values.push_back(integral_mean(f, r_grid[i], p, selector, rule));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

void check_ball_radius(const BallPoint& z, double r) {
  require_interior(z, "mean oscillation");
  if (!(r > 0.0)) throw DomainError("mean oscillation: radius must be positive");
  if (r > z.boundary_distance() * (1.0 + 1e-15)) throw DomainError("mean oscillation: requires r <= d(z)");
}

}  // namespace

double mean_oscillation(const Solution& f, const BallPoint& z, double r, const BallRule& rule) {
  check_ball_radius(z, r);
  const Complex fz = f.value(z);
  return integrate_ball(rule, [&](const BallNode& node) { return std::abs(f.value(node.z) - fz); });
}

double mean_oscillation(const Solution& f, const BallPoint& z, double r, const SphereRule& angular,
                        int radial_order) {
  check_ball_radius(z, r);
  const double radius = std::min(r, z.boundary_distance());
  const auto rule = ball_rule(z.dim(), CVec(z.coords().begin(), z.coords().end()), radius, radial_order, angular);
  return mean_oscillation(f, z, r, rule);
}

double ball_mean_deviation(const Solution& f, const BallPoint& z, double r, const SphereRule& angular,
                           int radial_order) {
  check_ball_radius(z, r);
  const double radius = std::min(r, z.boundary_distance());
  const auto rule = ball_rule(z.dim(), CVec(z.coords().begin(), z.coords().end()), radius, radial_order, angular);
  const Complex avg = integrate_ball(rule, [&](const BallNode& node) { return f.value(node.z); });
  return integrate_ball(rule, [&](const BallNode& node) { return std::abs(f.value(node.z) - avg); });
}

std::vector<BallSample> sample_balls(int n, std::size_t count, double max_center, double u_min,
                                     std::uint64_t seed) {
  if (!(u_min > 0.0 && u_min <= 1.0)) throw DomainError("sample_balls: u_min must lie in (0, 1]");
  SeededRng rng(seed);
  std::vector<BallSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BallPoint z(rng.in_ball(n, max_center));
    const double u = rng.uniform(u_min, 1.0);
    const double d = z.boundary_distance();
    out.push_back({std::move(z), u * d});
  }
  return out;
}

BmoEstimate bmo_estimate(const Solution& f, const std::vector<BallSample>& samples, const SphereRule& angular,
                         int radial_order) {
  BmoEstimate est;
  for (const auto& s : samples) {
    const double v = ball_mean_deviation(f, s.center, s.radius, angular, radial_order);
    est.per_sample.push_back(v);
    est.value = std::max(est.value, v);
  }
  return est;
}

}  // namespace yukawa
