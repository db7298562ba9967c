#include "yukawa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "yukawa/gauss_legendre.hpp"
#include "yukawa/sampling.hpp"

namespace yukawa {

std::string_view to_string(SphereMethod m) {
  switch (m) {
    case SphereMethod::circle_trapezoid: return "circle_trapezoid";
    case SphereMethod::hopf_product: return "hopf_product";
    case SphereMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

SphereMethod parse_sphere_method(std::string_view s) {
  if (s == "circle_trapezoid") return SphereMethod::circle_trapezoid;
  if (s == "hopf_product") return SphereMethod::hopf_product;
  if (s == "monte_carlo") return SphereMethod::monte_carlo;
  throw DomainError("unknown sphere method '" + std::string(s) + "'");
}

SphereMethod default_sphere_method(int n) {
  if (n == 1) return SphereMethod::circle_trapezoid;
  if (n == 2) return SphereMethod::hopf_product;
  return SphereMethod::monte_carlo;
}

SphereRule hopf_rule(int t_order, int a_order, int b_order) {
  if (t_order < 4 || a_order < 4 || b_order < 4) throw DomainError("hopf_rule: orders must be >= 4");
  const auto gl = gauss_legendre(t_order, 0.0, std::numbers::pi / 2.0);
  SphereRule rule;
  rule.n = 2;
  rule.method = SphereMethod::hopf_product;
  rule.orders = {t_order, a_order, b_order};
  const std::size_t total = static_cast<std::size_t>(t_order) * a_order * b_order;
  rule.coords.reserve(2 * total);
  rule.weights.reserve(total);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int it = 0; it < t_order; ++it) {
    const double t = gl.nodes[static_cast<std::size_t>(it)];
    const double wt = gl.weights[static_cast<std::size_t>(it)] * std::sin(2.0 * t);
    const double c = std::cos(t);
    const double s = std::sin(t);
    for (int ia = 0; ia < a_order; ++ia) {
      const double a = two_pi * ia / a_order;
      const Complex ea{std::cos(a), std::sin(a)};
      for (int ib = 0; ib < b_order; ++ib) {
        const double b = two_pi * ib / b_order;
        rule.coords.push_back(c * ea);
        rule.coords.emplace_back(s * std::cos(b), s * std::sin(b));
        rule.weights.push_back(wt / (static_cast<double>(a_order) * b_order));
      }
    }
  }
  return rule;
}

SphereRule sphere_rule(int n, int order, SphereMethod method, std::optional<std::uint64_t> seed) {
  if (n < 1) throw DomainError("sphere_rule: dimension must be positive");
  if (order < 4) throw DomainError("sphere_rule: order must be >= 4");
  switch (method) {
    case SphereMethod::circle_trapezoid: {
      if (n != 1) throw DomainError("sphere_rule: circle_trapezoid needs n = 1");
      SphereRule rule;
      rule.n = 1;
      rule.method = method;
      rule.orders = {order};
      rule.coords.reserve(static_cast<std::size_t>(order));
      for (int k = 0; k < order; ++k) {
        const double th = 2.0 * std::numbers::pi * k / order;
        rule.coords.emplace_back(std::cos(th), std::sin(th));
      }
      rule.weights.assign(static_cast<std::size_t>(order), 1.0 / order);
      return rule;
    }
    case SphereMethod::hopf_product:
      if (n != 2) throw DomainError("sphere_rule: hopf_product needs n = 2");
      return hopf_rule(order, order, order);
    case SphereMethod::monte_carlo: {
      if (!seed) throw DomainError("sphere_rule: monte_carlo needs a seed");
      SeededRng rng(*seed);
      SphereRule rule;
      rule.n = n;
      rule.method = method;
      rule.orders = {order};
      rule.seed = seed;
      rule.coords.reserve(static_cast<std::size_t>(order) * n);
      for (int k = 0; k < order; ++k) {
        const CVec d = rng.direction(n);
        rule.coords.insert(rule.coords.end(), d.begin(), d.end());
      }
      rule.weights.assign(static_cast<std::size_t>(order), 1.0 / order);
      return rule;
    }
  }
  throw DomainError("sphere_rule: unsupported method");
}

// ---------------------------------------------------------------------------

namespace {

void append_panel(RadialRule& rule, double a, double b, int order) {
  const auto gl = gauss_legendre(order, a, b);
  const int n = rule.n;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double rho = gl.nodes[i];
    rule.nodes.push_back(rho);
    rule.weights.push_back(gl.weights[i] * 2.0 * n * std::pow(rho, 2 * n - 1));
    rule.rim_gaps.push_back(1.0 - rho);
  }
}

void check_radial_args(int n, double a, double b, int order) {
  if (n < 1) throw DomainError("radial rule: dimension must be positive");
  if (order < 1) throw DomainError("radial rule: order must be positive");
  if (!(a >= 0.0 && b > a)) throw DomainError("radial rule: need 0 <= a < b");
}

}  // namespace

RadialRule radial_gauss(int n, double a, double b, int order) {
  check_radial_args(n, a, b, order);
  RadialRule rule;
  rule.n = n;
  rule.inner = a;
  rule.outer = b;
  append_panel(rule, a, b, order);
  return rule;
}

RadialRule radial_origin_graded(int n, double r, int order) {
  check_radial_args(n, 0.0, r, order);
  RadialRule rule;
  rule.n = n;
  rule.inner = 0.0;
  rule.outer = r;
  constexpr int levels = 12;
  const int inner_order = std::max(8, order / 2);
  double lo = r * std::pow(0.25, levels);
  append_panel(rule, 0.0, lo, inner_order);
  for (int k = levels - 1; k >= 1; --k) {
    const double hi = r * std::pow(0.25, k);
    append_panel(rule, lo, hi, inner_order);
    lo = hi;
  }
  append_panel(rule, lo, r, order);
  return rule;
}

int rim_substitution_power(double nu) {
  const double e = 1.0 + nu;
  for (int m = 1; m <= 64; ++m) {
    const double v = m * e;
    if (std::abs(v - std::round(v)) < 1e-9 && std::round(v) >= 1.0) return m;
  }
  return 8;
}

RadialRule radial_rim_clustered(int n, int order, double nu) {
  if (!(nu > -1.0)) throw DomainError("radial_rim_clustered: nu must exceed -1");
  check_radial_args(n, 0.0, 1.0, order);
  const int m = rim_substitution_power(nu);
  const auto gl = gauss_legendre(order, 0.0, 1.0);
  RadialRule rule;
  rule.n = n;
  rule.inner = 0.0;
  rule.outer = 1.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double s = gl.nodes[i];
    const double gap = std::pow(s, m);
    const double rho = 1.0 - gap;
    const double jac = m * std::pow(s, m - 1);
    rule.nodes.push_back(rho);
    rule.weights.push_back(gl.weights[i] * jac * 2.0 * n * std::pow(rho, 2 * n - 1));
    rule.rim_gaps.push_back(gap);
  }
  return rule;
}

// ---------------------------------------------------------------------------

double BallRule::lebesgue_volume() const {
  const int n = dim();
  return std::pow(std::numbers::pi, n) * std::pow(radius, 2 * n) / std::tgamma(n + 1.0);
}

BallRule ball_rule(int n, CVec center, double r, int radial_order, SphereRule angular,
                   RadialLayout layout) {
  if (static_cast<int>(center.size()) != n || angular.n != n) {
    throw DomainError("ball_rule: dimension mismatch");
  }
  if (!(r > 0.0)) throw DomainError("ball_rule: radius must be positive");
  if (radial_order < 8) throw DomainError("ball_rule: radial_order must be >= 8");
  if (norm(center) + r > 1.0 + 1e-14) throw DomainError("ball_rule: ball leaves the unit ball");
  BallRule rule;
  rule.center = std::move(center);
  rule.radius = r;
  rule.radial = layout == RadialLayout::origin_graded ? radial_origin_graded(n, r, radial_order)
                                                      : radial_gauss(n, 0.0, r, radial_order);
  rule.angular = std::move(angular);
  return rule;
}

BallRule ball_rule_rim(int n, int radial_order, double nu, SphereRule angular) {
  if (angular.n != n) throw DomainError("ball_rule_rim: dimension mismatch");
  BallRule rule;
  rule.center = CVec(static_cast<std::size_t>(n));
  rule.radius = 1.0;
  rule.radial = radial_rim_clustered(n, radial_order, nu);
  rule.angular = std::move(angular);
  return rule;
}

BallRule annulus_rule(int n, double a, double b, int radial_order, SphereRule angular) {
  if (angular.n != n) throw DomainError("annulus_rule: dimension mismatch");
  if (b > 1.0) throw DomainError("annulus_rule: outer radius exceeds 1");
  BallRule rule;
  rule.center = CVec(static_cast<std::size_t>(n));
  rule.radius = b;
  rule.radial = radial_gauss(n, a, b, radial_order);
  rule.angular = std::move(angular);
  return rule;
}

}  // namespace yukawa
