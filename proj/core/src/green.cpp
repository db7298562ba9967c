#include "yukawa/green.hpp"

#include <algorithm>
#include <cmath>

#include "yukawa/means.hpp"

namespace yukawa {

double green_kernel(int n, double modulus, double r) {
  if (n < 1) throw DomainError("green_kernel: dimension must be positive");
  if (!(modulus > 0.0)) throw DomainError("green_kernel: singular at z = 0");
  if (modulus > r * (1.0 + 1e-15)) throw DomainError("green_kernel: requires |z| <= r");
  if (modulus >= r) return 0.0;
  if (n == 1) return 0.5 * std::log(r / modulus);
  const double e = 2.0 * (1.0 - n);
  return (std::pow(modulus, e) - std::pow(r, e)) / (4.0 * n * (n - 1.0));
}

double green_kernel(int n, CSpan z, double r) { return green_kernel(n, norm(z), r); }

double green_kernel_mass(int n, double r) { return r * r / (4.0 * n); }

BallRule green_ball_rule(int n, double r, const GreenRules& rules) {
  return ball_rule(n, CVec(static_cast<std::size_t>(n)), r, rules.radial_order, rules.angular,
                   n == 1 ? RadialLayout::origin_graded : RadialLayout::single);
}

TestFunction constant_test_function(double c) {
  return {"constant", [c](CSpan) { return c; }, [](CSpan) { return 0.0; }};
}

TestFunction modulus_squared_test_function() {
  return {"abs_z_sq", [](CSpan z) { return squared_norm(z); },
          [](CSpan z) { return 4.0 * static_cast<double>(z.size()); }};
}

TestFunction real_part_test_function() {
  return {"re_z1", [](CSpan z) { return z[0].real(); }, [](CSpan) { return 0.0; }};
}

TestFunction abs_squared_of(const Solution& f) {
  return {"abs_f_sq", [f](CSpan z) { return std::norm(f.value(z)); },
          [f](CSpan z) { return laplacian_abs_power(f.jet(z), 2.0, f.lambda()); }};
}

namespace {

IdentityCheck make_identity(double lhs, double rhs, double scale = 0.0) {
  return {lhs, rhs, std::abs(lhs - rhs), scale};
}

void check_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("green identities: r must lie in (0, 1)");
}

}  // namespace

IdentityCheck green_identity_margin(const TestFunction& g, int n, double r, const GreenRules& rules) {
  check_radius(r);
  const CVec origin(static_cast<std::size_t>(n));
  const double lhs = integrate_sphere_at(rules.angular, origin, r, [&](CSpan z) { return g.value(z); });
  const double size = integrate_sphere_at(rules.angular, origin, r, [&](CSpan z) { return std::abs(g.value(z)); });
  const auto ball = green_ball_rule(n, r, rules);
  const double vol = integrate_ball_vn(
      ball, [&](const BallNode& node) { return g.laplacian(node.z) * green_kernel(n, node.rho, r); });
  return make_identity(lhs, g.value(origin) + vol, size);
}

IdentityCheck mp_representation_margin(const Solution& f, double p, double r, const GreenRules& rules) {
  if (!(p >= 2.0)) throw DomainError("mp_representation_margin: p must be >= 2");
  check_radius(r);
  const int n = f.dim();
  const double direct = integral_mean_power(f, r, p, MeanSelector::value, rules.angular);
  const double at_origin = std::pow(std::abs(f.value(CVec(static_cast<std::size_t>(n)))), p);
  const auto ball = green_ball_rule(n, r, rules);
  const double vol = integrate_ball_vn(ball, [&](const BallNode& node) {
    return laplacian_abs_power(f.jet(node.z), p, f.lambda()) * green_kernel(n, node.rho, r);
  });
  return make_identity(direct, at_origin + vol);
}

IdentityCheck mp_derivative_margin(const Solution& f, double p, double r, const GreenRules& rules, double h) {
  if (!(p >= 2.0)) throw DomainError("mp_derivative_margin: p must be >= 2");
  check_radius(r);
  if (!(r - h > 0.0 && r + h < 1.0)) throw DomainError("mp_derivative_margin: step leaves (0, 1)");
  const int n = f.dim();
  const double up = integral_mean_power(f, r + h, p, MeanSelector::value, rules.angular);
  const double down = integral_mean_power(f, r - h, p, MeanSelector::value, rules.angular);
  const double lhs = (up - down) / (2.0 * h);
  const auto ball = ball_rule(n, CVec(static_cast<std::size_t>(n)), r, rules.radial_order, rules.angular);
  const double vol =
      integrate_ball_vn(ball, [&](const BallNode& node) { return laplacian_abs_power(f.jet(node.z), p, f.lambda()); });
  return make_identity(lhs, vol / (2.0 * n * std::pow(r, 2 * n - 1)));
}

InequalityCheck kernel_moment_margin(const Solution& f, double p, double r, const GreenRules& rules) {
  if (f.dim() < 2) throw DomainError("kernel_moment_margin: requires n >= 2");
  return kernel_moment_margin_planar(f, p, r, rules);
}

InequalityCheck kernel_moment_margin_planar(const Solution& f, double p, double r, const GreenRules& rules) {
  if (!(p >= 2.0)) throw DomainError("kernel_moment_margin: p must be >= 2");
  check_radius(r);
  const int n = f.dim();
  const auto ball = green_ball_rule(n, r, rules);
  const double lhs = integrate_ball_vn(
      ball, [&](const BallNode& node) { return std::pow(std::abs(f.value(node.z)), p) * green_kernel(n, node.rho, r); });
  const double rhs = green_kernel_mass(n, r) * integral_mean_power(f, r, p, MeanSelector::value, rules.angular);
  return {lhs, rhs};
}

}  // namespace yukawa
