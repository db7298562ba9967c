#pragma once

#include <cmath>
#include <numbers>
#include <cstdint>
#include <optional>
#include <string_view>
#include <type_traits>
#include <vector>

#include "yukawa/parallel.hpp"
#include "yukawa/summation.hpp"
#include "yukawa/types.hpp"

namespace yukawa {

// ---------------------------------------------------------------------------
// Sphere rules: normalized surface measure on the unit sphere of C^n.

enum class SphereMethod { circle_trapezoid, hopf_product, monte_carlo };

std::string_view to_string(SphereMethod m);
SphereMethod parse_sphere_method(std::string_view s);

struct SphereRule {
  int n = 0;
  SphereMethod method = SphereMethod::circle_trapezoid;
  std::vector<Complex> coords;  // node-major, n entries per node
  std::vector<double> weights;
  std::vector<int> orders;
  std::optional<std::uint64_t> seed;

  std::size_t size() const { return weights.size(); }
  CSpan node(std::size_t i) const { return {coords.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)}; }
};

/// circle_trapezoid (n = 1): `order` equispaced points.
/// hopf_product (n = 2): zeta = (cos t e^{i a}, sin t e^{i b}); Gauss-Legendre
///   in t on [0, pi/2] with density sin 2t, trapezoid in a and b; `order`
///   points along each axis.
/// monte_carlo (any n): `order` normalized Gaussian directions, equal weights.
/// Throws DomainError for order < 4, unsupported (n, method), or a missing seed.
SphereRule sphere_rule(int n, int order, SphereMethod method,
                       std::optional<std::uint64_t> seed = std::nullopt);

SphereRule hopf_rule(int t_order, int a_order, int b_order);

/// circle_trapezoid for n = 1, hopf_product for n = 2, monte_carlo otherwise.
SphereMethod default_sphere_method(int n);

template <class F>
auto integrate_sphere(const SphereRule& rule, F&& g) {
  using R = std::decay_t<decltype(g(rule.node(0)))>;
  std::vector<R> values(rule.size());
  parallel_for(rule.size(), [&](std::size_t i) { values[i] = g(rule.node(i)); });
  if constexpr (std::is_same_v<R, double>) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < values.size(); ++i) acc.add(rule.weights[i] * values[i]);
    return acc.value();
  } else {
    CompensatedComplexSum acc;
    for (std::size_t i = 0; i < values.size(); ++i) acc.add(rule.weights[i] * values[i]);
    return acc.value();
  }
}

/// Mean over the sphere of radius r about `center` of g(center + r zeta).
template <class F>
auto integrate_sphere_at(const SphereRule& rule, CSpan center, double r, F&& g) {
  return integrate_sphere(rule, [&](CSpan zeta) {
    thread_local CVec z;
    z.resize(zeta.size());
    for (std::size_t k = 0; k < zeta.size(); ++k) z[k] = center[k] + r * zeta[k];
    return g(CSpan(z));
  });
}

// ---------------------------------------------------------------------------
// Radial rules. Weights carry the density 2n rho^{2n-1} of the normalized
// volume measure of the unit ball, so a rule on [a, b] has total mass
// b^{2n} - a^{2n}.

struct RadialRule {
  int n = 0;
  double inner = 0.0;
  double outer = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> rim_gaps;  // 1 - rho at each node, exact for rim rules

  std::size_t size() const { return weights.size(); }
};

/// Single Gauss-Legendre panel on [a, b].
RadialRule radial_gauss(int n, double a, double b, int order);

/// Geometric panels [r 4^{-k-1}, r 4^{-k}] down to r 4^{-12}, then
/// [0, r 4^{-12}]. The outer panel gets `order` nodes, the others
/// max(8, order/2). Used where the integrand carries the log singularity of
/// the planar Green kernel.
RadialRule radial_origin_graded(int n, double r, int order);

/// Smallest m with m * (1 + nu) integral (m <= 64, else 8).
int rim_substitution_power(double nu);

/// Rule on [0, 1] after the substitution 1 - rho = s^m, m from
/// rim_substitution_power(nu), so that (1 - rho)^nu times the Jacobian is a
/// polynomial in s. Requires nu > -1.
RadialRule radial_rim_clustered(int n, int order, double nu);

// ---------------------------------------------------------------------------
// Ball rules.

enum class RadialLayout { single, origin_graded };

struct BallRule {
  CVec center;
  double radius = 0.0;
  RadialRule radial;
  SphereRule angular;

  int dim() const { return angular.n; }
  std::size_t size() const { return radial.size() * angular.size(); }
  /// Lebesgue volume pi^n r^{2n} / n!.
  double lebesgue_volume() const;
};

/// Rule for the ball B(center, r). Throws DomainError if |center| + r > 1
/// or radial_order < 8.
BallRule ball_rule(int n, CVec center, double r, int radial_order, SphereRule angular,
                   RadialLayout layout = RadialLayout::single);

/// Centered rule on the whole unit ball clustered at the rim for (1-|z|)^nu.
BallRule ball_rule_rim(int n, int radial_order, double nu, SphereRule angular);

/// Annulus a <= |z| < b about the origin.
BallRule annulus_rule(int n, double a, double b, int radial_order, SphereRule angular);

struct BallNode {
  CSpan z;
  double rho;      // distance from the rule's center
  CSpan zeta;      // direction
  double rim_gap;  // 1 - rho; meaningful for centered rules
};

/// Sum of w_i g(node_i) with weights of the normalized unit-ball measure
/// restricted to the rule's region (mass r^{2n} for B(0, r)).
template <class F>
auto integrate_ball_vn(const BallRule& rule, F&& g) {
  const std::size_t nr = rule.radial.size();
  const std::size_t ns = rule.angular.size();
  const auto n = static_cast<std::size_t>(rule.dim());
  using R = std::decay_t<decltype(g(std::declval<const BallNode&>()))>;
  std::vector<R> values(nr * ns);
  parallel_for(nr * ns, [&](std::size_t idx) {
    const std::size_t i = idx / ns;
    const std::size_t j = idx % ns;
    thread_local CVec z;
    z.resize(n);
    const double rho = rule.radial.nodes[i];
    const CSpan zeta = rule.angular.node(j);
    for (std::size_t k = 0; k < n; ++k) z[k] = rule.center[k] + rho * zeta[k];
    values[idx] = g(BallNode{CSpan(z), rho, zeta, rule.radial.rim_gaps[i]});
  });
  if constexpr (std::is_same_v<R, double>) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < ns; ++j) {
        acc.add(rule.radial.weights[i] * rule.angular.weights[j] * values[i * ns + j]);
      }
    }
    return acc.value();
  } else {
    CompensatedComplexSum acc;
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < ns; ++j) {
        acc.add((rule.radial.weights[i] * rule.angular.weights[j]) * values[i * ns + j]);
      }
    }
    return acc.value();
  }
}

/// Average of g over the rule's ball (normalized to total mass 1).
template <class F>
auto integrate_ball(const BallRule& rule, F&& g) {
  const double mass = std::pow(rule.radial.outer, 2 * rule.dim()) - std::pow(rule.radial.inner, 2 * rule.dim());
  return integrate_ball_vn(rule, std::forward<F>(g)) / mass;
}

/// Integral of g against Lebesgue volume.
template <class F>
auto integrate_ball_lebesgue(const BallRule& rule, F&& g) {
  const int n = rule.dim();
  return integrate_ball_vn(rule, std::forward<F>(g)) * (std::pow(std::numbers::pi, n) / std::tgamma(n + 1.0));
}

}  // namespace yukawa
