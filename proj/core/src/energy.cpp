#include "yukawa/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace yukawa {

void EnergySpec::validate() const {
  if (!(gamma >= 0.0) || !(t >= 0.0)) throw DomainError("energy: gamma and t must be nonnegative");
  if (!(nu > -1.0)) throw DomainError("energy: nu must exceed -1");
  if (radial_order < 8) throw DomainError("energy: radial order must be at least 8");
}

int energy_radial_order(const EnergySpec& spec) {
  return spec.nu < -0.5 ? std::max(spec.radial_order, 96) : spec.radial_order;
}

BallRule energy_rule(int n, const EnergySpec& spec, const SphereRule& angular) {
  spec.validate();
  return ball_rule_rim(n, energy_radial_order(spec), spec.nu, angular);
}

double dirichlet_energy(const Solution& f, const EnergySpec& spec, const BallRule& rule) {
  spec.validate();
  return integrate_ball_vn(rule, [&](const BallNode& node) {
    const Jet jet = f.jet(node.z);
    return std::pow(node.rim_gap, spec.nu) * std::pow(std::abs(jet.value), spec.gamma) *
           std::pow(jet.gradient_norm(), spec.t);
  });
}

double dirichlet_energy(const Solution& f, const EnergySpec& spec, const SphereRule& angular) {
  return dirichlet_energy(f, spec, energy_rule(f.dim(), spec, angular));
}

InequalityCheck lemma31_margin(const Solution& f, double p, double beta, const SphereRule& angular,
                               int radial_order) {
  if (!(beta > 0.0)) throw DomainError("lemma31_margin: beta must be positive");
  if (!(p >= 2.0)) throw DomainError("lemma31_margin: p must be >= 2");
  const EnergySpec left{beta, p - 2.0, 2.0, radial_order};
  const EnergySpec right{beta - 1.0, p - 1.0, 1.0, radial_order};
  const double lhs = dirichlet_energy(f, left, angular);
  const double rhs = beta * std::sqrt(2.0) / 2.0 * dirichlet_energy(f, right, angular);
  return {lhs, rhs};
}

double gradient_decay_constant(int n, double beta, double D) {
  return std::sqrt(beta * std::pow(2.0, beta - 0.5 + 2.0 * n) * D);
}

ConstantChain constant_chain(int n, double f0, double beta, double lambda, double D) {
  if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("constant_chain: beta must lie in (0, 1]");
  if (!(D >= 0.0) || !std::isfinite(D)) throw DomainError("constant_chain: D must be finite and >= 0");
  if (!(lambda >= 0.0)) throw DomainError("constant_chain: lambda must be >= 0");
  if (n < 1) throw DomainError("constant_chain: dimension must be positive");
  ConstantChain c;
  c.n = n;
  c.beta = beta;
  c.p = 2.0 / beta;
  c.lambda = lambda;
  c.f0 = f0;
  c.D = D;
  const double p = c.p;
  c.C3 = gradient_decay_constant(n, beta, D);
  c.C4 = std::sqrt(2.0) * c.C3 / (n - 1.0 + beta / 2.0);
  c.C5 = p * lambda * std::pow(2.0, p - 1.0) * (std::pow(c.C4, p) + std::pow(f0, p));
  c.C6 = 2.0 * p * (p - 1.0) * std::pow(2.0, p - 2.0) * (std::pow(f0, p - 2.0) + std::pow(c.C4, p - 2.0));
  c.C1 = c.C6 * beta * std::sqrt(2.0) / 2.0;
  c.C2 = c.C5;
  c.zero_power_convention = p == 2.0 && (f0 == 0.0 || c.C4 == 0.0);
  return c;
}

ConstantChain constant_chain(const Solution& f, double beta, double D) {
  const double f0 = std::abs(f.value(CVec(static_cast<std::size_t>(f.dim()))));
  return constant_chain(f.dim(), f0, beta, f.lambda(), D);
}

DecaySlack gradient_decay_margin(const Solution& f, double beta, double D,
                                 const std::vector<BallPoint>& sample) {
  DecaySlack out;
  out.C3 = gradient_decay_constant(f.dim(), beta, D);
  out.min_slack = sample.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  const double e = f.dim() + beta / 2.0;
  for (const auto& z : sample) {
    const double bound = out.C3 / std::pow(z.boundary_distance(), e);
    const double grad = f.jet(z).gradient_norm();
    out.bound.push_back(bound);
    out.gradient.push_back(grad);
    out.min_slack = std::min(out.min_slack, bound - grad);
  }
  return out;
}

double power_inequality_margin(double a, double b, double q) {
  if (!(a >= 0.0 && b >= 0.0)) throw DomainError("power_inequality_margin: a, b must be >= 0");
  if (!(q > 0.0)) throw DomainError("power_inequality_margin: q must be positive");
  return std::pow(2.0, std::max(q - 1.0, 0.0)) * (std::pow(a, q) + std::pow(b, q)) - std::pow(a + b, q);
}

}  // namespace yukawa
