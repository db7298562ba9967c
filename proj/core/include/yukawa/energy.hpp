#pragma once

#include <vector>

#include "yukawa/ball.hpp"
#include "yukawa/quadrature.hpp"
#include "yukawa/solutions.hpp"

namespace yukawa {

/// Parameters of D_f(nu, gamma, t) = int (1-|z|)^nu |f|^gamma |grad f|^t dV_N.
struct EnergySpec {
  double nu = 0.0;
  double gamma = 0.0;
  double t = 1.0;
  int radial_order = 32;

  /// Throws DomainError unless gamma >= 0, t >= 0, nu > -1.
  void validate() const;
};

/// Radial order used for a spec: raised to 96 when nu < -1/2.
int energy_radial_order(const EnergySpec& spec);

/// Unit-ball rule clustered at the rim for the spec's weight.
BallRule energy_rule(int n, const EnergySpec& spec, const SphereRule& angular);

/// Throws DomainError if nu <= -1. The rule should come from energy_rule.
double dirichlet_energy(const Solution& f, const EnergySpec& spec, const BallRule& rule);
double dirichlet_energy(const Solution& f, const EnergySpec& spec, const SphereRule& angular);

/// lhs = D_f(beta, p-2, 2), rhs = (beta sqrt2 / 2) D_f(beta-1, p-1, 1).
/// Throws DomainError if beta <= 0 or p < 2.
InequalityCheck lemma31_margin(const Solution& f, double p, double beta, const SphereRule& angular,
                               int radial_order = 32);

struct ConstantChain {
  int n = 1;
  double beta = 1.0;
  double p = 2.0;
  double lambda = 0.0;
  double f0 = 0.0;  // |f(0)|
  double D = 0.0;   // D_f(beta-1, 1, 1)
  double C3 = 0.0;
  double C4 = 0.0;
  double C5 = 0.0;
  double C6 = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  /// True when p = 2 and a zero base met the exponent p - 2 (taken as 1).
  bool zero_power_convention = false;
};

/// Throws DomainError unless beta in (0, 1], D finite and >= 0, lambda >= 0.
ConstantChain constant_chain(int n, double f0, double beta, double lambda, double D);
ConstantChain constant_chain(const Solution& f, double beta, double D);

/// sqrt(beta 2^{beta - 1/2 + 2n} D).
double gradient_decay_constant(int n, double beta, double D);

struct DecaySlack {
  double C3 = 0.0;
  double min_slack = 0.0;
  std::vector<double> bound;     // C3 / (1-|z|)^{n + beta/2}
  std::vector<double> gradient;  // |grad f(z)|
};

/// Slack of |grad f(z)| <= C3 / (1-|z|)^{n+beta/2} over the sample, with
/// D = D_f(beta-1, 1, 1) supplied by the caller.
DecaySlack gradient_decay_margin(const Solution& f, double beta, double D,
                                 const std::vector<BallPoint>& sample);

/// 2^{max(q-1, 0)} (a^q + b^q) - (a + b)^q for a, b >= 0, q > 0.
double power_inequality_margin(double a, double b, double q);

}  // namespace yukawa
