#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "yukawa/energy.hpp"
#include "yukawa/sampling.hpp"

namespace yukawa {
namespace {

TEST(EnergySpec, Validation) {
  EXPECT_THROW((EnergySpec{-1.0, 0.0, 1.0}).validate(), DomainError);
  EXPECT_THROW((EnergySpec{0.0, -1.0, 1.0}).validate(), DomainError);
  EXPECT_THROW((EnergySpec{0.0, 0.0, -1.0}).validate(), DomainError);
  EXPECT_EQ(energy_radial_order(EnergySpec{-0.75, 0.0, 1.0, 32}), 96);
  EXPECT_EQ(energy_radial_order(EnergySpec{-0.5, 0.0, 1.0, 32}), 32);
}

TEST(DirichletEnergy, ClosedForms) {
  const auto a = test::angular(1);
  EXPECT_EQ(dirichlet_energy(test::constant(3.0), EnergySpec{0.0, 1.0, 1.0}, a), 0.0);
  EXPECT_NEAR(dirichlet_energy(test::identity_map(), EnergySpec{0.0, 0.0, 1.0}, a), 1.0, 1e-13);
  EXPECT_NEAR(dirichlet_energy(test::identity_map(), EnergySpec{1.0, 0.0, 2.0}, a), 1.0 / 3.0, 1e-13);
  EXPECT_NEAR(dirichlet_energy(test::identity_map(), EnergySpec{0.0, 1.0, 1.0}, a), 2.0 / 3.0, 1e-13);
  // 2 int (1-rho)^{-1/2} rho^2 d rho = 32/15
  EXPECT_NEAR(dirichlet_energy(test::identity_map(), EnergySpec{-0.5, 1.0, 1.0}, a), 32.0 / 15.0, 1e-12);
}

TEST(DirichletEnergy, MonotoneInWeight) {
  for (const auto& [name, f] : test::families()) {
    const auto a = test::angular(f.dim());
    double prev = 0.0;
    for (double nu : {2.0, 1.0, 0.0, -0.5}) {
      const double d = dirichlet_energy(f, EnergySpec{nu, 1.0, 1.0}, a);
      EXPECT_GE(d, prev * (1 - 1e-12)) << name;
      prev = d;
    }
  }
}

TEST(Lemma31, Examples) {
  const auto a = test::angular(1);
  const auto id = lemma31_margin(test::identity_map(), 2.0, 1.0, a);
  EXPECT_NEAR(id.lhs, 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(id.rhs, std::sqrt(2.0) / 3.0, 1e-10);
  const auto c = lemma31_margin(test::constant(2.0), 2.0, 1.0, a);
  EXPECT_EQ(c.lhs, 0.0);
  EXPECT_EQ(c.rhs, 0.0);
  EXPECT_GE(lemma31_margin(test::reference_exponential(), 2.0, 0.5, a).margin(), -1e-8);
  EXPECT_THROW(lemma31_margin(test::identity_map(), 2.0, 0.0, a), DomainError);
}

TEST(Lemma31, AllFamilies) {
  for (const auto& [name, f] : test::families()) {
    for (double p : {2.0, 3.0, 4.0}) {
      for (double beta : {0.25, 0.5, 1.0}) {
        EXPECT_GE(lemma31_margin(f, p, beta, test::angular(f.dim())).margin(), -1e-8) << name << p << beta;
      }
    }
  }
}

TEST(ConstantChain, Examples) {
  const auto c = constant_chain(1, 1.0, 1.0, 0.0, 0.0);
  EXPECT_EQ(c.C3, 0.0);
  EXPECT_EQ(c.C4, 0.0);
  EXPECT_EQ(c.C5, 0.0);
  EXPECT_EQ(c.C6, 8.0);
  EXPECT_TRUE(c.zero_power_convention);
  const auto z = constant_chain(1, 0.0, 1.0, 0.0, 2.0 / 3.0);
  EXPECT_NEAR(z.C3, std::sqrt(std::pow(2.0, 2.5) * 2.0 / 3.0), 1e-14);
  EXPECT_NEAR(z.C3, 1.941967, 1e-6);
  EXPECT_NEAR(z.C4, std::sqrt(2.0) * z.C3 / 0.5, 1e-14);
  EXPECT_EQ(z.C6, 8.0);
  EXPECT_NEAR(z.C1, 8.0 * std::sqrt(2.0) / 2.0, 1e-14);
  EXPECT_EQ(z.C2, 0.0);
  EXPECT_EQ(constant_chain(2, 3.0, 0.5, 0.0, 5.0).C5, 0.0);
  EXPECT_THROW(constant_chain(1, 1.0, 0.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(constant_chain(1, 1.0, 1.5, 0.0, 1.0), DomainError);
}

TEST(GradientDecay, Examples) {
  const auto a = test::angular(1);
  const auto cst = gradient_decay_margin(test::constant(1.0), 1.0, 0.0, {BallPoint::origin(1)});
  EXPECT_EQ(cst.C3, 0.0);
  EXPECT_EQ(cst.min_slack, 0.0);
  const auto id = gradient_decay_margin(test::identity_map(), 1.0, 2.0 / 3.0, {BallPoint::origin(1)});
  EXPECT_GT(id.min_slack, 0.0);
  const auto f = test::reference_exponential();
  const double D = dirichlet_energy(f, EnergySpec{-0.5, 1.0, 1.0}, a);
  EXPECT_GE(gradient_decay_margin(f, 0.5, D, sample_ball_points(1, 200, 0.95, 3)).min_slack, -1e-8);
}

TEST(PowerInequality, SeededTriples) {
  SeededRng rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const double a = rng.uniform(0.0, 10.0);
    const double b = rng.uniform(0.0, 10.0);
    const double q = 4.0 * (1.0 - rng.uniform());
    EXPECT_GE(power_inequality_margin(a, b, q), -1e-12 * std::pow(std::max(a + b, 1.0), q));
  }
  EXPECT_NEAR(power_inequality_margin(1.0, 1.0, 2.0), 0.0, 1e-15);
  EXPECT_THROW(power_inequality_margin(-1.0, 1.0, 2.0), DomainError);
}

}  // namespace
}  // namespace yukawa
