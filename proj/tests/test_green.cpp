#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "yukawa/green.hpp"

namespace yukawa {
namespace {

GreenRules rules(int n) { return {test::angular(n), 24}; }

TEST(GreenKernel, Examples) {
  EXPECT_EQ(green_kernel(2, 0.7, 0.7), 0.0);
  EXPECT_EQ(green_kernel(1, 0.7, 0.7), 0.0);
  EXPECT_NEAR(green_kernel(2, 0.5, 1.0), 0.375, 1e-15);
  EXPECT_NEAR(green_kernel(1, 0.5, 1.0), 0.5 * std::log(2.0), 1e-15);
  EXPECT_THROW(green_kernel(2, 0.0, 1.0), DomainError);
  EXPECT_THROW(green_kernel(1, 0.8, 0.5), DomainError);
}

TEST(GreenKernel, MassMatchesClosedForm) {
  for (int n : {1, 2}) {
    for (double r : {0.3, 0.7, 1.0}) {
      const auto b = green_ball_rule(n, r, rules(n));
      const double m = integrate_ball_vn(b, [&](const BallNode& nd) { return green_kernel(n, nd.rho, r); });
      EXPECT_NEAR(m, r * r / (4.0 * n), 1e-9) << n << " " << r;
    }
  }
}

TEST(GreenIdentity, TestCatalogue) {
  for (int n : {1, 2}) {
    const auto f = n == 1 ? test::reference_exponential() : make_exponential(2, {1.0, 1.0}, {0.5, 0.5});
    for (double r : {0.3, 0.7}) {
      for (const auto& g : {constant_test_function(2.5), modulus_squared_test_function(), real_part_test_function(),
                            abs_squared_of(f)}) {
        const auto c = green_identity_margin(g, n, r, rules(n));
        EXPECT_LE(c.rel_diff(), 1e-6) << g.name << " n=" << n << " r=" << r;
      }
      const auto sq = green_identity_margin(modulus_squared_test_function(), n, r, rules(n));
      EXPECT_NEAR(sq.lhs, r * r, 1e-9);
      EXPECT_NEAR(sq.rhs, r * r, 1e-9);
    }
  }
}

TEST(MpRepresentation, Examples) {
  auto c = mp_representation_margin(test::constant(1.5), 3.0, 0.6, rules(1));
  EXPECT_NEAR(c.lhs, std::pow(1.5, 3.0), 1e-13);
  EXPECT_NEAR(c.rhs, std::pow(1.5, 3.0), 1e-13);
  c = mp_representation_margin(test::identity_map(), 2.0, 0.7, rules(1));
  EXPECT_NEAR(c.lhs, 0.49, 1e-13);
  EXPECT_NEAR(c.rhs, 0.49, 1e-12);
  c = mp_representation_margin(test::reference_exponential(), 3.0, 0.6, rules(1));
  EXPECT_LE(c.rel_diff(), 1e-5);
  EXPECT_THROW(mp_representation_margin(test::identity_map(), 1.0, 0.5, rules(1)), DomainError);
}

TEST(MpRepresentation, AllFamilies) {
  for (const auto& [name, f] : test::families()) {
    for (double p : {2.0, 3.0, 4.0}) {
      for (double r : {0.3, 0.6, 0.9}) {
        EXPECT_LE(mp_representation_margin(f, p, r, rules(f.dim())).rel_diff(), 1e-5) << name << " p=" << p << " r=" << r;
      }
    }
  }
}

TEST(MpRepresentation, DifferentialForm) {
  for (const auto& [name, f] : test::families()) {
    for (double p : {2.0, 3.0}) {
      for (double r : {0.4, 0.7}) {
        EXPECT_LE(mp_derivative_margin(f, p, r, rules(f.dim())).rel_diff(), 1e-4) << name << " p=" << p << " r=" << r;
      }
    }
  }
}

TEST(KernelMoment, Examples) {
  const auto one = make_exponential(2, {0.0, 0.0}, {0.0, 0.0});
  const auto c = kernel_moment_margin(one, 2.0, 0.6, rules(2));
  EXPECT_NEAR(c.lhs, 0.36 / 8.0, 1e-9);
  EXPECT_NEAR(c.margin(), 0.0, 1e-9);
  const auto z1 = make_separable(2, HarmonicPolynomial::catalogue("z1", 2), 0.0);
  EXPECT_GT(kernel_moment_margin(z1, 2.0, 0.8, rules(2)).margin(), 0.0);
  const auto e = make_exponential(2, {1.0, 1.0}, {0.5, 0.5});
  EXPECT_GE(kernel_moment_margin(e, 2.0, 0.5, rules(2)).margin(), -1e-8);
  EXPECT_THROW(kernel_moment_margin(test::identity_map(), 2.0, 0.5, rules(1)), DomainError);
  EXPECT_NO_THROW(kernel_moment_margin_planar(test::identity_map(), 2.0, 0.5, rules(1)));
}

}  // namespace
}  // namespace yukawa
