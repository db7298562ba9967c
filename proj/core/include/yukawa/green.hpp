#pragma once

#include <functional>
#include <string>

#include "yukawa/quadrature.hpp"
#include "yukawa/solutions.hpp"

namespace yukawa {

/// Radial Green kernel of the ball B(0, r) in C^n, paired with the
/// normalized volume measure of the unit ball:
///   n >= 2: (|z|^{2(1-n)} - r^{2(1-n)}) / (4n(n-1))
///   n == 1: log(r/|z|) / 2
/// Throws DomainError unless 0 < |z| <= r.
double green_kernel(int n, double modulus, double r);
double green_kernel(int n, CSpan z, double r);

/// Closed form of int_{B(0,r)} G_{2n}(z, r) dV_N(z) = r^2 / (4n).
double green_kernel_mass(int n, double r);

struct GreenRules {
  SphereRule angular;
  int radial_order = 24;
};

/// Ball rule used for kernel-weighted integrals: origin-graded panels for
/// n = 1 (log singularity), a single panel otherwise.
BallRule green_ball_rule(int n, double r, const GreenRules& rules);

/// A real C^2 test function with an analytic Laplacian.
struct TestFunction {
  std::string name;
  std::function<double(CSpan)> value;
  std::function<double(CSpan)> laplacian;
};

TestFunction constant_test_function(double c);
TestFunction modulus_squared_test_function();  // |z|^2
TestFunction real_part_test_function();        // Re z_1
TestFunction abs_squared_of(const Solution& f);

/// Sphere mean of g versus g(0) + int Laplacian(g) G_{2n} dV_N. The scale
/// is the sphere mean of |g|.
IdentityCheck green_identity_margin(const TestFunction& g, int n, double r, const GreenRules& rules);

/// Direct M_p^p(r, f) versus |f(0)|^p + int Laplacian(|f|^p) G_{2n} dV_N.
IdentityCheck mp_representation_margin(const Solution& f, double p, double r, const GreenRules& rules);

/// Centered difference of M_p^p in r versus
/// (1 / (2n r^{2n-1})) int_{B(0,r)} Laplacian(|f|^p) dV_N.
IdentityCheck mp_derivative_margin(const Solution& f, double p, double r, const GreenRules& rules,
                                   double h = 1e-4);

/// lhs = int |f|^p G_{2n} dV_N, rhs = r^2/(4n) M_p^p(r, f).
/// Throws DomainError for n = 1 (see kernel_moment_margin_planar).
InequalityCheck kernel_moment_margin(const Solution& f, double p, double r, const GreenRules& rules);

/// The same moment inequality with the planar log kernel. Exploratory only.
InequalityCheck kernel_moment_margin_planar(const Solution& f, double p, double r, const GreenRules& rules);

}  // namespace yukawa
