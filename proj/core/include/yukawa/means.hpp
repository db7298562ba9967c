#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "yukawa/ball.hpp"
#include "yukawa/quadrature.hpp"
#include "yukawa/solutions.hpp"

namespace yukawa {

// ---------------------------------------------------------------------------
// Majorants

enum class MajorantKind { power, scaled_power, log_damped };

std::string_view to_string(MajorantKind k);

/// Catalogue majorant on [0, inf):
///   power        t^alpha, 0 < alpha <= 1
///   scaled_power c t^alpha, c > 0
///   log_damped   t / (1 + log(1 + t))
class Majorant {
 public:
  static Majorant power(double alpha);
  static Majorant scaled_power(double scale, double alpha);
  static Majorant log_damped();

  double operator()(double t) const;

  MajorantKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double scale() const { return scale_; }
  std::string describe() const;

 private:
  Majorant(MajorantKind kind, double scale, double alpha);

  MajorantKind kind_;
  double scale_;
  double alpha_;
};

struct MajorantAxioms {
  bool zero_at_origin = false;
  bool nondecreasing = false;
  bool ratio_nonincreasing = false;
  bool ok() const { return zero_at_origin && nondecreasing && ratio_nonincreasing; }
};

/// Checks omega(0) = 0, monotonicity of omega and omega(t)/t on a geometric
/// grid over [1e-8, 1e8].
MajorantAxioms check_majorant_axioms(const Majorant& omega);

/// T(r) = int_0^1 omega(1 / (1 - rho r)) d rho, evaluated after the change
/// of variables 1 - rho r = e^s.
double majorant_transform_T(const Majorant& omega, double r, int quad_order = 32);

struct RegularityConstants {
  double c_low = 0.0;          // best constant in  int_0^d omega(t)/t dt <= C omega(d)
  double c_high = 0.0;         // best constant in  d int_d^inf omega(t)/t^2 dt <= C omega(d)
  bool high_diverges = false;  // upper integral grows without bound
  double growth_ratio = 0.0;   // worst ratio of successive cutoff increments
  std::vector<double> delta_grid;
  std::vector<double> low_ratios;
  std::vector<double> high_ratios;
};

/// Cutoffs used for the upper integral's divergence test.
inline constexpr double kRegularityCutoffs[3] = {1e4, 1e5, 1e6};
/// Successive-increment ratio at or above which the upper integral is
/// declared divergent.
inline constexpr double kDivergenceRatio = 0.8;

std::vector<double> default_delta_grid();
RegularityConstants regularity_constants(const Majorant& omega,
                                         const std::vector<double>& delta_grid = default_delta_grid());

// ---------------------------------------------------------------------------
// Integral means

enum class MeanSelector { value, gradient };

std::string_view to_string(MeanSelector s);

/// M_p(r, f)^p, or M_p(r, grad f)^p for the gradient selector.
double integral_mean_power(const Solution& f, double r, double p, MeanSelector selector,
                           const SphereRule& rule);

/// M_p(r, f) or M_p(r, grad f). Throws DomainError unless 0 < r < 1, p > 0.
double integral_mean(const Solution& f, double r, double p, MeanSelector selector,
                     const SphereRule& rule);

struct MeanCurve {
  double p = 2.0;
  MeanSelector selector = MeanSelector::value;
  std::vector<double> r_grid;
  std::vector<double> values;  // M_p(r, .)

  bool nondecreasing(double tol) const;
};

MeanCurve mean_curve(const Solution& f, double p, MeanSelector selector,
                     const std::vector<double>& r_grid, const SphereRule& rule);

// ---------------------------------------------------------------------------
// Oscillation

/// Normalized mean of |f(w) - f(z)| over B(z, r). The rule must be the ball
/// rule for B(z, r). Throws DomainError if r > d(z).
double mean_oscillation(const Solution& f, const BallPoint& z, double r, const BallRule& rule);

double mean_oscillation(const Solution& f, const BallPoint& z, double r, const SphereRule& angular,
                        int radial_order);

/// Normalized mean of |f - f_B| over B(z, r), f_B the ball average.
double ball_mean_deviation(const Solution& f, const BallPoint& z, double r, const SphereRule& angular,
                           int radial_order);

struct BallSample {
  BallPoint center;
  double radius;
};

/// Seeded (z, r) pairs with |z| <= max_center and r = u d(z), u in [u_min, 1].
std::vector<BallSample> sample_balls(int n, std::size_t count, double max_center, double u_min,
                                     std::uint64_t seed);

struct BmoEstimate {
  double value = 0.0;              // max over samples; a lower estimate of the BMO norm
  std::vector<double> per_sample;  // deviation for each sample
};

BmoEstimate bmo_estimate(const Solution& f, const std::vector<BallSample>& samples,
                         const SphereRule& angular, int radial_order);

}  // namespace yukawa
