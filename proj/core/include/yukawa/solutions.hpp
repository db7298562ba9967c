#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "yukawa/ball.hpp"
#include "yukawa/jet.hpp"
#include "yukawa/types.hpp"

namespace yukawa {

/// One term coef * prod_i x_i^{powers[i]} in the real coordinates
/// (x_1, y_1, ..., x_n, y_n) of C^n.
struct Monomial {
  Complex coef;
  std::vector<int> powers;
};

/// Homogeneous polynomial of degree m on R^{2n} that is harmonic.
class HarmonicPolynomial {
 public:
  /// Throws DomainError if a term has the wrong length or degree, or if the
  /// sampled Laplacian exceeds 1e-10.
  HarmonicPolynomial(int n, int degree, std::vector<Monomial> terms);

  /// Built-in entries: "one", "re_z1", "im_z1", "z1", "re_z1_sq", "re_z1z2",
  /// "z1z2", "abs_z1_sq_minus_abs_z2_sq". Suffix k selects a coordinate where
  /// meaningful ("re_zk" with k in 1..n).
  static HarmonicPolynomial catalogue(std::string_view name, int n);

  struct Eval {
    Complex value;
    CVec grad;  // d/dx_i in the order (x_1, y_1, ...)
    Complex laplacian;
  };

  int dim() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  Eval eval(std::span<const double> x) const;
  Complex value(std::span<const double> x) const;
  bool is_real() const;

 private:
  int n_;
  int degree_;
  std::vector<Monomial> terms_;
};

/// Power series u(s) = sum_j c_j s^j in s = |z|^2 solving the separated
/// radial equation 4(j+1)(j+n+m) c_{j+1} = lambda c_j with c_0 = 1.
class RadialProfile {
 public:
  RadialProfile(int n, int m, double lambda, int truncation);

  int dim() const { return n_; }
  int degree() const { return m_; }
  double lambda() const { return lambda_; }
  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  struct Eval {
    double u, du, d2u;  // derivatives in s
  };
  Eval eval(double s) const;
  double value(double s) const;

  /// 2 lambda^{J+1} / (4^{J+1} ((J+1)!)^2).
  static double tail_bound(double lambda, int truncation);

 private:
  int n_;
  int m_;
  double lambda_;
  std::vector<double> coeffs_;
};

enum class Family { exponential, separable, planar_harmonic };

std::string_view to_string(Family f);

struct ExponentialParams {
  CVec a;
  CVec b;
};

struct SeparableParams {
  HarmonicPolynomial harmonic;
  RadialProfile profile;
};

struct PlanarHarmonicParams {
  CVec h;  // Taylor coefficients of the analytic part
  CVec g;  // Taylor coefficients of the co-analytic part (f = h + conj(g))
};

/// An exact solution of  Laplacian f = lambda f  on the unit ball of C^n,
/// with closed-form jets. Immutable.
class Solution {
 public:
  using Params = std::variant<ExponentialParams, SeparableParams, PlanarHarmonicParams>;

  Family family() const { return family_; }
  int dim() const { return n_; }
  double lambda() const { return lambda_; }
  const Params& params() const { return params_; }

  Complex value(CSpan z) const;
  Jet jet(CSpan z) const;
  Complex value(const BallPoint& z) const { return value(z.coords()); }
  Jet jet(const BallPoint& z) const { return jet(z.coords()); }

  PointEvaluator evaluator() const;
  std::string describe() const;

 private:
  Solution(Family family, int n, double lambda, Params params);

  friend Solution make_exponential(int, CVec, CVec);
  friend Solution make_separable(int, HarmonicPolynomial, double, int);
  friend Solution make_planar_harmonic(CVec, CVec);

  Family family_;
  int n_;
  double lambda_;
  Params params_;
};

inline constexpr int kDefaultTruncation = 40;

/// f(z) = exp(sum_k a_k z_k + b_k conj(z_k)),  lambda = 4 sum_k a_k b_k.
/// Throws DomainError if sum a_k b_k is not real and nonnegative.
Solution make_exponential(int n, CVec a, CVec b);

/// f(z) = u(|z|^2) H(z). Requires truncation >= 20 and a tail bound <= 1e-14.
Solution make_separable(int n, HarmonicPolynomial h, double lambda,
                        int truncation = kDefaultTruncation);

/// f = h + conj(g) on the disk; lambda = 0.
Solution make_planar_harmonic(CVec h_coeffs, CVec g_coeffs);

/// Same family with a different lambda. Exponentials rescale b; planar
/// harmonic maps only accept lambda = 0.
Solution with_lambda(const Solution& s, double lambda);

/// max over the sample of |Laplacian f - lambda f| / (1 + |f|).
double yukawa_residual(const Solution& s, std::span<const BallPoint> sample);

/// Poisson kernel of the ball of radius r:
///   r^{2n-2} (r^2 - |z|^2) / |z - r zeta|^{2n}.
double poisson_kernel(int n, double r, CSpan z, CSpan zeta);

}  // namespace yukawa
