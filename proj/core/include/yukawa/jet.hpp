#pragma once

#include <functional>
#include <utility>

#include "yukawa/ball.hpp"
#include "yukawa/types.hpp"

namespace yukawa {

/// Value, first Wirtinger derivatives and Laplacian of f at one point.
struct Jet {
  Complex value;
  CVec dz;     // f_{z_k}
  CVec dzbar;  // f_{\bar z_k}
  Complex laplacian;

  int dim() const { return static_cast<int>(dz.size()); }
  /// Hilbert-Schmidt norm of (f_z, f_zbar).
  double gradient_norm() const;
  double gradient_norm_sq() const;
};

/// Euclidean norms of the real gradients of u = Re f and v = Im f in R^{2n}.
struct RealGradients {
  double grad_u = 0.0;
  double grad_v = 0.0;
};

RealGradients real_gradients(const Jet& jet);

/// Margin of |f_z| + |f_zbar| <= |grad u| + |grad v|.
double wirtinger_gradient_margin(const Jet& jet);

/// Below this modulus the |f|^{p-4} term switches to the normalized form.
inline constexpr double kZeroValueGuard = 1e-12;

/// Closed-form Laplacian of |f|^p for a solution of  Laplacian f = lambda f.
///
///   p(p-2)|f|^{p-4} sum_k |f conj(f_{z_k}) + conj(f) f_{zbar_k}|^2
///     + 2p |f|^{p-2} |grad f|^2 + p lambda |f|^p
///
/// Throws DomainError when p < 2.
double laplacian_abs_power(const Jet& jet, double p, double lambda);

using PointEvaluator = std::function<Complex(CSpan)>;

inline constexpr double kFiniteDifferenceStep = 1e-4;

/// Central-difference jet of f at z: four points per complex coordinate.
/// Throws DomainError unless d(z) > 2h.
Jet finite_difference_jet(const PointEvaluator& f, const BallPoint& z,
                          double h = kFiniteDifferenceStep);

}  // namespace yukawa
