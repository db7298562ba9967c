#include "yukawa/jet.hpp"

#include <cmath>

namespace yukawa {

double Jet::gradient_norm_sq() const { return squared_norm(dz) + squared_norm(dzbar); }

double Jet::gradient_norm() const { return std::sqrt(gradient_norm_sq()); }

RealGradients real_gradients(const Jet& jet) {
  const Complex i{0.0, 1.0};
  double u2 = 0.0;
  double v2 = 0.0;
  for (std::size_t k = 0; k < jet.dz.size(); ++k) {
    const Complex fx = jet.dz[k] + jet.dzbar[k];
    const Complex fy = i * (jet.dz[k] - jet.dzbar[k]);
    u2 += fx.real() * fx.real() + fy.real() * fy.real();
    v2 += fx.imag() * fx.imag() + fy.imag() * fy.imag();
  }
  return {std::sqrt(u2), std::sqrt(v2)};
}

double wirtinger_gradient_margin(const Jet& jet) {
  const auto g = real_gradients(jet);
  return (g.grad_u + g.grad_v) - (norm(jet.dz) + norm(jet.dzbar));
}

double laplacian_abs_power(const Jet& jet, double p, double lambda) {
  if (!(p >= 2.0)) throw DomainError("laplacian_abs_power: p must be >= 2");
  const double mod = std::abs(jet.value);
  const double grad_sq = jet.gradient_norm_sq();

  double mixed = 0.0;
  if (p != 2.0 && mod != 0.0) {
    if (mod >= kZeroValueGuard) {
      double s = 0.0;
      for (std::size_t k = 0; k < jet.dz.size(); ++k) {
        s += std::norm(jet.value * std::conj(jet.dz[k]) + std::conj(jet.value) * jet.dzbar[k]);
      }
      mixed = p * (p - 2.0) * std::pow(mod, p - 4.0) * s;
    } else {
      const Complex phase = jet.value / mod;
      double s = 0.0;
      for (std::size_t k = 0; k < jet.dz.size(); ++k) {
        s += std::norm(std::conj(jet.dz[k]) * phase + jet.dzbar[k] * std::conj(phase));
      }
      mixed = p * (p - 2.0) * std::pow(mod, p - 2.0) * s;
    }
  }
  // pow(0, 0) == 1 keeps the p = 2 gradient term intact at zeros of f.
  const double gradient_term = 2.0 * p * std::pow(mod, p - 2.0) * grad_sq;
  const double potential_term = p * lambda * std::pow(mod, p);
  return mixed + gradient_term + potential_term;
}

Jet finite_difference_jet(const PointEvaluator& f, const BallPoint& z, double h) {
  require_interior(z, "finite_difference_jet");
  if (!(h > 0.0)) throw DomainError("finite_difference_jet: step must be positive");
  if (!(z.boundary_distance() > 2.0 * h)) {
    throw DomainError("finite_difference_jet: stencil leaves the ball");
  }
  const int n = z.dim();
  const Complex i{0.0, 1.0};
  CVec work(z.coords().begin(), z.coords().end());

  Jet jet;
  jet.value = f(work);
  jet.dz.resize(static_cast<std::size_t>(n));
  jet.dzbar.resize(static_cast<std::size_t>(n));
  Complex lap{};
  for (int k = 0; k < n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const Complex base = work[kk];
    work[kk] = base + h;
    const Complex fxp = f(work);
    work[kk] = base - h;
    const Complex fxm = f(work);
    work[kk] = base + i * h;
    const Complex fyp = f(work);
    work[kk] = base - i * h;
    const Complex fym = f(work);
    work[kk] = base;

    const Complex fx = (fxp - fxm) / (2.0 * h);
    const Complex fy = (fyp - fym) / (2.0 * h);
    jet.dz[kk] = 0.5 * (fx - i * fy);
    jet.dzbar[kk] = 0.5 * (fx + i * fy);
    lap += (fxp + fxm + fyp + fym - 4.0 * jet.value) / (h * h);
  }
  jet.laplacian = lap;
  return jet;
}

}  // namespace yukawa
