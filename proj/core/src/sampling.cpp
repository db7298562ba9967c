#include "yukawa/sampling.hpp"

#include <cmath>
#include <numbers>

namespace yukawa {

double SeededRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CVec SeededRng::direction(int n) {
  CVec v(static_cast<std::size_t>(n));
  double len = 0.0;
  while (len == 0.0) {
    for (auto& c : v) {
      const double re = normal();
      const double im = normal();
      c = {re, im};
    }
    len = norm(v);
  }
  for (auto& c : v) c /= len;
  return v;
}

CVec SeededRng::in_ball(int n, double r) {
  CVec v = direction(n);
  const double rho = r * std::pow(uniform(), 1.0 / (2.0 * n));
  for (auto& c : v) c *= rho;
  return v;
}

std::vector<BallPoint> sample_ball_points(int n, std::size_t count, double max_radius,
                                          std::uint64_t seed) {
  if (!(max_radius > 0.0 && max_radius < 1.0)) {
    throw DomainError("sample_ball_points: radius must lie in (0, 1)");
  }
  SeededRng rng(seed);
  std::vector<BallPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(rng.in_ball(n, max_radius));
  return out;
}

}  // namespace yukawa
