#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "yukawa/ball.hpp"
#include "yukawa/types.hpp"

namespace yukawa {

/// Seeded generator whose output depends only on the seed: mt19937_64 bits
/// mapped to doubles by hand, independent of the standard library's
/// distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, one variate per call).
  double normal();
  /// Uniform direction on the unit sphere of C^n.
  CVec direction(int n);
  /// Uniformly distributed point of the ball of radius r < 1.
  CVec in_ball(int n, double r);

 private:
  std::mt19937_64 engine_;
};

/// `count` seeded interior points, uniform in the ball of radius `max_radius`.
std::vector<BallPoint> sample_ball_points(int n, std::size_t count, double max_radius,
                                          std::uint64_t seed);

}  // namespace yukawa
