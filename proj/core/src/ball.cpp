#include "yukawa/ball.hpp"

#include <cmath>
#include <string>

namespace yukawa {

BallPoint::BallPoint(CVec coords) : BallPoint(std::move(coords), false) {}

BallPoint::BallPoint(CVec coords, bool boundary)
    : coords_(std::move(coords)), boundary_(boundary) {
  if (coords_.empty()) throw DomainError("ball point needs at least one coordinate");
  for (const auto& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("ball point coordinates must be finite");
    }
  }
  modulus_ = norm(coords_);
  if (boundary_) {
    if (std::abs(modulus_ - 1.0) > 1e-12) {
      throw DomainError("boundary point must have unit modulus, got " + std::to_string(modulus_));
    }
  } else if (!(modulus_ < 1.0)) {
    throw DomainError("interior point must satisfy |z| < 1, got " + std::to_string(modulus_));
  }
}

BallPoint BallPoint::origin(int n) {
  if (n < 1) throw DomainError("dimension must be positive");
  return BallPoint(CVec(static_cast<std::size_t>(n), Complex{}));
}

BallPoint BallPoint::boundary(CVec coords) { return BallPoint(std::move(coords), true); }

void require_interior(const BallPoint& p, const char* what) {
  if (p.is_boundary()) throw DomainError(std::string(what) + ": requires an interior point");
}

}  // namespace yukawa
