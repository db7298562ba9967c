#pragma once

#include "yukawa/types.hpp"

namespace yukawa {

/// A point of the closed unit ball of C^n.
///
/// Interior points are the default construction and must satisfy |z| < 1.
/// Points on the unit sphere exist only through BallPoint::boundary().
class BallPoint {
 public:
  explicit BallPoint(CVec coords);

  static BallPoint origin(int n);
  /// Boundary point; |coords| must equal 1 within 1e-12.
  static BallPoint boundary(CVec coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  CSpan coords() const { return coords_; }
  const Complex& operator[](std::size_t k) const { return coords_[k]; }
  double modulus() const { return modulus_; }
  /// Euclidean distance to the unit sphere, 1 - |z|.
  double boundary_distance() const { return 1.0 - modulus_; }
  bool is_boundary() const { return boundary_; }

 private:
  BallPoint(CVec coords, bool boundary);

  CVec coords_;
  double modulus_ = 0.0;
  bool boundary_ = false;
};

/// Throws DomainError unless p is an interior point.
void require_interior(const BallPoint& p, const char* what);

}  // namespace yukawa
