#include "yukawa/types.hpp"

#include <algorithm>
#include <cmath>

namespace yukawa {

Tolerance::Tolerance(double abs_tol, double rel_tol) : abs(abs_tol), rel(rel_tol) {
  if (!std::isfinite(abs) || !std::isfinite(rel) || abs < 0.0 || rel < 0.0) {
    throw DomainError("tolerance components must be finite and nonnegative");
  }
  if (abs == 0.0 && rel == 0.0) {
    throw DomainError("tolerance needs a positive component");
  }
}

double IdentityCheck::rel_diff() const {
  const double s = std::max({scale, std::abs(lhs), std::abs(rhs)});
  return s == 0.0 ? abs_diff : abs_diff / s;
}

double squared_norm(CSpan z) {
  double s = 0.0;
  for (const auto& c : z) s += std::norm(c);
  return s;
}

double norm(CSpan z) { return std::sqrt(squared_norm(z)); }

}  // namespace yukawa
