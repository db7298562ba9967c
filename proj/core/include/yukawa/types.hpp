#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace yukawa {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;
using CSpan = std::span<const Complex>;

/// Thrown when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Absolute/relative tolerance pair. A margin m passes when
/// m >= -(abs + rel * scale).
struct Tolerance {
  double abs = 1e-8;
  double rel = 1e-6;

  Tolerance() = default;
  Tolerance(double abs_tol, double rel_tol);

  double allowance(double scale) const { return abs + rel * scale; }
};

/// Two sides of an identity and their discrepancy.
struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  /// Magnitude the discrepancy is measured against; zero means
  /// max(|lhs|, |rhs|).
  double scale = 0.0;
  /// abs_diff / scale, or abs_diff when the scale vanishes.
  double rel_diff() const;
};

/// Two sides of an inequality lhs <= rhs.
struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin() const { return rhs - lhs; }
};

double squared_norm(CSpan z);
double norm(CSpan z);

}  // namespace yukawa
