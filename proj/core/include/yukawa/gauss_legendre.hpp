#pragma once

#include <vector>

namespace yukawa {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights on [a, b], ascending nodes.
GaussRule gauss_legendre(int order, double a = -1.0, double b = 1.0);

}  // namespace yukawa
