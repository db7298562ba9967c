#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "yukawa/quadrature.hpp"
#include "yukawa/solutions.hpp"

namespace yukawa::test {

inline SphereRule angular(int n) {
  return n == 1 ? sphere_rule(1, 64, SphereMethod::circle_trapezoid)
                : sphere_rule(2, 16, SphereMethod::hopf_product);
}

inline Solution identity_map() { return make_planar_harmonic({0.0, 1.0}, {}); }
inline Solution constant(double c) { return make_planar_harmonic({c}, {}); }
inline Solution reference_exponential() { return make_exponential(1, {1.0}, {0.5}); }

struct Named {
  std::string name;
  Solution f;
};

/// Representative members of each family in n = 1 and n = 2.
inline std::vector<Named> families() {
  return {
      {"exp_n1", reference_exponential()},
      {"exp_n2", make_exponential(2, {1.0, 1.0}, {0.5, 0.5})},
      {"sep_n1_one", make_separable(1, HarmonicPolynomial::catalogue("one", 1), 4.0)},
      {"sep_n1_z1", make_separable(1, HarmonicPolynomial::catalogue("z1", 1), 4.0)},
      {"sep_n2_z1z2", make_separable(2, HarmonicPolynomial::catalogue("z1z2", 2), 3.0)},
      {"planar_mix", make_planar_harmonic({0.0, 0.0, 1.0}, {0.0, 1.0})},
  };
}

}  // namespace yukawa::test
