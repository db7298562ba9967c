#include "yukawa/summation.hpp"

namespace yukawa {

double compensated_sum(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

}  // namespace yukawa
