#include "hdet/series.hpp"

namespace hdet {

Rational ruscheweyh_weight(int gamma, int k) {
  if (gamma < 0 || k < 1) {
    throw std::invalid_argument("ruscheweyh_weight needs gamma >= 0 and k >= 1");
  }
  // C(gamma+k, k) = prod_{j=1..k} (gamma+j)/j
  Rational w = 1;
  for (int j = 1; j <= k; ++j) w = w * (gamma + j) / j;
  return w;
}

}  // namespace hdet
