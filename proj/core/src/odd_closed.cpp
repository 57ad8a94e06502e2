#include "confbetti/odd_closed.hpp"

#include <stdexcept>

namespace confbetti {

std::vector<Integer> betti_odd_closed(const GradedRing& ring, int n) {
  if (ring.dimension() % 2 == 0) {
    throw std::invalid_argument("closed formula needs odd dimension; ring " + ring.name() +
                                " goes through the spectral sequence");
  }
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const int D = ring.dimension();
  const std::size_t degrees = static_cast<std::size_t>(n * D) + 1;
  // poly[k][d]: dimension in word length k and cohomological degree d.
  std::vector<std::vector<Integer>> poly(static_cast<std::size_t>(n) + 1, std::vector<Integer>(degrees, 0));
  poly[0][0] = 1;
  for (std::size_t b = 0; b < ring.size(); ++b) {
    const int deg = ring.degree(b);
    const bool exterior = deg % 2 != 0;
    // Multiply by 1/(1 - u t^deg) or (1 + u t^deg), truncated at u^n.
    if (exterior) {
      for (int k = n; k >= 1; --k) {
        for (std::size_t d = static_cast<std::size_t>(deg); d < degrees; ++d) {
          poly[k][d] += poly[k - 1][d - static_cast<std::size_t>(deg)];
        }
      }
    } else {
      for (int k = 1; k <= n; ++k) {
        for (std::size_t d = static_cast<std::size_t>(deg); d < degrees; ++d) {
          poly[k][d] += poly[k - 1][d - static_cast<std::size_t>(deg)];
        }
      }
    }
  }
  return poly[static_cast<std::size_t>(n)];
}

}  // namespace confbetti
