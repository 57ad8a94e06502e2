#pragma once

#include "confbetti/ring.hpp"

#include <vector>

namespace confbetti {

/// Betti numbers of Conf^n X for odd-dimensional X, from the graded dimension
/// of the sum over i + j = n of Sym^i H^even (x) Ext^j H^odd. Index = degree.
/// Throws std::invalid_argument when D is even.
std::vector<Integer> betti_odd_closed(const GradedRing& ring, int n);

}  // namespace confbetti
