// Named spaces available from the command line.
#pragma once

#include "confbetti/ring.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace confbetti {

struct SpaceEntry {
  std::string name;
  std::string description;
  std::function<GradedRing()> make;
};

/// Fixed list, in display order.
const std::vector<SpaceEntry>& builtin_spaces();

/// Constructor grammar accepted by resolve_space besides the fixed names.
std::vector<std::string> space_constructors();

/// A registered name, or factors joined by 'x' where each factor is cp<k>,
/// sigma<g>, s<d>, point, or pbundle_cp2. Throws std::invalid_argument.
GradedRing resolve_space(std::string_view name);

}  // namespace confbetti
