#include "confbetti/registry.hpp"

#include <charconv>
#include <stdexcept>

namespace confbetti {

const std::vector<SpaceEntry>& builtin_spaces() {
  static const std::vector<SpaceEntry> spaces = [] {
    std::vector<SpaceEntry> s;
    for (int k = 1; k <= 6; ++k) {
      s.push_back({"cp" + std::to_string(k), "complex projective space CP^" + std::to_string(k),
                   [k] { return ring_cp(k); }});
    }
    for (int g = 1; g <= 4; ++g) {
      s.push_back({"sigma" + std::to_string(g), "closed orientable surface of genus " + std::to_string(g),
                   [g] { return ring_surface(g); }});
    }
    s.push_back({"cp1xcp1", "CP^1 x CP^1", [] { return ring_product(ring_cp(1), ring_cp(1)); }});
    s.push_back({"cp1xcp1xcp1", "CP^1 x CP^1 x CP^1",
                 [] { return ring_product(ring_product(ring_cp(1), ring_cp(1)), ring_cp(1)); }});
    s.push_back({"cp1xcp2", "CP^1 x CP^2", [] { return ring_product(ring_cp(1), ring_cp(2)); }});
    s.push_back({"pbundle_cp2", "projectivization of O + O(1) over CP^2", [] { return ring_projective_bundle_cp2(); }});
    s.push_back({"sigma1xcp1", "torus x CP^1", [] { return ring_product(ring_surface(1), ring_cp(1)); }});
    return s;
  }();
  return spaces;
}

std::vector<std::string> space_constructors() {
  return {"cp<k>        CP^k for any k >= 1",
          "sigma<g>     surface of genus g >= 0",
          "s<d>         sphere S^d, d >= 1",
          "point        a single point",
          "A x B ...    products, written by joining factors with 'x' (e.g. s2xs2xcp1)"};
}

namespace {

bool parse_suffix(std::string_view token, std::string_view prefix, int& value) {
  if (token.substr(0, prefix.size()) != prefix || token.size() == prefix.size()) return false;
  const auto digits = token.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

GradedRing resolve_factor(std::string_view token) {
  int v = 0;
  if (token == "point") return ring_point();
  if (token == "pbundle_cp2") return ring_projective_bundle_cp2();
  if (parse_suffix(token, "sigma", v)) return ring_surface(v);
  if (parse_suffix(token, "cp", v)) return ring_cp(v);
  if (parse_suffix(token, "s", v)) return ring_sphere(v);
  throw std::invalid_argument("unknown space '" + std::string(token) + "'");
}

}  // namespace

GradedRing resolve_space(std::string_view name) {
  for (const auto& entry : builtin_spaces()) {
    if (entry.name == name) return entry.make();
  }
  if (name.empty()) throw std::invalid_argument("empty space name");
  std::vector<std::string_view> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = name.find('x', start);
    factors.push_back(name.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  try {
    GradedRing ring = resolve_factor(factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k) ring = ring_product(ring, resolve_factor(factors[k]));
    return ring;
  } catch (const RingError& e) {
    throw std::invalid_argument("bad space '" + std::string(name) + "': " + e.what());
  }
}

}  // namespace confbetti
