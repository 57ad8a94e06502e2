#include "confbetti/ring.hpp"

#include <optional>
#include <string>

namespace confbetti {

GradedRing ring_point() { return GradedRing("point", 0, {{"1", 0}}, {}); }

GradedRing ring_cp(int k) {
  if (k < 1) throw RingError("ring_cp: k must be at least 1");
  std::vector<BasisElement> basis;
  basis.push_back({"1", 0});
  basis.push_back({"x", 2});
  for (int i = 2; i <= k; ++i) basis.push_back({"x" + std::to_string(i), 2 * i});
  std::vector<ProductEntry> products;
  for (int i = 1; i <= k; ++i) {
    for (int j = i; i + j <= k; ++j) {
      products.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                          {{static_cast<std::size_t>(i + j), Rational(1)}}});
    }
  }
  return GradedRing("CP" + std::to_string(k), 2 * k, std::move(basis), std::move(products));
}

GradedRing ring_surface(int genus) {
  if (genus < 0) throw RingError("ring_surface: genus must be nonnegative");
  const auto g = static_cast<std::size_t>(genus);
  std::vector<BasisElement> basis;
  basis.push_back({"1", 0});
  for (std::size_t i = 1; i <= g; ++i) basis.push_back({"a" + std::to_string(i), 1});
  for (std::size_t i = 1; i <= g; ++i) basis.push_back({"b" + std::to_string(i), 1});
  basis.push_back({"t", 2});
  const std::size_t top = 2 * g + 1;
  std::vector<ProductEntry> products;
  for (std::size_t i = 1; i <= g; ++i) products.push_back({i, g + i, {{top, Rational(1)}}});
  return GradedRing("Sigma" + std::to_string(genus), 2, std::move(basis), std::move(products));
}

GradedRing ring_sphere(int dimension) {
  if (dimension < 1) throw RingError("ring_sphere: dimension must be at least 1");
  return GradedRing("S" + std::to_string(dimension), dimension, {{"1", 0}, {"x", dimension}}, {});
}

GradedRing ring_even_sphere(int k) {
  if (k < 1) throw RingError("ring_even_sphere: k must be at least 1");
  return ring_sphere(2 * k);
}

GradedRing ring_product(const GradedRing& left, const GradedRing& right) {
  const std::size_t n1 = left.size();
  const std::size_t n2 = right.size();
  std::vector<BasisElement> basis;
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      basis.push_back({left.label(a) + "|" + right.label(b), left.degree(a) + right.degree(b)});
    }
  }
  // (a|b)(c|d) = (-1)^{|b||c|} (ac)|(bd)
  std::vector<ProductEntry> products;
  for (std::size_t x = 0; x < n1 * n2; ++x) {
    for (std::size_t y = x; y < n1 * n2; ++y) {
      const std::size_t a = x / n2, b = x % n2, c = y / n2, d = y % n2;
      const int sign = (right.degree(b) * left.degree(c)) % 2 == 0 ? 1 : -1;
      ProductEntry entry{x, y, {}};
      for (const auto& [k, u] : left.structure(a, c)) {
        for (const auto& [l, v] : right.structure(b, d)) entry.terms.emplace_back(k * n2 + l, sign * u * v);
      }
      if (!entry.terms.empty()) products.push_back(std::move(entry));
    }
  }
  return GradedRing(left.name() + " x " + right.name(), left.dimension() + right.dimension(), std::move(basis),
                    std::move(products));
}

GradedRing ring_projective_bundle_cp2() {
  // Q[h, xi] / (h^3, xi^2 - h xi); basis h^a xi^b with a <= 2, b <= 1.
  struct Mono {
    int a, b;
  };
  const std::vector<Mono> monos{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}};
  const std::vector<std::string> labels{"1", "h", "xi", "h2", "hxi", "h2xi"};
  auto index_of = [&](int a, int b) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (monos[i].a == a && monos[i].b == b) return i;
    }
    return std::nullopt;
  };
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < monos.size(); ++i) basis.push_back({labels[i], 2 * (monos[i].a + monos[i].b)});
  std::vector<ProductEntry> products;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = i; j < monos.size(); ++j) {
      int a = monos[i].a + monos[j].a;
      int b = monos[i].b + monos[j].b;
      if (b == 2) {  // xi^2 = h xi
        a += 1;
        b = 1;
      }
      if (auto k = index_of(a, b)) products.push_back({i, j, {{*k, Rational(1)}}});
    }
  }
  return GradedRing("P_CP2(O+O(1))", 6, std::move(basis), std::move(products));
}

}  // namespace confbetti
