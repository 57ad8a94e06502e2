#include "confbetti/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace confbetti {

CellBasis::CellBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

long CellBasis::index_of(const Monomial& mon) const {
  auto it = index_.find(mon);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

namespace {

struct Enumerator {
  const GeneratorLayout& layout;
  int p, q, n;
  bool reduced;
  std::size_t top_v = static_cast<std::size_t>(-1);
  std::size_t top_w = static_cast<std::size_t>(-1);
  // Suffix maxima used for pruning: the largest weight any remaining V
  // generator can contribute per unit of length.
  std::vector<int> max_v_weight_from;
  std::vector<int> max_w_weight_from;
  std::vector<Monomial> out;
  Monomial current;

  Enumerator(const GeneratorLayout& l, int p_, int q_, int n_, bool red)
      : layout(l), p(p_), q(q_), n(n_), reduced(red), current(l.size()) {
    const std::size_t top = layout.orientation_basis_index();
    if (reduced && top != 0) {
      top_v = layout.v_index(top);
      top_w = layout.w_index(top);
    }
    max_v_weight_from.assign(layout.size() + 1, 0);
    max_w_weight_from.assign(layout.size() + 1, 0);
    for (std::size_t k = layout.size(); k-- > 0;) {
      max_v_weight_from[k] = max_v_weight_from[k + 1];
      max_w_weight_from[k] = max_w_weight_from[k + 1];
      auto& slot = layout[k].is_w ? max_w_weight_from[k] : max_v_weight_from[k];
      slot = std::max(slot, layout[k].weight);
    }
  }

  int remaining_w_max(std::size_t k) const { return max_w_weight_from[k]; }

  void run(std::size_t k, int weight, int qcount, int length) {
    if (k == layout.size()) {
      if (weight == p && qcount == q) out.push_back(current);
      return;
    }
    // Bound: remaining weight must be reachable with the remaining length.
    const int need_w = p - weight;
    const int need_q = q - qcount;
    const int spare_length = n - length - 2 * need_q;
    if (spare_length < 0) return;
    if (k >= layout.v_count()) {
      // Only W generators remain; each W contributes at most its own weight.
      if (need_w > need_q * remaining_w_max(k)) return;
    } else {
      const int v_reach = spare_length * max_v_weight_from[k];
      if (need_w > v_reach + need_q * remaining_w_max(k)) return;
    }

    const Generator& g = layout[k];
    int max_e = g.odd() ? 1 : n;
    if (k == top_v) max_e = std::min(max_e, 1);
    if (k == top_w) max_e = 0;
    for (int e = 0; e <= max_e; ++e) {
      const int w = weight + e * g.weight;
      const int qc = qcount + (g.is_w ? e : 0);
      const int len = length + e * g.length;
      if (w > p || qc > q || len > n) break;
      current[k] = static_cast<Exponent>(e);
      run(k + 1, w, qc, len);
    }
    current[k] = 0;
  }
};

}  // namespace

std::vector<Monomial> enumerate_basis(const GradedRing& ring, const GeneratorLayout& layout, int p, int q, int n,
                                      bool reduced) {
  if (ring.dimension() % 2 != 0) {
    throw std::invalid_argument("E2 basis enumeration requires an even-dimensional manifold");
  }
  if (p < 0 || q < 0 || n < 0 || 2 * q > n) return {};
  if (reduced && ring.dimension() >= 2 && p >= reduced_empty_from(ring, q, n)) return {};
  Enumerator e(layout, p, q, n, reduced);
  e.run(0, 0, 0, 0);
  std::sort(e.out.begin(), e.out.end(), MonomialLess{});
  return std::move(e.out);
}

std::vector<Monomial> enumerate_basis(const GradedRing& ring, int p, int q, int n, bool reduced) {
  GeneratorLayout layout(ring);
  return enumerate_basis(ring, layout, p, q, n, reduced);
}

int reduced_empty_from(const GradedRing& ring, int q, int n) {
  const int d = ring.dimension();
  return (n - q) * (d - 1) + 2;
}

BigradedBasis::BigradedBasis(const GradedRing& ring, int n, int i_max, bool reduced)
    : layout_(ring), n_(n), reduced_(reduced) {
  if (ring.dimension() % 2 != 0) {
    throw std::invalid_argument("E2 basis enumeration requires an even-dimensional manifold");
  }
  const int d = ring.dimension();
  const int limit = i_max + d;
  for (int q = 0; 2 * q <= n && (d - 1) * q <= limit; ++q) {
    for (int p = 0; p + (d - 1) * q <= limit; ++p) {
      auto mons = enumerate_basis(ring, layout_, p, q, n, reduced);
      if (!mons.empty()) cells_.emplace(Bigrade{p, q}, CellBasis(std::move(mons)));
    }
  }
}

const CellBasis& BigradedBasis::cell(int p, int q) const {
  static const CellBasis empty;
  auto it = cells_.find(Bigrade{p, q});
  return it == cells_.end() ? empty : it->second;
}

BigradedBasis enumerate_all(const GradedRing& ring, int n, int i_max, bool reduced) {
  return BigradedBasis(ring, n, i_max, reduced);
}

}  // namespace confbetti
