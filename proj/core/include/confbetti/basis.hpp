// Bigraded, length-truncated monomial bases of the E2 page.
#pragma once

#include "confbetti/monomial.hpp"

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace confbetti {

/// Ordered list of monomials for one (p, q) cell with an index lookup.
class CellBasis {
 public:
  CellBasis() = default;
  explicit CellBasis(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  bool empty() const { return monomials_.empty(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Position of a monomial, or -1 when absent.
  long index_of(const Monomial& mon) const;

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Monomials of bigrade (p, q) and length <= n satisfying the exterior
/// constraints, restricted to the reduced basis when `reduced` is set.
/// Sorted by MonomialLess. Throws std::invalid_argument if D is odd.
std::vector<Monomial> enumerate_basis(const GradedRing& ring, const GeneratorLayout& layout, int p, int q, int n,
                                      bool reduced);

/// Convenience overload building its own layout.
std::vector<Monomial> enumerate_basis(const GradedRing& ring, int p, int q, int n, bool reduced);

/// First p for which the reduced cell (p, q) at truncation n is provably empty.
int reduced_empty_from(const GradedRing& ring, int q, int n);

/// All cells needed to evaluate Betti numbers up to i_max at truncation n:
/// every (p, q) with p + (D - 1) q <= i_max + D.
class BigradedBasis {
 public:
  BigradedBasis(const GradedRing& ring, int n, int i_max, bool reduced);

  int n() const { return n_; }
  bool reduced() const { return reduced_; }
  const GeneratorLayout& layout() const { return layout_; }

  /// Empty basis for cells outside the enumerated range.
  const CellBasis& cell(int p, int q) const;
  const std::map<Bigrade, CellBasis>& cells() const { return cells_; }

 private:
  GeneratorLayout layout_;
  int n_;
  bool reduced_;
  std::map<Bigrade, CellBasis> cells_;
};

BigradedBasis enumerate_all(const GradedRing& ring, int n, int i_max, bool reduced);

}  // namespace confbetti
