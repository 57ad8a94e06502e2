// The d2 differential E2^{p,q}(n) -> E2^{p+D,q-1}(n) as an odd derivation.
#pragma once

#include "confbetti/basis.hpp"
#include "confbetti/rational_matrix.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace confbetti {

/// Sparse element of the free algebra; zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  void add(const Monomial& mon, const Rational& coeff);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& mon) const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

/// Precomputed generator images for one ring. Requires an even dimension.
class Differential {
 public:
  explicit Differential(const GradedRing& ring);

  const GradedRing& ring() const { return ring_; }
  const GeneratorLayout& layout() const { return layout_; }

  /// d(Ybar_j) = sum_i (-1)^{|y_i|} [y_j y_i] [y_i^v], where [y_0] = 1 and
  /// [y_k] = Y_k.
  const AlgebraElement& d_generator(std::size_t basis_index) const { return images_.at(basis_index); }

  /// Leibniz expansion over the W factors of `mon`. In reduced mode terms
  /// outside the reduced basis are dropped. Throws std::invalid_argument if
  /// `mon` violates the exterior constraints.
  AlgebraElement d_monomial(const Monomial& mon, bool reduced) const;

  /// Matrix of d from the (p, q) cell to the (p + D, q - 1) cell; columns are
  /// domain monomials, rows codomain monomials.
  RationalMatrix assemble(const CellBasis& domain, const CellBasis& codomain, bool reduced) const;
  RationalMatrix assemble(int p, int q, int n, bool reduced) const;

  /// "monomial -> image" listing of one cell.
  void dump_images(std::ostream& out, const CellBasis& domain, bool reduced) const;

 private:
  AlgebraElement lift(const RingElement& e) const;

  const GradedRing& ring_;
  GeneratorLayout layout_;
  std::vector<AlgebraElement> images_;
};

/// Free-function forms.
AlgebraElement d_generator(const GradedRing& ring, std::size_t basis_index);
AlgebraElement d_monomial(const GradedRing& ring, const Monomial& mon, bool reduced);
RationalMatrix assemble_matrix(const GradedRing& ring, int p, int q, int n, bool reduced);

std::string format_element(const AlgebraElement& e, const GradedRing& ring, const GeneratorLayout& layout);

}  // namespace confbetti
