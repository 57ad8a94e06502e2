// Graded-commutative cohomology rings H*(X;Q) of closed oriented manifolds.
#pragma once

#include "confbetti/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace confbetti {

/// Raised for malformed ring documents and violated ring axioms. The message
/// names the violated law and the offending basis indices.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BasisElement {
  std::string label;
  int degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

using SparseTerms = std::vector<std::pair<std::size_t, Rational>>;

/// One stored structure constant row: y_i * y_j = sum_k c_k y_k, with i <= j.
struct ProductEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  SparseTerms terms;
};

class GradedRing;

/// Sparse rational vector over the basis of one particular ring.
class RingElement {
 public:
  RingElement() = default;
  RingElement(std::uint64_t ring_id, std::size_t basis_size) : ring_id_(ring_id), size_(basis_size) {}

  std::uint64_t ring_id() const { return ring_id_; }
  std::size_t basis_size() const { return size_; }
  const std::map<std::size_t, Rational>& terms() const { return terms_; }

  Rational coefficient(std::size_t index) const;
  void add(std::size_t index, const Rational& value);
  bool is_zero() const { return terms_.empty(); }

  RingElement& operator*=(const Rational& scalar);

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::uint64_t ring_id_ = 0;
  std::size_t size_ = 0;
  std::map<std::size_t, Rational> terms_;
};

/// A finite-dimensional graded-commutative Q-algebra with a degree-0 unit at
/// index 0 and a unique top-degree orientation class. Immutable once built;
/// the constructor checks every ring axiom and throws RingError otherwise.
class GradedRing {
 public:
  /// Products with i > j are derived by graded commutativity. Missing unit
  /// products y_0 * y_j are filled in; any others left out are zero.
  GradedRing(std::string name, int dimension, std::vector<BasisElement> basis,
             std::vector<ProductEntry> products);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  const std::string& label(std::size_t i) const { return basis_.at(i).label; }
  std::size_t unit_index() const { return 0; }
  std::size_t orientation_index() const { return orientation_; }

  /// Structure constants of y_i * y_j for any ordered pair.
  const SparseTerms& structure(std::size_t i, std::size_t j) const { return table_.at(i * size() + j); }

  /// Nonzero products with i <= j, excluding the unit row.
  std::vector<ProductEntry> stored_products() const;

  /// Content hash over degrees and structure constants (not name or labels).
  std::uint64_t id() const { return id_; }

  RingElement zero() const { return RingElement(id_, size()); }
  RingElement element(std::size_t i) const;
  RingElement multiply(const RingElement& u, const RingElement& v) const;

  /// Degree shared by every nonzero coefficient, or nullopt if mixed or zero.
  std::optional<int> homogeneous_degree(const RingElement& e) const;

  /// Coefficient of the orientation class in y_a * y_b.
  Rational pairing(std::size_t a, std::size_t b) const;

  friend bool operator==(const GradedRing& a, const GradedRing& b);

 private:
  void validate_and_complete(std::vector<ProductEntry> products);

  std::string name_;
  int dimension_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<SparseTerms> table_;
  std::size_t orientation_ = 0;
  std::uint64_t id_ = 0;
};

/// Same degrees and structure constants, ignoring name and labels.
bool same_structure(const GradedRing& a, const GradedRing& b);

/// y_0^v .. y_m^v with y_i * y_j^v = delta_ij y_m (orientation coefficient).
/// Throws RingError on a singular pairing block.
std::vector<RingElement> dual_basis(const GradedRing& ring);

/// sum_i (-1)^{|y_i|}
int euler_characteristic(const GradedRing& ring);

/// Ring-spec JSON document I/O.
GradedRing parse_ring(std::string_view text);
std::string serialize_ring(const GradedRing& ring);

// Built-in rings.
GradedRing ring_point();
GradedRing ring_cp(int k);
GradedRing ring_surface(int genus);
GradedRing ring_sphere(int dimension);
GradedRing ring_even_sphere(int k);
GradedRing ring_product(const GradedRing& left, const GradedRing& right);
GradedRing ring_projective_bundle_cp2();

}  // namespace confbetti
