// Monomials of the free graded-commutative algebra on V (reduced cohomology,
// length 1) and W (full cohomology, length 2).
#pragma once

#include "confbetti/ring.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace confbetti {

/// Generator k of the canonical order: the V generators Y_1..Y_m (one per
/// non-unit basis element) followed by the W generators Ybar_0..Ybar_m.
struct Generator {
  std::size_t basis_index = 0;
  bool is_w = false;
  int weight = 0;        // |y_i|, contribution to the p grade
  int total_degree = 0;  // |y_i| for V, |y_i| + 1 for W
  int length = 1;        // 1 for V, 2 for W

  bool odd() const { return total_degree % 2 != 0; }
};

class GeneratorLayout {
 public:
  explicit GeneratorLayout(const GradedRing& ring);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t k) const { return gens_[k]; }
  const std::vector<Generator>& generators() const { return gens_; }

  /// Generator index of Y_i (i >= 1) and Ybar_i (i >= 0).
  std::size_t v_index(std::size_t basis_index) const;
  std::size_t w_index(std::size_t basis_index) const { return v_count_ + basis_index; }
  std::size_t v_count() const { return v_count_; }
  std::size_t orientation_basis_index() const { return orientation_; }

 private:
  std::vector<Generator> gens_;
  std::size_t v_count_ = 0;
  std::size_t orientation_ = 0;
};

using Exponent = std::uint16_t;

/// Exponent vector over a GeneratorLayout. Odd generators carry exponent 0 or 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t generator_count) : exps_(generator_count, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  Exponent& operator[](std::size_t k) { return exps_[k]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool is_one() const;
  unsigned total_exponent() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Graded-lexicographic order: total exponent first, then lexicographic on
/// the concatenated (r, s) vector with earlier generators weighing more.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Bigrade {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bigrade&, const Bigrade&) = default;
  friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

/// True when every odd generator has exponent at most one.
bool satisfies_exterior(const Monomial& mon, const GeneratorLayout& layout);

/// (p, q) of a monomial. Throws std::invalid_argument on an exterior violation.
Bigrade monomial_bigrade(const Monomial& mon, const GeneratorLayout& layout);

/// sum r + 2 sum s
unsigned monomial_length(const Monomial& mon, const GeneratorLayout& layout);

/// Parity of the total degree.
bool monomial_odd(const Monomial& mon, const GeneratorLayout& layout);

/// Member of the reduced basis: orientation V exponent <= 1 and no
/// orientation W factor.
bool is_reduced(const Monomial& mon, const GeneratorLayout& layout);

/// Product of canonical monomials with its Koszul sign; sign 0 means the
/// product vanishes (repeated odd generator).
std::pair<Monomial, int> multiply_monomials(const Monomial& a, const Monomial& b, const GeneratorLayout& layout);

/// Human-readable form, e.g. "Y[x]^2*W[1]"; the empty monomial prints as "1".
std::string format_monomial(const Monomial& mon, const GradedRing& ring, const GeneratorLayout& layout);

}  // namespace confbetti
