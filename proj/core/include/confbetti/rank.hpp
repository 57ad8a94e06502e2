// Exact and modular rank of sparse rational matrices.
#pragma once

#include "confbetti/rational_matrix.hpp"

#include <cstdint>
#include <stdexcept>

namespace confbetti {

inline constexpr std::uint64_t kPrimaryPrime = 1000003;
inline constexpr std::uint64_t kSecondaryPrime = 999983;

/// The prime divides a denominator, so the matrix has no image mod p.
class BadPrimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rank over Q: denominators are cleared per column, then fraction-free
/// integer elimination with Markowitz pivoting runs on the columns.
std::size_t rank(const RationalMatrix& m);

/// Rank of the reduction mod `prime` (prime < 2^32). Throws BadPrimeError if
/// the prime divides a denominator.
std::size_t rank_modular(const RationalMatrix& m, std::uint64_t prime);

enum class RankMethod {
  kFullModular,    // mod-p rank reached min(rows, cols)
  kTwoPrimes,      // both primes agreed
  kExact,          // fraction-free elimination
};

struct RankResult {
  std::size_t rank = 0;
  RankMethod method = RankMethod::kExact;
};

struct RankOptions {
  bool exact_only = false;
  /// Also run the exact path and throw std::logic_error on any disagreement.
  bool cross_check = false;
};

/// Modular pre-pass with exact fallback.
RankResult certified_rank(const RationalMatrix& m, const RankOptions& options = {});

}  // namespace confbetti
