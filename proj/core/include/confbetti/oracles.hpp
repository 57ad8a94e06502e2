// Self-checks over computed complexes and Betti grids. Failures are reported,
// never thrown.
#pragma once

#include "confbetti/engine.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace confbetti {

struct OracleLine {
  bool pass = true;
  std::string oracle;
  std::string ring;
  std::string coordinates;
  std::string expected;
  std::string actual;

  /// "PASS|FAIL <oracle> <ring> <coordinates> <expected> <actual>"
  std::string format() const;
};

struct OracleReport {
  std::vector<OracleLine> lines;

  bool passed() const;
  std::size_t failures() const;
  void add(OracleLine line) { lines.push_back(std::move(line)); }
  void append(const OracleReport& other);
  void write(std::ostream& out) const;
};

/// d o d = 0 on every composable pair of cells with p + (D - 1) q <= i_max.
OracleReport check_d_squared(const GradedRing& ring, int n, int i_max, bool reduced);

/// sum_i (-1)^i b_i(n) against the generalized binomial C(chi, n).
OracleReport check_euler(BettiEngine& engine, int n);
OracleReport check_euler(const GradedRing& ring, int n);

/// Betti grids for 1..n and 0..i_max agree in reduced and full mode.
OracleReport check_reduction_equivalence(const GradedRing& ring, int n, int i_max);

/// Stability b_i(n) = b_i(n + 1) for i + 1 <= n < n_max and i <= i_max,
/// vanishing on (D-1)n+2 .. (D-1)n+6 for n <= n_max (computed, not assumed),
/// and for surfaces of positive genus b_{n+1}(n) > 0 for 3 <= n <= n_max.
OracleReport check_theorems(BettiEngine& engine, int n_max, int i_max);
OracleReport check_theorems(const GradedRing& ring, int n_max, int i_max);

/// Generalized binomial coefficient chi (chi - 1) ... (chi - n + 1) / n!.
Integer generalized_binomial(long chi, int n);

}  // namespace confbetti
