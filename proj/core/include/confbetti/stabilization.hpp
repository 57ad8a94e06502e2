// Descriptive stabilization statistics of a computed Betti table.
#pragma once

#include "confbetti/engine.hpp"

#include <optional>
#include <vector>

namespace confbetti {

/// Maximal run n_from..n_to (at least two rows) along the diagonal
/// i = slope * n + offset on which b_i(n) takes one nonzero value.
struct DiagonalRun {
  int slope = 0;
  int offset = 0;
  int n_from = 0;
  int n_to = 0;
  std::size_t value = 0;

  friend bool operator==(const DiagonalRun&, const DiagonalRun&) = default;
};

struct StabilizationReport {
  /// onset[i]: smallest n with b_i constant from n to n_max; nullopt for an
  /// empty grid.
  std::vector<std::optional<int>> onset;
  /// Sorted by (slope, offset, n_from).
  std::vector<DiagonalRun> diagonals;

  /// Runs on the diagonal i = slope * n + offset.
  std::vector<DiagonalRun> runs_on(int slope, int offset) const;
};

/// Only reports what the grid shows; nothing is extrapolated past n_max.
StabilizationReport detect_stabilization(const BettiTable& table);

}  // namespace confbetti
