// E-infinity dimensions and Betti numbers of unordered configuration spaces.
#pragma once

#include "confbetti/differential.hpp"
#include "confbetti/rank.hpp"

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace confbetti {

struct EngineOptions {
  bool reduced = true;
  bool exact_only = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Run the exact rank alongside the modular one on every matrix.
  bool cross_check_modular = false;
  /// When nonempty, every assembled matrix is written there as triplets.
  std::string dump_dir;
};

struct EngineStats {
  std::size_t matrices = 0;
  std::size_t full_modular = 0;
  std::size_t two_primes = 0;
  std::size_t exact = 0;
  std::size_t cross_checked = 0;
};

/// Grid n_min..n_max by 0..i_max.
struct BettiTable {
  std::string space;
  int dimension = 0;
  int n_min = 1;
  int n_max = 0;
  int i_max = 0;
  std::vector<std::vector<std::size_t>> rows;  // rows[n - n_min][i]

  std::size_t at(int n, int i) const { return rows.at(static_cast<std::size_t>(n - n_min)).at(static_cast<std::size_t>(i)); }
};

/// (D - 1) n + 2: Betti numbers in this degree and above vanish.
int vanishing_bound(const GradedRing& ring, int n);

/// Thread-safe: rank and dimension caches are guarded, everything else is
/// immutable after construction.
class BettiEngine {
 public:
  /// Throws std::invalid_argument when D is odd.
  explicit BettiEngine(GradedRing ring, EngineOptions options = {});

  const GradedRing& ring() const { return ring_; }
  const EngineOptions& options() const { return options_; }
  const Differential& differential() const { return differential_; }

  std::size_t e2_dim(int p, int q, int n);
  std::size_t rank_d(int p, int q, int n);

  /// dim E2 - rank d^{p,q} - rank d^{p-D,q+1}. Throws std::logic_error if
  /// negative.
  std::size_t e_infinity_dim(int p, int q, int n);

  /// Returns 0 without computation past the vanishing bound.
  std::size_t betti_number(int i, int n);
  /// Same sum, but never shortcut by the vanishing bound.
  std::size_t betti_number_computed(int i, int n);

  BettiTable betti_table(int n_min, int n_max, int i_max);

  /// b_i(i + 1)
  std::size_t stable_betti(int i);

  /// Computes every rank needed for the given rows in parallel.
  void prefetch(int n_min, int n_max, int i_max);

  EngineStats stats() const;

 private:
  using Key = std::tuple<int, int, int>;
  Key key(int p, int q, int n) const;
  std::size_t compute_rank(int p, int q, int n);
  std::size_t compute_dim(int p, int q, int n) const;
  void run_parallel(const std::vector<Key>& keys);

  GradedRing ring_;
  EngineOptions options_;
  Differential differential_;
  int D_;

  mutable std::mutex mutex_;
  std::map<Key, std::size_t> ranks_;
  std::map<Key, std::size_t> dims_;
  EngineStats stats_;
};

std::size_t e_infinity_dim(const GradedRing& ring, int p, int q, int n);
std::size_t betti_number(const GradedRing& ring, int i, int n);
BettiTable betti_table(const GradedRing& ring, int n_min, int n_max, int i_max);
std::size_t stable_betti(const GradedRing& ring, int i);

}  // namespace confbetti
