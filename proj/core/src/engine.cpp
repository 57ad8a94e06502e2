#include "confbetti/engine.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace confbetti {

int vanishing_bound(const GradedRing& ring, int n) { return (ring.dimension() - 1) * n + 2; }

namespace {

GradedRing require_even(GradedRing ring) {
  if (ring.dimension() % 2 != 0) {
    throw std::invalid_argument("ring " + ring.name() +
                                " has odd dimension; use the closed formula (betti-odd) instead");
  }
  return ring;
}

}  // namespace

BettiEngine::BettiEngine(GradedRing ring, EngineOptions options)
    : ring_(require_even(std::move(ring))),
      options_(std::move(options)),
      differential_(ring_),
      D_(ring_.dimension()) {}

// Monomials of bigrade (p, q) have length at most p + 2q, so truncating
// beyond that changes nothing.
BettiEngine::Key BettiEngine::key(int p, int q, int n) const { return {p, q, std::min(n, p + 2 * q)}; }

std::size_t BettiEngine::compute_dim(int p, int q, int n) const {
  return enumerate_basis(ring_, differential_.layout(), p, q, n, options_.reduced).size();
}

std::size_t BettiEngine::compute_rank(int p, int q, int n) {
  if (q < 1 || p < 0) return 0;
  CellBasis domain(enumerate_basis(ring_, differential_.layout(), p, q, n, options_.reduced));
  if (domain.empty()) return 0;
  CellBasis codomain(enumerate_basis(ring_, differential_.layout(), p + D_, q - 1, n, options_.reduced));
  if (codomain.empty()) return 0;
  RationalMatrix m = differential_.assemble(domain, codomain, options_.reduced);
  if (!options_.dump_dir.empty()) {
    std::filesystem::create_directories(options_.dump_dir);
    const auto path = std::filesystem::path(options_.dump_dir) /
                      ("d_p" + std::to_string(p) + "_q" + std::to_string(q) + "_n" + std::to_string(n) + ".txt");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    m.write_triplets(out);
  }
  RankOptions ro;
  ro.exact_only = options_.exact_only;
  ro.cross_check = options_.cross_check_modular;
  const RankResult r = certified_rank(m, ro);
  std::lock_guard lock(mutex_);
  ++stats_.matrices;
  switch (r.method) {
    case RankMethod::kFullModular: ++stats_.full_modular; break;
    case RankMethod::kTwoPrimes: ++stats_.two_primes; break;
    case RankMethod::kExact: ++stats_.exact; break;
  }
  if (ro.cross_check && r.method != RankMethod::kExact) ++stats_.cross_checked;
  return r.rank;
}

std::size_t BettiEngine::e2_dim(int p, int q, int n) {
  if (p < 0 || q < 0 || n < 0) return 0;
  const Key k = key(p, q, n);
  {
    std::lock_guard lock(mutex_);
    if (auto it = dims_.find(k); it != dims_.end()) return it->second;
  }
  const std::size_t d = compute_dim(p, q, std::get<2>(k));
  std::lock_guard lock(mutex_);
  dims_.emplace(k, d);
  return d;
}

std::size_t BettiEngine::rank_d(int p, int q, int n) {
  if (p < 0 || q < 1 || n < 0) return 0;
  const Key k = key(p, q, n);
  {
    std::lock_guard lock(mutex_);
    if (auto it = ranks_.find(k); it != ranks_.end()) return it->second;
  }
  const std::size_t r = compute_rank(p, q, std::get<2>(k));
  std::lock_guard lock(mutex_);
  ranks_.emplace(k, r);
  return r;
}

std::size_t BettiEngine::e_infinity_dim(int p, int q, int n) {
  const long dim = static_cast<long>(e2_dim(p, q, n));
  const long out = static_cast<long>(rank_d(p, q, n));
  const long in = static_cast<long>(rank_d(p - D_, q + 1, n));
  const long value = dim - out - in;
  if (value < 0) {
    throw std::logic_error("negative E_infinity dimension at (p,q,n)=(" + std::to_string(p) + "," +
                           std::to_string(q) + "," + std::to_string(n) + ")");
  }
  return static_cast<std::size_t>(value);
}

std::size_t BettiEngine::betti_number_computed(int i, int n) {
  if (i < 0 || n < 0) return 0;
  std::size_t total = 0;
  for (int q = 0; 2 * q <= n; ++q) {
    const int p = i - (D_ - 1) * q;
    if (p < 0) break;
    total += e_infinity_dim(p, q, n);
  }
  return total;
}

std::size_t BettiEngine::betti_number(int i, int n) {
  if (i < 0 || n < 0) return 0;
  if (i >= vanishing_bound(ring_, n)) return 0;
  return betti_number_computed(i, n);
}

void BettiEngine::prefetch(int n_min, int n_max, int i_max) {
  std::set<Key> wanted;
  for (int n = std::max(n_min, 0); n <= n_max; ++n) {
    const int top = std::min(i_max, vanishing_bound(ring_, n) - 1);
    for (int i = 0; i <= top; ++i) {
      for (int q = 0; 2 * q <= n; ++q) {
        const int p = i - (D_ - 1) * q;
        if (p < 0) break;
        if (q >= 1) wanted.insert(key(p, q, n));
        if (p - D_ >= 0) wanted.insert(key(p - D_, q + 1, n));
      }
    }
  }
  std::vector<Key> missing;
  {
    std::lock_guard lock(mutex_);
    for (const auto& k : wanted) {
      if (!ranks_.count(k)) missing.push_back(k);
    }
  }
  run_parallel(missing);
}

void BettiEngine::run_parallel(const std::vector<Key>& keys) {
  unsigned workers = options_.workers ? options_.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, keys.size()));
  if (workers <= 1) {
    for (const auto& [p, q, n] : keys) rank_d(p, q, n);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t idx; (idx = next.fetch_add(1)) < keys.size();) {
        try {
          const auto& [p, q, n] = keys[idx];
          rank_d(p, q, n);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

BettiTable BettiEngine::betti_table(int n_min, int n_max, int i_max) {
  if (n_min < 0 || n_max < n_min) throw std::invalid_argument("empty n range");
  if (i_max < 0) throw std::invalid_argument("i_max must be nonnegative");
  prefetch(n_min, n_max, i_max);
  BettiTable table;
  table.space = ring_.name();
  table.dimension = D_;
  table.n_min = n_min;
  table.n_max = n_max;
  table.i_max = i_max;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<std::size_t> row(static_cast<std::size_t>(i_max) + 1, 0);
    for (int i = 0; i <= i_max; ++i) row[static_cast<std::size_t>(i)] = betti_number(i, n);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::size_t BettiEngine::stable_betti(int i) { return betti_number(i, i + 1); }

EngineStats BettiEngine::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

std::size_t e_infinity_dim(const GradedRing& ring, int p, int q, int n) {
  return BettiEngine(ring).e_infinity_dim(p, q, n);
}

std::size_t betti_number(const GradedRing& ring, int i, int n) { return BettiEngine(ring).betti_number(i, n); }

BettiTable betti_table(const GradedRing& ring, int n_min, int n_max, int i_max) {
  return BettiEngine(ring).betti_table(n_min, n_max, i_max);
}

std::size_t stable_betti(const GradedRing& ring, int i) { return BettiEngine(ring).stable_betti(i); }

}  // namespace confbetti
