#include "confbetti/rank.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace confbetti {

namespace {

// Field policies for the shared eliminator. Each supplies the scalar type, a
// zero test, and `combine`, which cancels the pivot column out of a row.
struct ModularField {
  using Scalar = std::uint64_t;
  std::uint64_t p;

  static bool is_zero(const Scalar& v) { return v == 0; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p - b; }

  Scalar inverse(Scalar a) const {
    Scalar result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  using Row = std::vector<std::pair<std::size_t, Scalar>>;

  // row := row - (row[c] / pivot[c]) * pivot
  Row combine(const Row& row, const Scalar& row_lead, const Row& pivot, const Scalar& pivot_lead) const {
    const Scalar factor = mul(row_lead, inverse(pivot_lead));
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, sub(0, mul(factor, pivot[j].second)));
        ++j;
      } else {
        Scalar v = sub(row[i].second, mul(factor, pivot[j].second));
        if (v) out.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  void normalize(Row&) const {}
};

struct IntegerField {
  using Scalar = Integer;
  using Row = std::vector<std::pair<std::size_t, Scalar>>;

  static bool is_zero(const Scalar& v) { return v == 0; }

  // row := pivot_lead * row - row_lead * pivot, then divided by its content.
  Row combine(const Row& row, const Scalar& row_lead, const Row& pivot, const Scalar& pivot_lead) const {
    Integer g = gcd(row_lead, pivot_lead);
    Integer a = pivot_lead / g;
    Integer b = row_lead / g;
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.emplace_back(row[i].first, a * row[i].second);
        ++i;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, -(b * pivot[j].second));
        ++j;
      } else {
        Integer v = a * row[i].second - b * pivot[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    normalize(out);
    return out;
  }

  void normalize(Row& row) const {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
      g = gcd(g, v);
      if (g == 1) return;
    }
    if (g > 1) {
      for (auto& [c, v] : row) v /= g;
    }
  }
};

// Sparse elimination over rows. Pivot: the shortest active row (lowest index
// on ties), and within it the entry whose column is least populated (lowest
// column on ties). The product of those counts is the Markowitz cost.
template <typename Field>
std::size_t eliminate(std::vector<typename Field::Row> rows, std::size_t width, const Field& field) {
  using Row = typename Field::Row;
  std::vector<std::set<std::size_t>> col_rows(width);
  std::set<std::pair<std::size_t, std::size_t>> by_length;  // (length, row)
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    field.normalize(rows[r]);
    by_length.emplace(rows[r].size(), r);
    for (const auto& e : rows[r]) col_rows[e.first].insert(r);
  }

  std::size_t rank = 0;
  while (!by_length.empty()) {
    const std::size_t pr = by_length.begin()->second;
    by_length.erase(by_length.begin());
    Row pivot = std::move(rows[pr]);
    for (const auto& e : pivot) col_rows[e.first].erase(pr);

    std::size_t best = 0;
    for (std::size_t k = 1; k < pivot.size(); ++k) {
      if (col_rows[pivot[k].first].size() < col_rows[pivot[best].first].size()) best = k;
    }
    const std::size_t pc = pivot[best].first;
    const auto pivot_lead = pivot[best].second;
    ++rank;

    const std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (std::size_t r : targets) {
      Row& row = rows[r];
      by_length.erase({row.size(), r});
      for (const auto& e : row) col_rows[e.first].erase(r);
      auto lead = std::lower_bound(row.begin(), row.end(), pc,
                                   [](const auto& entry, std::size_t c) { return entry.first < c; });
      Row next = field.combine(row, lead->second, pivot, pivot_lead);
      row = std::move(next);
      if (row.empty()) continue;
      by_length.emplace(row.size(), r);
      for (const auto& e : row) col_rows[e.first].insert(r);
    }
  }
  return rank;
}

std::vector<IntegerField::Row> integer_columns(const RationalMatrix& m) {
  std::vector<IntegerField::Row> rows(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer scale = 1;
    for (const auto& entry : m.column(c)) scale = lcm(scale, Integer(entry.second.get_den()));
    auto& row = rows[c];
    row.reserve(m.column(c).size());
    for (const auto& [r, v] : m.column(c)) row.emplace_back(r, Integer(v.get_num() * (scale / v.get_den())));
  }
  return rows;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  return eliminate(integer_columns(m), m.rows(), IntegerField{});
}

std::size_t rank_modular(const RationalMatrix& m, std::uint64_t prime) {
  if (prime < 2 || prime >= (std::uint64_t{1} << 32)) throw std::invalid_argument("modulus out of range");
  ModularField field{prime};
  std::vector<ModularField::Row> rows(m.cols());
  const unsigned long p = static_cast<unsigned long>(prime);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto& row = rows[c];
    for (const auto& [r, v] : m.column(c)) {
      const std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
      if (den == 0) throw BadPrimeError("prime " + std::to_string(prime) + " divides a denominator");
      const std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
      const std::uint64_t value = field.mul(num, field.inverse(den));
      if (value) row.emplace_back(r, value);
    }
  }
  return eliminate(std::move(rows), m.rows(), field);
}

RankResult certified_rank(const RationalMatrix& m, const RankOptions& options) {
  RankResult result;
  if (options.exact_only) {
    result = {rank(m), RankMethod::kExact};
  } else {
    const std::size_t full = std::min(m.rows(), m.cols());
    bool done = false;
    try {
      const std::size_t r1 = rank_modular(m, kPrimaryPrime);
      if (r1 == full) {
        result = {r1, RankMethod::kFullModular};
        done = true;
      } else if (rank_modular(m, kSecondaryPrime) == r1) {
        result = {r1, RankMethod::kTwoPrimes};
        done = true;
      }
    } catch (const BadPrimeError&) {
    }
    if (!done) result = {rank(m), RankMethod::kExact};
  }
  if (options.cross_check && result.method != RankMethod::kExact) {
    const std::size_t exact = rank(m);
    if (exact != result.rank) {
      throw std::logic_error("modular rank " + std::to_string(result.rank) + " disagrees with exact rank " +
                             std::to_string(exact));
    }
  }
  return result;
}

}  // namespace confbetti
