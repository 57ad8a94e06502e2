#include "confbetti/rational_matrix.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace confbetti {

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void RationalMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  if (value == 0) return;
  auto& column = columns_[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const auto& entry, std::size_t r) { return entry.first < r; });
  if (it != column.end() && it->first == row) {
    it->second += value;
    if (it->second == 0) column.erase(it);
  } else {
    column.insert(it, {row, value});
  }
}

Rational RationalMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  const auto& column = columns_[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const auto& entry, std::size_t r) { return entry.first < r; });
  return (it != column.end() && it->first == row) ? it->second : Rational(0);
}

std::vector<MatrixEntry> RationalMatrix::entries() const {
  std::vector<MatrixEntry> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
  }
  return t;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes do not compose");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t c = 0; c < rhs.cols_; ++c) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, v] : rhs.columns_[c]) {
      for (const auto& [r, u] : columns_[k]) acc[r] += u * v;
    }
    for (auto& [r, v] : acc) {
      if (v != 0) out.columns_[c].emplace_back(r, v);
    }
  }
  return out;
}

void RationalMatrix::write_triplets(std::ostream& out) const {
  out << rows_ << ' ' << cols_ << '\n';
  for (const auto& e : entries()) out << e.row << ' ' << e.col << ' ' << format_rational(e.value) << '\n';
}

}  // namespace confbetti
