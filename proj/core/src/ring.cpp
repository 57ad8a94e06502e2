#include "confbetti/ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace confbetti {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

int sign_of(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::uint64_t fnv_mix(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Inverse of a square rational matrix by Gauss-Jordan; nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = 1 / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= scale;
      inv[col][k] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

struct PairingBlock {
  std::vector<std::size_t> rows;  // degree k
  std::vector<std::size_t> cols;  // degree D - k
};

std::vector<PairingBlock> pairing_blocks(const GradedRing& ring) {
  std::map<int, PairingBlock> blocks;
  for (std::size_t i = 0; i < ring.size(); ++i) blocks[ring.degree(i)].rows.push_back(i);
  for (auto& [k, block] : blocks) {
    for (std::size_t j = 0; j < ring.size(); ++j) {
      if (ring.degree(j) == ring.dimension() - k) block.cols.push_back(j);
    }
  }
  std::vector<PairingBlock> out;
  for (auto& [k, block] : blocks) out.push_back(std::move(block));
  return out;
}

}  // namespace

// RingElement ---------------------------------------------------------------

Rational RingElement::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::add(std::size_t index, const Rational& value) {
  if (index >= size_) throw RingError("basis index " + idx(index) + " out of range");
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= scalar;
  return *this;
}

// GradedRing ----------------------------------------------------------------

GradedRing::GradedRing(std::string name, int dimension, std::vector<BasisElement> basis,
                       std::vector<ProductEntry> products)
    : name_(std::move(name)), dimension_(dimension), basis_(std::move(basis)) {
  validate_and_complete(std::move(products));
}

void GradedRing::validate_and_complete(std::vector<ProductEntry> products) {
  const std::size_t n = basis_.size();
  if (dimension_ < 0) throw RingError("dimension must be nonnegative");
  if (n == 0) throw RingError("empty basis");

  std::set<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = basis_[i];
    if (b.label.empty()) throw RingError("empty label at basis index " + idx(i));
    if (!labels.insert(b.label).second) throw RingError("duplicate basis label '" + b.label + "'");
    if (b.degree < 0 || b.degree > dimension_) {
      throw RingError("degree out of range [0, dimension] at basis index " + idx(i));
    }
  }

  std::vector<std::size_t> deg0, top;
  for (std::size_t i = 0; i < n; ++i) {
    if (basis_[i].degree == 0) deg0.push_back(i);
    if (basis_[i].degree == dimension_) top.push_back(i);
  }
  if (basis_[0].degree != 0) throw RingError("missing unit: basis element 0 must have degree 0");
  if (deg0.size() > 1) {
    throw RingError("connectedness violated: degree-0 classes at indices 0 and " + idx(deg0[1]));
  }
  if (top.empty()) throw RingError("no orientation class: no basis element of degree " + std::to_string(dimension_));
  if (top.size() > 1) {
    throw RingError("orientation class not unique: degree-" + std::to_string(dimension_) + " classes at indices " +
                    idx(top[0]) + " and " + idx(top[1]));
  }
  orientation_ = top[0];

  table_.assign(n * n, {});
  std::vector<bool> given(n * n, false);
  for (auto& entry : products) {
    if (entry.i >= n || entry.j >= n) {
      throw RingError("product index out of range: (" + idx(entry.i) + ", " + idx(entry.j) + ")");
    }
    if (entry.i > entry.j) {
      throw RingError("products must be stored with i <= j: got (" + idx(entry.i) + ", " + idx(entry.j) + ")");
    }
    if (given[entry.i * n + entry.j]) {
      throw RingError("duplicate product entry (" + idx(entry.i) + ", " + idx(entry.j) + ")");
    }
    given[entry.i * n + entry.j] = true;
    std::map<std::size_t, Rational> acc;
    for (auto& [k, c] : entry.terms) {
      if (k >= n) throw RingError("product (" + idx(entry.i) + ", " + idx(entry.j) + ") names basis index " + idx(k));
      acc[k] += c;
    }
    SparseTerms terms;
    for (auto& [k, c] : acc) {
      if (c == 0) continue;
      if (basis_[k].degree != basis_[entry.i].degree + basis_[entry.j].degree) {
        throw RingError("degree additivity violated: y_" + idx(entry.i) + " * y_" + idx(entry.j) +
                        " has a component on y_" + idx(k));
      }
      terms.emplace_back(k, c);
    }
    table_[entry.i * n + entry.j] = std::move(terms);
  }

  // Unit row: fill when omitted, check when given.
  for (std::size_t j = 0; j < n; ++j) {
    SparseTerms expected{{j, Rational(1)}};
    if (!given[j]) {
      table_[j] = expected;
    } else if (table_[j] != expected) {
      throw RingError("unit law violated: y_0 * y_" + idx(j) + " != y_" + idx(j));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      SparseTerms t = table_[j * n + i];
      if (sign_of(static_cast<long long>(basis_[i].degree) * basis_[j].degree) < 0) {
        for (auto& term : t) term.second = -term.second;
      }
      table_[i * n + j] = std::move(t);
    }
    if (basis_[i].degree % 2 != 0 && !table_[i * n + i].empty()) {
      throw RingError("graded commutativity violated: odd class y_" + idx(i) + " must square to zero");
    }
  }

  std::ostringstream fingerprint;
  fingerprint << dimension_ << ';';
  for (auto& b : basis_) fingerprint << b.degree << ',';
  for (std::size_t p = 0; p < table_.size(); ++p) {
    for (auto& [k, c] : table_[p]) fingerprint << p << ':' << k << '=' << c.get_str() << ';';
  }
  id_ = fnv_mix(14695981039346656037ull, fingerprint.str());

  // Associativity over all triples; unit factors and triples above the top
  // degree hold by the checks above.
  auto times = [&](const SparseTerms& u, std::size_t right, bool on_left) {
    std::map<std::size_t, Rational> out;
    for (auto& [k, a] : u) {
      const auto& t = on_left ? structure(k, right) : structure(right, k);
      for (auto& [l, b] : t) out[l] += a * b;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      const auto& ab = table_[a * n + b];
      for (std::size_t c = 1; c < n; ++c) {
        if (basis_[a].degree + basis_[b].degree + basis_[c].degree > dimension_) continue;
        const auto& bc = table_[b * n + c];
        if (ab.empty() && bc.empty()) continue;
        if (times(ab, c, true) != times(bc, a, false)) {
          throw RingError("associativity violated: (y_" + idx(a) + " y_" + idx(b) + ") y_" + idx(c) + " != y_" + idx(a) +
                          " (y_" + idx(b) + " y_" + idx(c) + ")");
        }
      }
    }
  }

  // Poincare duality; dual_basis throws on a singular or non-square block.
  (void)dual_basis(*this);
}

std::vector<ProductEntry> GradedRing::stored_products() const {
  std::vector<ProductEntry> out;
  for (std::size_t i = 1; i < size(); ++i) {
    for (std::size_t j = i; j < size(); ++j) {
      const auto& t = structure(i, j);
      if (!t.empty()) out.push_back({i, j, t});
    }
  }
  return out;
}

RingElement GradedRing::element(std::size_t i) const {
  RingElement e = zero();
  e.add(i, 1);
  return e;
}

RingElement GradedRing::multiply(const RingElement& u, const RingElement& v) const {
  if (u.ring_id() != id_ || v.ring_id() != id_) {
    throw RingError("multiply: element belongs to a different ring");
  }
  RingElement out = zero();
  for (auto& [i, a] : u.terms()) {
    for (auto& [j, b] : v.terms()) {
      for (auto& [k, c] : structure(i, j)) out.add(k, a * b * c);
    }
  }
  return out;
}

std::optional<int> GradedRing::homogeneous_degree(const RingElement& e) const {
  std::optional<int> d;
  for (auto& [i, c] : e.terms()) {
    if (d && *d != degree(i)) return std::nullopt;
    d = degree(i);
  }
  return d;
}

Rational GradedRing::pairing(std::size_t a, std::size_t b) const {
  for (auto& [k, c] : structure(a, b)) {
    if (k == orientation_) return c;
  }
  return 0;
}

bool operator==(const GradedRing& a, const GradedRing& b) {
  return a.name_ == b.name_ && a.basis_ == b.basis_ && same_structure(a, b);
}

bool same_structure(const GradedRing& a, const GradedRing& b) {
  if (a.dimension() != b.dimension() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.degree(i) != b.degree(i)) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.structure(i, j) != b.structure(i, j)) return false;
    }
  }
  return true;
}

std::vector<RingElement> dual_basis(const GradedRing& ring) {
  std::vector<RingElement> duals(ring.size(), ring.zero());
  for (const auto& block : pairing_blocks(ring)) {
    if (block.rows.size() != block.cols.size()) {
      throw RingError("Poincare pairing not square between degree " + std::to_string(ring.degree(block.rows[0])) +
                      " and degree " + std::to_string(ring.dimension() - ring.degree(block.rows[0])));
    }
    std::vector<std::vector<Rational>> p(block.rows.size(), std::vector<Rational>(block.cols.size()));
    for (std::size_t a = 0; a < block.rows.size(); ++a) {
      for (std::size_t b = 0; b < block.cols.size(); ++b) p[a][b] = ring.pairing(block.rows[a], block.cols[b]);
    }
    auto inv = invert(p);
    if (!inv) {
      throw RingError("Poincare pairing singular on degree-" + std::to_string(ring.degree(block.rows[0])) +
                      " block starting at basis index " + std::to_string(block.rows[0]));
    }
    // P X = I: column j of X expresses (y_{rows[j]})^v over the cols basis.
    for (std::size_t j = 0; j < block.rows.size(); ++j) {
      for (std::size_t b = 0; b < block.cols.size(); ++b) duals[block.rows[j]].add(block.cols[b], (*inv)[b][j]);
    }
  }
  return duals;
}

int euler_characteristic(const GradedRing& ring) {
  int chi = 0;
  for (const auto& b : ring.basis()) chi += (b.degree % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace confbetti
