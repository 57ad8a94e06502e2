#include "confbetti/monomial.hpp"

#include <stdexcept>

namespace confbetti {

GeneratorLayout::GeneratorLayout(const GradedRing& ring) : orientation_(ring.orientation_index()) {
  for (std::size_t i = 1; i < ring.size(); ++i) {
    gens_.push_back({i, false, ring.degree(i), ring.degree(i), 1});
  }
  v_count_ = gens_.size();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    gens_.push_back({i, true, ring.degree(i), ring.degree(i) + 1, 2});
  }
}

std::size_t GeneratorLayout::v_index(std::size_t basis_index) const {
  if (basis_index == 0) throw std::invalid_argument("the unit has no V generator");
  return basis_index - 1;
}

bool Monomial::is_one() const {
  for (auto e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

unsigned Monomial::total_exponent() const {
  unsigned t = 0;
  for (auto e : exps_) t += e;
  return t;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned ta = a.total_exponent();
  const unsigned tb = b.total_exponent();
  if (ta != tb) return ta < tb;
  // Larger exponent on an earlier generator sorts first.
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return a.size() < b.size();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

bool satisfies_exterior(const Monomial& mon, const GeneratorLayout& layout) {
  for (std::size_t k = 0; k < mon.size(); ++k) {
    if (layout[k].odd() && mon[k] > 1) return false;
  }
  return true;
}

Bigrade monomial_bigrade(const Monomial& mon, const GeneratorLayout& layout) {
  if (mon.size() != layout.size()) throw std::invalid_argument("monomial does not match generator layout");
  if (!satisfies_exterior(mon, layout)) {
    throw std::invalid_argument("exterior constraint violated: odd generator with exponent >= 2");
  }
  Bigrade g;
  for (std::size_t k = 0; k < mon.size(); ++k) {
    g.p += mon[k] * layout[k].weight;
    if (layout[k].is_w) g.q += mon[k];
  }
  return g;
}

unsigned monomial_length(const Monomial& mon, const GeneratorLayout& layout) {
  unsigned len = 0;
  for (std::size_t k = 0; k < mon.size(); ++k) len += mon[k] * static_cast<unsigned>(layout[k].length);
  return len;
}

bool monomial_odd(const Monomial& mon, const GeneratorLayout& layout) {
  int parity = 0;
  for (std::size_t k = 0; k < mon.size(); ++k) {
    if (layout[k].odd()) parity ^= (mon[k] & 1);
  }
  return parity != 0;
}

bool is_reduced(const Monomial& mon, const GeneratorLayout& layout) {
  const std::size_t top = layout.orientation_basis_index();
  if (top == 0) return true;  // point ring: no orientation generators to drop
  return mon[layout.v_index(top)] <= 1 && mon[layout.w_index(top)] == 0;
}

std::pair<Monomial, int> multiply_monomials(const Monomial& a, const Monomial& b, const GeneratorLayout& layout) {
  Monomial out(a.size());
  // Moving each odd factor of b left past the odd factors of a that follow it
  // in canonical order costs one sign each.
  int odd_seen_in_a_after = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (layout[k].odd() && a[k] && b[k]) return {Monomial(a.size()), 0};
  }
  int swaps = 0;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (!layout[k].odd()) continue;
    if (b[k]) swaps += odd_seen_in_a_after;
    if (a[k]) ++odd_seen_in_a_after;
  }
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = static_cast<Exponent>(a[k] + b[k]);
  return {std::move(out), (swaps % 2 == 0) ? 1 : -1};
}

std::string format_monomial(const Monomial& mon, const GradedRing& ring, const GeneratorLayout& layout) {
  std::string out;
  for (std::size_t k = 0; k < mon.size(); ++k) {
    if (mon[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += layout[k].is_w ? "W[" : "Y[";
    out += ring.label(layout[k].basis_index);
    out += "]";
    if (mon[k] > 1) out += "^" + std::to_string(mon[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace confbetti
