#include "confbetti/differential.hpp"

#include <ostream>
#include <stdexcept>

namespace confbetti {

void AlgebraElement::add(const Monomial& mon, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mon, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational AlgebraElement::coefficient(const Monomial& mon) const {
  auto it = terms_.find(mon);
  return it == terms_.end() ? Rational(0) : it->second;
}

Differential::Differential(const GradedRing& ring) : ring_(ring), layout_(ring) {
  if (ring.dimension() % 2 != 0) throw std::invalid_argument("differential requires an even-dimensional ring");
  auto duals = dual_basis(ring);
  images_.resize(ring.size());
  for (std::size_t j = 0; j < ring.size(); ++j) {
    AlgebraElement image;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      auto left = lift(ring.multiply(ring.element(j), ring.element(i)));
      if (left.is_zero()) continue;
      auto right = lift(duals[i]);
      const int sign = ring.degree(i) % 2 == 0 ? 1 : -1;
      for (const auto& [ma, ca] : left.terms()) {
        for (const auto& [mb, cb] : right.terms()) {
          auto [mon, s] = multiply_monomials(ma, mb, layout_);
          if (s == 0) continue;
          image.add(mon, ca * cb * (sign * s));
        }
      }
    }
    images_[j] = std::move(image);
  }
}

AlgebraElement Differential::lift(const RingElement& e) const {
  AlgebraElement out;
  for (const auto& [k, c] : e.terms()) {
    Monomial mon(layout_.size());
    if (k != ring_.unit_index()) mon[layout_.v_index(k)] = 1;
    out.add(mon, c);
  }
  return out;
}

AlgebraElement Differential::d_monomial(const Monomial& mon, bool reduced) const {
  if (mon.size() != layout_.size() || !satisfies_exterior(mon, layout_)) {
    throw std::invalid_argument("monomial violates exterior constraints");
  }
  AlgebraElement out;
  const std::size_t first_w = layout_.v_count();
  int prefix_parity = 0;
  for (std::size_t k = 0; k < first_w; ++k) prefix_parity += layout_[k].total_degree * mon[k];
  for (std::size_t g = first_w; g < layout_.size(); ++g) {
    const Exponent s = mon[g];
    if (s > 0) {
      Monomial prefix(layout_.size());
      Monomial suffix(layout_.size());
      for (std::size_t k = 0; k < layout_.size(); ++k) {
        if (k < g) prefix[k] = mon[k];
        else if (k > g) suffix[k] = mon[k];
      }
      suffix[g] = static_cast<Exponent>(s - 1);
      const int lead = (prefix_parity % 2 == 0 ? 1 : -1) * static_cast<int>(s);
      for (const auto& [t, c] : images_[layout_[g].basis_index].terms()) {
        auto [x, s1] = multiply_monomials(prefix, t, layout_);
        if (s1 == 0) continue;
        auto [y, s2] = multiply_monomials(x, suffix, layout_);
        if (s2 == 0) continue;
        if (reduced && !is_reduced(y, layout_)) continue;
        out.add(y, c * (lead * s1 * s2));
      }
    }
    prefix_parity += layout_[g].total_degree * s;
  }
  return out;
}

RationalMatrix Differential::assemble(const CellBasis& domain, const CellBasis& codomain, bool reduced) const {
  RationalMatrix m(codomain.size(), domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const AlgebraElement image = d_monomial(domain[c], reduced);
    for (const auto& [mon, coeff] : image.terms()) {
      const long r = codomain.index_of(mon);
      if (r < 0) {
        throw std::logic_error("differential image " + format_monomial(mon, ring_, layout_) + " of " +
                               format_monomial(domain[c], ring_, layout_) + " outside the codomain basis");
      }
      m.add(static_cast<std::size_t>(r), c, coeff);
    }
  }
  return m;
}

RationalMatrix Differential::assemble(int p, int q, int n, bool reduced) const {
  CellBasis domain(enumerate_basis(ring_, layout_, p, q, n, reduced));
  CellBasis codomain(enumerate_basis(ring_, layout_, p + ring_.dimension(), q - 1, n, reduced));
  return assemble(domain, codomain, reduced);
}

void Differential::dump_images(std::ostream& out, const CellBasis& domain, bool reduced) const {
  for (const auto& mon : domain.monomials()) {
    out << format_monomial(mon, ring_, layout_) << " -> " << format_element(d_monomial(mon, reduced), ring_, layout_)
        << '\n';
  }
}

std::string format_element(const AlgebraElement& e, const GradedRing& ring, const GeneratorLayout& layout) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [mon, c] : e.terms()) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mon.is_one();
    if (mag != 1 || unit) out += format_rational(mag);
    if (!unit) {
      if (mag != 1) out += "*";
      out += format_monomial(mon, ring, layout);
    }
  }
  return out;
}

AlgebraElement d_generator(const GradedRing& ring, std::size_t basis_index) {
  return Differential(ring).d_generator(basis_index);
}

AlgebraElement d_monomial(const GradedRing& ring, const Monomial& mon, bool reduced) {
  return Differential(ring).d_monomial(mon, reduced);
}

RationalMatrix assemble_matrix(const GradedRing& ring, int p, int q, int n, bool reduced) {
  return Differential(ring).assemble(p, q, n, reduced);
}

}  // namespace confbetti
