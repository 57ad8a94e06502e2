#include "confbetti/oracles.hpp"

#include <ostream>

namespace confbetti {

namespace {

std::string coords(std::initializer_list<std::pair<const char*, long>> parts) {
  std::string out;
  for (const auto& [name, value] : parts) {
    if (!out.empty()) out += ",";
    out += name;
    out += "=";
    out += std::to_string(value);
  }
  return out;
}

std::string compact(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c != ' ') out += c;
  }
  return out;
}

}  // namespace

std::string OracleLine::format() const {
  return std::string(pass ? "PASS" : "FAIL") + " " + oracle + " " + ring + " " + coordinates + " " + expected + " " +
         actual;
}

bool OracleReport::passed() const { return failures() == 0; }

std::size_t OracleReport::failures() const {
  std::size_t f = 0;
  for (const auto& line : lines) f += line.pass ? 0 : 1;
  return f;
}

void OracleReport::append(const OracleReport& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

void OracleReport::write(std::ostream& out) const {
  for (const auto& line : lines) out << line.format() << '\n';
}

Integer generalized_binomial(long chi, int n) {
  Integer num = 1, den = 1;
  for (int k = 0; k < n; ++k) {
    num *= Integer(chi - k);
    den *= Integer(k + 1);
  }
  return num / den;
}

OracleReport check_d_squared(const GradedRing& ring, int n, int i_max, bool reduced) {
  OracleReport report;
  if (n <= 0) return report;
  const Differential d(ring);
  const int D = ring.dimension();
  const BigradedBasis basis(ring, n, i_max, reduced);
  const std::string name = compact(ring.name());
  for (const auto& [bg, domain] : basis.cells()) {
    const auto [p, q] = bg;
    if (q < 2 || p + (D - 1) * q > i_max) continue;
    CellBasis mid(enumerate_basis(ring, d.layout(), p + D, q - 1, n, reduced));
    CellBasis target(enumerate_basis(ring, d.layout(), p + 2 * D, q - 2, n, reduced));
    const RationalMatrix first = d.assemble(domain, mid, reduced);
    const RationalMatrix second = d.assemble(mid, target, reduced);
    const std::size_t nonzeros = second.multiply(first).nonzeros();
    report.add({nonzeros == 0, "d_squared", name, coords({{"p", p}, {"q", q}, {"n", n}}), "0",
                std::to_string(nonzeros)});
  }
  return report;
}

OracleReport check_euler(BettiEngine& engine, int n) {
  OracleReport report;
  const GradedRing& ring = engine.ring();
  Integer sum = 0;
  const int top = vanishing_bound(ring, n);
  for (int i = 0; i < top; ++i) {
    const std::size_t b = engine.betti_number(i, n);
    if (i % 2 == 0) sum += Integer(static_cast<unsigned long>(b));
    else sum -= Integer(static_cast<unsigned long>(b));
  }
  const Integer expected = generalized_binomial(euler_characteristic(ring), n);
  report.add({sum == expected, "euler", compact(ring.name()), coords({{"n", n}}), expected.get_str(), sum.get_str()});
  return report;
}

OracleReport check_euler(const GradedRing& ring, int n) {
  BettiEngine engine(ring);
  return check_euler(engine, n);
}

OracleReport check_reduction_equivalence(const GradedRing& ring, int n, int i_max) {
  OracleReport report;
  if (n < 1) return report;
  EngineOptions full;
  full.reduced = false;
  BettiEngine reduced_engine(ring);
  BettiEngine full_engine(ring, full);
  const BettiTable a = reduced_engine.betti_table(1, n, i_max);
  const BettiTable b = full_engine.betti_table(1, n, i_max);
  const std::string name = compact(ring.name());
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i <= i_max; ++i) {
      report.add({a.at(m, i) == b.at(m, i), "reduction", name, coords({{"i", i}, {"n", m}}),
                  std::to_string(b.at(m, i)), std::to_string(a.at(m, i))});
    }
  }
  return report;
}

OracleReport check_theorems(BettiEngine& engine, int n_max, int i_max) {
  OracleReport report;
  const GradedRing& ring = engine.ring();
  const std::string name = compact(ring.name());

  for (int i = 0; i <= i_max; ++i) {
    for (int n = i + 1; n < n_max; ++n) {
      const std::size_t here = engine.betti_number(i, n);
      const std::size_t next = engine.betti_number(i, n + 1);
      report.add({here == next, "stability", name, coords({{"i", i}, {"n", n}}), std::to_string(here),
                  std::to_string(next)});
    }
  }

  for (int n = 1; n <= n_max; ++n) {
    const int bound = vanishing_bound(ring, n);
    for (int i = bound; i <= bound + 4; ++i) {
      const std::size_t b = engine.betti_number_computed(i, n);
      report.add({b == 0, "vanishing", name, coords({{"i", i}, {"n", n}}), "0", std::to_string(b)});
    }
  }

  std::size_t degree_one = 0;
  for (const auto& e : ring.basis()) degree_one += e.degree == 1 ? 1 : 0;
  if (ring.dimension() == 2 && degree_one > 0) {
    for (int n = 3; n <= n_max; ++n) {
      const std::size_t b = engine.betti_number(n + 1, n);
      report.add({b > 0, "sharpness", name, coords({{"i", n + 1}, {"n", n}}), ">0", std::to_string(b)});
    }
  }
  return report;
}

OracleReport check_theorems(const GradedRing& ring, int n_max, int i_max) {
  BettiEngine engine(ring);
  return check_theorems(engine, n_max, i_max);
}

}  // namespace confbetti
