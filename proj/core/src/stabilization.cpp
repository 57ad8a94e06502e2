#include "confbetti/stabilization.hpp"

namespace confbetti {

std::vector<DiagonalRun> StabilizationReport::runs_on(int slope, int offset) const {
  std::vector<DiagonalRun> out;
  for (const auto& run : diagonals) {
    if (run.slope == slope && run.offset == offset) out.push_back(run);
  }
  return out;
}

StabilizationReport detect_stabilization(const BettiTable& table) {
  StabilizationReport report;
  report.onset.assign(static_cast<std::size_t>(table.i_max) + 1, std::nullopt);
  if (table.rows.empty()) return report;

  for (int i = 0; i <= table.i_max; ++i) {
    int n = table.n_max;
    while (n > table.n_min && table.at(n - 1, i) == table.at(table.n_max, i)) --n;
    report.onset[static_cast<std::size_t>(i)] = n;
  }

  for (int slope = 1; slope <= table.dimension - 1; ++slope) {
    const int lowest = -slope * table.n_max;
    const int highest = table.i_max - slope * table.n_min;
    for (int offset = lowest; offset <= highest; ++offset) {
      DiagonalRun run;
      bool open = false;
      auto close = [&] {
        if (open && run.n_to > run.n_from) report.diagonals.push_back(run);
        open = false;
      };
      for (int n = table.n_min; n <= table.n_max; ++n) {
        const int i = slope * n + offset;
        if (i < 0 || i > table.i_max) {
          close();
          continue;
        }
        const std::size_t b = table.at(n, i);
        if (open && b == run.value) {
          run.n_to = n;
          continue;
        }
        close();
        if (b != 0) {
          run = {slope, offset, n, n, b};
          open = true;
        }
      }
      close();
    }
  }
  return report;
}

}  // namespace confbetti
