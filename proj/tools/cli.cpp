#include "cli.hpp"

#include "confbetti/engine.hpp"
#include "confbetti/odd_closed.hpp"
#include "confbetti/oracles.hpp"
#include "confbetti/registry.hpp"
#include "confbetti/stabilization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace confbetti::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

// One grid emitter for compute and betti-odd so all formats carry identical
// numbers.
struct Grid {
  std::string space;
  int dimension = 0;
  long euler = 0;
  int n_min = 1;
  int n_max = 1;
  int i_max = 0;
  bool reduced = true;
  std::vector<std::vector<std::string>> rows;  // decimal strings, [n - n_min][i]
  std::map<int, int> onsets;                   // i -> n
};

void emit(const Grid& g, Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv: {
      out << "n";
      for (int i = 0; i <= g.i_max; ++i) out << ",b_" << i;
      out << '\n';
      for (int n = g.n_min; n <= g.n_max; ++n) {
        out << n;
        for (const auto& v : g.rows[static_cast<std::size_t>(n - g.n_min)]) out << ',' << v;
        out << '\n';
      }
      break;
    }
    case Format::kMarkdown: {
      out << "| n |";
      for (int i = 0; i <= g.i_max; ++i) out << " b_" << i << " |";
      out << "\n|---|";
      for (int i = 0; i <= g.i_max; ++i) out << "---|";
      out << '\n';
      for (int n = g.n_min; n <= g.n_max; ++n) {
        out << "| " << n << " |";
        for (const auto& v : g.rows[static_cast<std::size_t>(n - g.n_min)]) out << ' ' << v << " |";
        out << '\n';
      }
      break;
    }
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["space"] = g.space;
      doc["dimension"] = g.dimension;
      doc["euler"] = g.euler;
      doc["reduced"] = g.reduced;
      doc["n_min"] = g.n_min;
      doc["n_max"] = g.n_max;
      doc["i_max"] = g.i_max;
      nlohmann::ordered_json onsets = nlohmann::ordered_json::object();
      for (const auto& [i, n] : g.onsets) onsets[std::to_string(i)] = n;
      doc["stable_onsets"] = onsets;
      nlohmann::ordered_json cells = nlohmann::ordered_json::array();
      for (int n = g.n_min; n <= g.n_max; ++n) {
        const auto& row = g.rows[static_cast<std::size_t>(n - g.n_min)];
        for (int i = 0; i <= g.i_max; ++i) {
          // Betti numbers from the closed formula may exceed 64 bits.
          const std::string& v = row[static_cast<std::size_t>(i)];
          nlohmann::ordered_json cell;
          cell["n"] = n;
          cell["i"] = i;
          if (v.size() < 19) cell["betti"] = std::stoll(v);
          else cell["betti"] = v;
          cells.push_back(cell);
        }
      }
      doc["cells"] = cells;
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

EngineOptions engine_options(const RunConfig& config) {
  EngineOptions o;
  o.reduced = config.reduced;
  o.exact_only = config.exact_only;
  o.workers = config.workers;
  o.dump_dir = config.dump_dir;
  return o;
}

void require_even(const GradedRing& ring) {
  if (ring.dimension() % 2 != 0) {
    throw UsageError("space " + ring.name() + " has odd dimension " + std::to_string(ring.dimension()) +
                     "; use the betti-odd command");
  }
}

int default_i_max(const GradedRing& ring, int n_max) {
  return std::max(0, vanishing_bound(ring, n_max) - 1);
}

void validate(const RunConfig& c, int lowest_n) {
  if (c.space.empty() == c.ring_file.empty()) throw UsageError("give exactly one of --space or --ring-file");
  if (c.n_min < lowest_n || c.n_max < c.n_min) {
    throw UsageError("--n must be a nonempty range of integers >= " + std::to_string(lowest_n));
  }
  if (c.i_max && *c.i_max < 0) throw UsageError("--i-max must be nonnegative");
}

int cmd_spaces(std::ostream& out) {
  for (const auto& entry : builtin_spaces()) out << entry.name << "\t" << entry.description << '\n';
  out << "\nconstructors:\n";
  for (const auto& line : space_constructors()) out << "  " << line << '\n';
  return 0;
}

int cmd_compute(const RunConfig& config, std::ostream& out) {
  GradedRing ring = load_ring(config);
  require_even(ring);
  const int i_max = config.i_max.value_or(default_i_max(ring, config.n_max));
  BettiEngine engine(ring, engine_options(config));
  const BettiTable table = engine.betti_table(config.n_min, config.n_max, i_max);
  const StabilizationReport report = detect_stabilization(table);
  Grid g;
  g.space = config.space.empty() ? ring.name() : config.space;
  g.dimension = ring.dimension();
  g.euler = euler_characteristic(ring);
  g.n_min = config.n_min;
  g.n_max = config.n_max;
  g.i_max = i_max;
  g.reduced = config.reduced;
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (auto v : row) cells.push_back(std::to_string(v));
    g.rows.push_back(std::move(cells));
  }
  for (int i = 0; i <= i_max; ++i) {
    if (auto onset = report.onset[static_cast<std::size_t>(i)]) g.onsets[i] = *onset;
  }
  emit(g, config.format, out);
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  GradedRing ring = load_ring(config);
  require_even(ring);
  const int i_max = config.i_max.value_or(default_i_max(ring, config.n_max));
  BettiEngine engine(ring, engine_options(config));
  OracleReport report;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    report.append(check_d_squared(ring, n, i_max, config.reduced));
    report.append(check_euler(engine, n));
  }
  report.append(check_reduction_equivalence(ring, config.n_max, i_max));
  report.append(check_theorems(engine, config.n_max, i_max));
  report.write(out);
  out << (report.lines.size() - report.failures()) << " passed, " << report.failures() << " failed\n";
  return report.passed() ? 0 : 1;
}

int cmd_stable(const RunConfig& config, std::ostream& out) {
  GradedRing ring = load_ring(config);
  require_even(ring);
  const int i_max = config.i_max.value_or(12);
  BettiEngine engine(ring, engine_options(config));
  engine.prefetch(1, i_max + 1, i_max);
  Grid g;
  g.space = config.space.empty() ? ring.name() : config.space;
  g.dimension = ring.dimension();
  g.euler = euler_characteristic(ring);
  std::vector<std::size_t> values;
  for (int i = 0; i <= i_max; ++i) values.push_back(engine.stable_betti(i));
  if (config.format == Format::kJson) {
    nlohmann::ordered_json doc;
    doc["space"] = g.space;
    doc["dimension"] = g.dimension;
    doc["stable_betti"] = values;
    out << doc.dump(2) << '\n';
  } else if (config.format == Format::kMarkdown) {
    out << "| i | b_i |\n|---|---|\n";
    for (int i = 0; i <= i_max; ++i) out << "| " << i << " | " << values[static_cast<std::size_t>(i)] << " |\n";
  } else {
    out << "i,b_i\n";
    for (int i = 0; i <= i_max; ++i) out << i << ',' << values[static_cast<std::size_t>(i)] << '\n';
  }
  return 0;
}

int cmd_betti_odd(const RunConfig& config, std::ostream& out) {
  GradedRing ring = load_ring(config);
  if (ring.dimension() % 2 == 0) {
    throw UsageError("space " + ring.name() + " is even-dimensional; use the compute command");
  }
  const int i_max = config.i_max.value_or(config.n_max * ring.dimension());
  Grid g;
  g.space = config.space.empty() ? ring.name() : config.space;
  g.dimension = ring.dimension();
  g.euler = euler_characteristic(ring);
  g.n_min = config.n_min;
  g.n_max = config.n_max;
  g.i_max = i_max;
  std::map<int, std::vector<Integer>> rows;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const auto b = betti_odd_closed(ring, n);
    std::vector<std::string> cells;
    for (int i = 0; i <= i_max; ++i) {
      cells.push_back(static_cast<std::size_t>(i) < b.size() ? b[static_cast<std::size_t>(i)].get_str() : "0");
    }
    g.rows.push_back(std::move(cells));
  }
  for (int i = 0; i <= i_max; ++i) {
    int n = g.n_max;
    const auto& last = g.rows.back()[static_cast<std::size_t>(i)];
    while (n > g.n_min && g.rows[static_cast<std::size_t>(n - 1 - g.n_min)][static_cast<std::size_t>(i)] == last) --n;
    g.onsets[i] = n;
  }
  emit(g, config.format, out);
  return 0;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range " + text);
  return {lo, hi};
}

GradedRing load_ring(const RunConfig& config) {
  if (!config.ring_file.empty()) {
    std::ifstream in(config.ring_file);
    if (!in) throw UsageError("cannot read ring file " + config.ring_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_ring(buffer.str());
  }
  try {
    return resolve_space(config.space);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + " (see the spaces command)");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers of unordered configuration spaces of closed manifolds", "confbetti"};
  app.require_subcommand(1);

  RunConfig config;
  std::string n_range = "1..1";
  std::string format = "csv";
  int i_max = -1;

  auto add_space_options = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--space", config.space, "built-in space or constructor expression");
    sub->add_option("--ring-file", config.ring_file, "ring description in JSON");
    if (with_n) sub->add_option("--n", n_range, "range of n, A..B");
    sub->add_option("--i-max", i_max, "largest cohomological degree");
    sub->add_option("--format", format, "csv, md or json")->check(CLI::IsMember({"csv", "md", "json"}));
  };
  auto add_engine_options = [&](CLI::App* sub) {
    sub->add_flag("--no-reduction", "use the full complex instead of the reduced one");
    sub->add_flag("--exact-only", "skip the modular rank pre-pass");
    sub->add_option("--workers", config.workers, "worker threads (default: hardware)");
    sub->add_option("--dump-matrices", config.dump_dir, "write every differential matrix to DIR");
  };

  auto* spaces = app.add_subcommand("spaces", "list built-in spaces");
  auto* compute = app.add_subcommand("compute", "Betti table over a range of n");
  add_space_options(compute, true);
  add_engine_options(compute);
  auto* verify = app.add_subcommand("verify", "run the self-check oracles");
  add_space_options(verify, true);
  add_engine_options(verify);
  auto* stable = app.add_subcommand("stable", "stable Betti numbers b_i(i + 1)");
  add_space_options(stable, false);
  add_engine_options(stable);
  auto* odd = app.add_subcommand("betti-odd", "closed formula for odd-dimensional spaces");
  add_space_options(odd, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (spaces->parsed()) return cmd_spaces(out);
    CLI::App* sub = app.get_subcommands().front();
    config.reduced = sub->get_option_no_throw("--no-reduction") == nullptr || sub->count("--no-reduction") == 0;
    config.exact_only = sub->get_option_no_throw("--exact-only") != nullptr && sub->count("--exact-only") > 0;
    config.format = format == "json" ? Format::kJson : format == "md" ? Format::kMarkdown : Format::kCsv;
    if (i_max >= 0) config.i_max = i_max;
    else if (sub->count("--i-max")) throw UsageError("--i-max must be nonnegative");
    try {
      std::tie(config.n_min, config.n_max) = parse_range(n_range);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--n: ") + e.what());
    }
    validate(config, odd->parsed() ? 0 : 1);
    if (compute->parsed()) return cmd_compute(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    if (stable->parsed()) return cmd_stable(config, out);
    if (odd->parsed()) return cmd_betti_odd(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const RingError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace confbetti::cli
