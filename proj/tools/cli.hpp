// Command-line front end; kept in a library so tests can drive it in-process.
#pragma once

#include "confbetti/ring.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace confbetti::cli {

enum class Format { kCsv, kMarkdown, kJson };

struct RunConfig {
  std::string space;
  std::string ring_file;
  int n_min = 1;
  int n_max = 1;
  std::optional<int> i_max;
  bool reduced = true;
  Format format = Format::kCsv;
  unsigned workers = 0;
  bool exact_only = false;
  std::string dump_dir;
};

/// "A..B" or "A". Throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

/// The ring named by --space or loaded from --ring-file.
GradedRing load_ring(const RunConfig& config);

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace confbetti::cli
