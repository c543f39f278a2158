#ifndef CDOM_CLI_HPP
#define CDOM_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

namespace cdom::cli {

enum Exit : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

struct EnumerateArgs {
  int degree = 0;
  std::string out;
  int frontier_depth = -1;
  int jobs = 1;
  bool prune = false;
  bool no_force = false;
  /// Directory for the frontier, progress log and finished node output.
  std::string checkpoint;
  /// Stop after this many frontier nodes in this run (0 = no limit).
  std::size_t stop_after = 0;
  bool i_have_time = false;
  /// Canonical forms held in memory before spilling a sorted run.
  std::size_t memory_limit = 4'000'000;
  bool binary = false;  // force the binary sidecar below degree 6
};

struct SchemeArgs {
  std::string kind;  // alternating, black, replacement
  int degree = 0;
  std::string variant = "A";
  std::string left, right;
  std::string out = "-";
};

/// Each command reports on `out`, diagnostics on `err`, returns an Exit.
int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& in, const std::string& prefix, int jobs, std::ostream& out, std::ostream& err);
/// With `against` empty the oracle is compared with a fresh search.
int cmd_verify(int degree, const std::string& against, std::ostream& out, std::ostream& err);
int cmd_scheme(const SchemeArgs& args, std::ostream& out, std::ostream& err);
int cmd_canon(const std::string& in, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_stats(const std::string& in, std::ostream& out, std::ostream& err);

}  // namespace cdom::cli

#endif  // CDOM_CLI_HPP
