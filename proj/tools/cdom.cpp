// Command-line front end; the commands themselves live in cdom/cli.hpp.
#include <iostream>

#include <CLI11.hpp>

#include "cdom/cli.hpp"

int main(int argc, char** argv)
{
  using namespace cdom::cli;
  CLI::App app{"Enumerate and classify maximal unitary Condorcet domains"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate all isomorphism classes of one degree");
  enumerate->add_option("--degree", en.degree, "degree 3..7")->required();
  enumerate->add_option("--out", en.out, "class file to write")->required();
  enumerate->add_option("--frontier-depth", en.frontier_depth, "split depth for parallel work");
  enumerate->add_option("--jobs", en.jobs, "worker threads");
  enumerate->add_option("--checkpoint", en.checkpoint, "resumable checkpoint directory");
  enumerate->add_option("--stop-after", en.stop_after, "stop after this many frontier nodes");
  enumerate->add_option("--memory-limit", en.memory_limit, "classes held in memory before spilling");
  enumerate->add_flag("--prune", en.prune, "enable precedence pruning");
  enumerate->add_flag("--no-force", en.no_force, "branch on triples with an implied law");
  enumerate->add_flag("--binary", en.binary, "write the binary sidecar at any degree");
  enumerate->add_flag("--i-have-time", en.i_have_time, "allow degree 7");

  std::string in, out, against;
  int jobs = 1;
  auto* classify = app.add_subcommand("classify", "per-size property tables of a class file");
  classify->add_option("--in", in, "class file")->required();
  classify->add_option("--out", out, "prefix for the CSV reports")->required();
  classify->add_option("--jobs", jobs, "worker threads");

  int degree = 0;
  auto* verify = app.add_subcommand("verify", "compare the search with a brute-force enumeration");
  verify->add_option("--degree", degree, "degree 3..5")->required();
  verify->add_option("--against", against, "compare with this class file instead of a fresh search");

  SchemeArgs sc;
  auto* scheme = app.add_subcommand("scheme", "construct a named domain");
  scheme->add_option("kind", sc.kind, "alternating, black or replacement")->required();
  scheme->add_option("--degree", sc.degree, "degree for alternating and black");
  scheme->add_option("--variant", sc.variant, "alternating variant A or B");
  scheme->add_option("--left", sc.left, "outer domain (one-block class file)");
  scheme->add_option("--right", sc.right, "inner domain (one-block class file)");
  scheme->add_option("--out", sc.out, "output class file, - for stdout");

  std::string canon_in, canon_out;
  auto* canon = app.add_subcommand("canon", "canonicalize and deduplicate a class file");
  canon->add_option("--in", canon_in, "class file")->required();
  canon->add_option("--out", canon_out, "output class file")->required();

  std::string stats_in;
  auto* stats = app.add_subcommand("stats", "size distribution of a class file");
  stats->add_option("--in", stats_in, "class file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (*enumerate)
    return cmd_enumerate(en, std::cout, std::cerr);
  if (*classify)
    return cmd_classify(in, out, jobs, std::cout, std::cerr);
  if (*verify)
    return cmd_verify(degree, against, std::cout, std::cerr);
  if (*scheme)
    return cmd_scheme(sc, std::cout, std::cerr);
  if (*canon)
    return cmd_canon(canon_in, canon_out, std::cout, std::cerr);
  if (*stats)
    return cmd_stats(stats_in, std::cout, std::cerr);
  return kUsage;
}
