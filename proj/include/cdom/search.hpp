#ifndef CDOM_SEARCH_HPP
#define CDOM_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdom/laws.hpp"
#include "cdom/perm.hpp"

namespace cdom {

/// A vertex of the reduced Condorcet tree. Triples 0..depth-1 have been
/// visited; applied[s] is the law chosen there and forced[s] marks steps
/// taken because the law was already implied.
struct SearchNode {
  int degree = 0;
  int depth = 0;
  Domain current;
  std::vector<Law> applied;
  std::vector<bool> forced;

  static SearchNode root(int n);
  /// Rebuilds `current` as the intersection of the applied principal sets.
  static SearchNode from_path(int n, std::span<const int> ordinals, const std::vector<bool>& forced);

  std::vector<int> ordinals() const;
};

/// Child along law L; L must belong to triple node.depth.
SearchNode descend(const SearchNode& node, const Law& law, bool forced = false);

/// True when some non-forced visited triple now implies a law that precedes
/// the one applied there.
bool prune_by_precedence(const SearchNode& node);

/// The least implied law on the next triple, if any.
std::optional<Law> forced_law(const SearchNode& node);

/// True iff node.current is maximal among sets obeying some law on every
/// visited triple.
bool is_t_mucd(const SearchNode& node);

struct SearchOptions {
  bool prune = false;      // precedence pruning; together with the maximality cut it can lose classes
  bool force = true;       // single descendant on triples with an implied law
  bool maximality = true;  // cut nodes that are not t-MUCDs
};

struct SearchStats {
  std::uint64_t nodes = 0;      // vertices entered, root included
  std::uint64_t leaves = 0;     // depth C(n,3) vertices emitted
  std::uint64_t forced = 0;     // forced single-descendant steps
  std::uint64_t pruned = 0;     // children abandoned by precedence
  std::uint64_t cut = 0;        // children failing the t-MUCD test

  SearchStats& operator+=(const SearchStats& o);
};

/// Called with the membership words of each leaf.
using LeafSink = std::function<void(std::span<const std::uint64_t>)>;
using NodeSink = std::function<void(const SearchNode&)>;

/// Depth-first walker over the reduced tree. Owns its scratch stack, so one
/// instance per thread.
class SearchEngine {
public:
  explicit SearchEngine(int n, SearchOptions options = {});

  int degree() const { return n_; }
  const SearchStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

  /// Walks the subtree below `start` and emits every surviving leaf.
  void run(const SearchNode& start, const LeafSink& sink);
  /// Walks down to `depth` and emits the surviving vertices there.
  void collect(const SearchNode& start, int depth, const NodeSink& sink);

private:
  void load(const SearchNode& start);
  void visit(int t);
  bool accept_child(int t);
  SearchNode snapshot(int t) const;

  int n_;
  int triples_;
  std::size_t words_;
  SearchOptions options_;
  const LawTable& table_;
  SearchStats stats_;

  std::vector<std::uint64_t> sets_;     // (triples_ + 1) x words_
  std::vector<std::uint8_t> present_;   // (triples_ + 1) x triples_
  std::vector<std::uint8_t> ordinal_;   // per triple
  std::vector<std::uint8_t> forced_;    // per triple
  int stop_depth_ = -1;
  const LeafSink* leaf_sink_ = nullptr;
  const NodeSink* node_sink_ = nullptr;
};

struct Frontier {
  int degree = 0;
  int depth = 0;
  std::string law_order = kLawOrderId;
  std::vector<SearchNode> nodes;
};

Frontier split_frontier(int n, int depth, SearchOptions options = {});
/// Smallest depth whose frontier holds at least `min_nodes` vertices
/// (capped at C(n,3) - 1).
int default_frontier_depth(int n, std::size_t min_nodes, SearchOptions options = {});

/// One node per line: depth, applied law ordinals, forced mask as a bit
/// string; `#` header and a trailing crc32 line.
void write_frontier(std::ostream& out, const Frontier& frontier);
/// Throws std::runtime_error on malformed or checksum-mismatched input.
Frontier read_frontier(std::istream& in);
std::string frontier_line(const SearchNode& node);
SearchNode parse_frontier_line(int n, const std::string& line);

/// Leaves below one node; SearchStats are added to *stats when given.
void resume(const SearchNode& node, const LeafSink& sink, SearchOptions options = {}, SearchStats* stats = nullptr);

/// Sink for the parallel run; worker is in [0, workers).
using WorkerLeafSink = std::function<void(int worker, std::span<const std::uint64_t>)>;

struct EnumerateOptions {
  SearchOptions search;
  int workers = 1;
  /// Negative selects default_frontier_depth(n, 8 * workers).
  int frontier_depth = -1;
};

/// Emits every MUCD of degree n at least once. For a fixed law order the
/// emitted multiset does not depend on the worker count.
SearchStats enumerate_mucds(int n, const EnumerateOptions& options, const WorkerLeafSink& sink);

}  // namespace cdom

#endif  // CDOM_SEARCH_HPP
