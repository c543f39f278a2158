#include "cdom/search.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cdom {

namespace {

struct MaskTables {
  std::array<std::uint16_t, 64> satisfied{};  // present patterns -> satisfied law codes
  std::array<std::uint8_t, 64> allowed{};     // present patterns -> patterns allowed by some satisfied law
  std::array<std::uint8_t, 512> min_ordinal{};  // law code mask -> least ordinal, 6 if none

  MaskTables()
  {
    for (int pm = 0; pm < 64; ++pm) {
      satisfied[pm] = satisfied_codes(static_cast<std::uint8_t>(pm));
      std::uint8_t a = 0;
      for (int code = 0; code < 9; ++code)
        if ((satisfied[pm] >> code) & 1u)
          a |= static_cast<std::uint8_t>(~forbidden_patterns(code) & 0x3f);
      allowed[pm] = a;
    }
    for (int m = 0; m < 512; ++m) {
      min_ordinal[m] = 6;
      for (int o = 0; o < 6; ++o)
        if ((m >> kOrdinalToCode[o]) & 1) {
          min_ordinal[m] = static_cast<std::uint8_t>(o);
          break;
        }
    }
  }
};

const MaskTables& masks()
{
  static const MaskTables t;
  return t;
}

int triple_count(int n)
{
  return static_cast<int>(binomial(n, 3));
}

}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& o)
{
  nodes += o.nodes;
  leaves += o.leaves;
  forced += o.forced;
  pruned += o.pruned;
  cut += o.cut;
  return *this;
}

// ---------------------------------------------------------------------------
// Node-level operations on Domain values.

SearchNode SearchNode::root(int n)
{
  law_table(n);
  SearchNode node;
  node.degree = n;
  node.current = Domain::full(n);
  return node;
}

SearchNode SearchNode::from_path(int n, std::span<const int> ordinals, const std::vector<bool>& forced)
{
  if (ordinals.size() != forced.size())
    throw std::invalid_argument("path and forced mask differ in length");
  if (static_cast<int>(ordinals.size()) > triple_count(n))
    throw std::invalid_argument("path longer than the triple count");
  SearchNode node = root(n);
  for (std::size_t s = 0; s < ordinals.size(); ++s)
    node = descend(node, Law::from_ordinal(static_cast<int>(s), ordinals[s]), forced[s]);
  return node;
}

std::vector<int> SearchNode::ordinals() const
{
  std::vector<int> out;
  out.reserve(applied.size());
  for (const auto& l : applied)
    out.push_back(l.ordinal());
  return out;
}

SearchNode descend(const SearchNode& node, const Law& law, bool forced)
{
  if (law.triple != node.depth)
    throw std::invalid_argument("law does not belong to the next triple");
  if (!law.identity_compatible())
    throw std::invalid_argument("law is not identity-compatible");
  if (node.depth >= triple_count(node.degree))
    throw std::invalid_argument("descend below a leaf");
  SearchNode child = node;
  child.depth = node.depth + 1;
  child.current &= principal_set(law, node.degree);
  child.applied.push_back(law);
  child.forced.push_back(forced);
  return child;
}

bool prune_by_precedence(const SearchNode& node)
{
  for (int s = 0; s < node.depth; ++s) {
    if (node.forced[s])
      continue;
    const int applied = node.applied[s].ordinal();
    for (const auto& l : satisfied_laws(node.current, s)) {
      const int o = l.ordinal();
      if (o >= 0 && o < applied)
        return true;
    }
  }
  return false;
}

std::optional<Law> forced_law(const SearchNode& node)
{
  if (node.depth >= triple_count(node.degree))
    throw std::invalid_argument("no triple left to force");
  std::optional<Law> best;
  for (const auto& l : satisfied_laws(node.current, node.depth)) {
    const int o = l.ordinal();
    if (o >= 0 && (!best || o < best->ordinal()))
      best = l;
  }
  return best;
}

bool is_t_mucd(const SearchNode& node)
{
  const auto& table = law_table(node.degree);
  Domain bound = Domain::full(node.degree);
  for (int s = 0; s < node.depth; ++s) {
    Domain union_s(node.degree);
    for (const auto& l : satisfied_laws(node.current, s)) {
      auto p = table.principal(s, l.code());
      auto& w = union_s.words();
      for (std::size_t i = 0; i < w.size(); ++i)
        w[i] |= p[i];
    }
    bound &= union_s;
  }
  return bound == node.current;
}

// ---------------------------------------------------------------------------
// SearchEngine

SearchEngine::SearchEngine(int n, SearchOptions options)
    : n_(n), triples_(triple_count(n)), options_(options), table_(law_table(n))
{
  words_ = table_.words();
  sets_.assign(static_cast<std::size_t>(triples_ + 1) * words_, 0);
  present_.assign(static_cast<std::size_t>(triples_ + 1) * triples_, 0);
  ordinal_.assign(triples_, 0);
  forced_.assign(triples_, 0);
}

void SearchEngine::load(const SearchNode& start)
{
  if (start.degree != n_)
    throw std::invalid_argument("node degree differs from engine degree");
  const int d = start.depth;
  std::copy(start.current.words().begin(), start.current.words().end(), sets_.begin() + static_cast<std::ptrdiff_t>(d * words_));
  std::span<const std::uint64_t> set{sets_.data() + d * words_, words_};
  for (int s = 0; s < d; ++s) {
    ordinal_[s] = static_cast<std::uint8_t>(start.applied[s].ordinal());
    forced_[s] = start.forced[s];
    present_[d * triples_ + s] = table_.present_patterns(set, s);
  }
}

SearchNode SearchEngine::snapshot(int t) const
{
  SearchNode node;
  node.degree = n_;
  node.depth = t;
  node.current = Domain::from_words(n_, {sets_.begin() + static_cast<std::ptrdiff_t>(t * words_),
                                         sets_.begin() + static_cast<std::ptrdiff_t>((t + 1) * words_)});
  for (int s = 0; s < t; ++s) {
    node.applied.push_back(Law::from_ordinal(s, ordinal_[s]));
    node.forced.push_back(forced_[s] != 0);
  }
  return node;
}

void SearchEngine::run(const SearchNode& start, const LeafSink& sink)
{
  load(start);
  leaf_sink_ = &sink;
  node_sink_ = nullptr;
  stop_depth_ = -1;
  visit(start.depth);
  leaf_sink_ = nullptr;
}

void SearchEngine::collect(const SearchNode& start, int depth, const NodeSink& sink)
{
  if (depth < start.depth || depth > triples_)
    throw std::invalid_argument("collection depth out of range");
  load(start);
  leaf_sink_ = nullptr;
  node_sink_ = &sink;
  stop_depth_ = depth;
  visit(start.depth);
  node_sink_ = nullptr;
  stop_depth_ = -1;
}

void SearchEngine::visit(int t)
{
  if (t == stop_depth_) {
    (*node_sink_)(snapshot(t));
    return;
  }
  ++stats_.nodes;
  const std::uint64_t* set = sets_.data() + t * words_;
  if (t == triples_) {
    ++stats_.leaves;
    if (leaf_sink_)
      (*leaf_sink_)({set, words_});
    return;
  }

  const auto& mt = masks();
  const std::uint8_t pm = table_.present_patterns({set, words_}, t);
  present_[t * triples_ + t] = pm;
  std::uint64_t* child = sets_.data() + (t + 1) * words_;
  const std::uint16_t implied = mt.satisfied[pm];

  if (options_.force && implied) {
    ++stats_.forced;
    std::copy(set, set + words_, child);
    std::copy(present_.begin() + t * triples_, present_.begin() + t * triples_ + t + 1,
              present_.begin() + (t + 1) * triples_);
    ordinal_[t] = mt.min_ordinal[implied];
    forced_[t] = 1;
    visit(t + 1);
    return;
  }

  for (int o = 0; o < 6; ++o) {
    auto p = table_.principal(t, kOrdinalToCode[o]);
    for (std::size_t w = 0; w < words_; ++w)
      child[w] = set[w] & p[w];
    ordinal_[t] = static_cast<std::uint8_t>(o);
    forced_[t] = 0;
    if (accept_child(t))
      visit(t + 1);
  }
}

bool SearchEngine::accept_child(int t)
{
  const auto& mt = masks();
  const std::uint64_t* child = sets_.data() + (t + 1) * words_;
  const std::uint8_t* parent_pm = present_.data() + t * triples_;
  std::uint8_t* child_pm = present_.data() + (t + 1) * triples_;

  // Restriction patterns can only disappear going down.
  for (int s = 0; s <= t; ++s) {
    std::uint8_t keep = 0;
    std::uint8_t todo = parent_pm[s];
    while (todo) {
      const int k = std::countr_zero(static_cast<unsigned>(todo));
      todo &= static_cast<std::uint8_t>(todo - 1);
      auto ps = table_.pattern_set(s, k);
      for (std::size_t w = 0; w < words_; ++w)
        if (child[w] & ps[w]) {
          keep |= static_cast<std::uint8_t>(1u << k);
          break;
        }
    }
    child_pm[s] = keep;
  }

  if (options_.prune) {
    for (int s = 0; s <= t; ++s)
      if (!forced_[s] && mt.min_ordinal[mt.satisfied[child_pm[s]]] < ordinal_[s]) {
        ++stats_.pruned;
        return false;
      }
  }

  if (options_.maximality) {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t acc = ~child[w];
      for (int s = 0; s <= t && acc; ++s)
        acc &= table_.pattern_union(s, mt.allowed[child_pm[s]])[w];
      if (acc) {
        ++stats_.cut;
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Frontier

Frontier split_frontier(int n, int depth, SearchOptions options)
{
  if (depth < 0 || depth > triple_count(n))
    throw std::invalid_argument("frontier depth out of range");
  Frontier f;
  f.degree = n;
  f.depth = depth;
  SearchEngine engine(n, options);
  engine.collect(SearchNode::root(n), depth, [&](const SearchNode& node) { f.nodes.push_back(node); });
  return f;
}

int default_frontier_depth(int n, std::size_t min_nodes, SearchOptions options)
{
  const int cap = std::max(triple_count(n) - 1, 0);
  for (int d = 0; d < cap; ++d) {
    std::size_t count = 0;
    SearchEngine engine(n, options);
    engine.collect(SearchNode::root(n), d, [&](const SearchNode&) { ++count; });
    if (count >= min_nodes)
      return d;
  }
  return cap;
}

std::string frontier_line(const SearchNode& node)
{
  std::string line = std::to_string(node.depth);
  for (const auto& l : node.applied) {
    line += ' ';
    line += std::to_string(l.ordinal());
  }
  if (node.depth > 0) {
    line += ' ';
    for (bool b : node.forced)
      line += b ? '1' : '0';
  }
  return line;
}

SearchNode parse_frontier_line(int n, const std::string& line)
{
  std::istringstream in(line);
  int depth = -1;
  if (!(in >> depth) || depth < 0 || depth > triple_count(n))
    throw std::runtime_error("frontier line has a bad depth: " + line);
  std::vector<int> ordinals(depth);
  for (auto& o : ordinals)
    if (!(in >> o) || o < 0 || o > 5)
      throw std::runtime_error("frontier line has a bad law ordinal: " + line);
  std::vector<bool> forced;
  if (depth > 0) {
    std::string mask;
    if (!(in >> mask) || static_cast<int>(mask.size()) != depth)
      throw std::runtime_error("frontier line has a bad forced mask: " + line);
    for (char c : mask) {
      if (c != '0' && c != '1')
        throw std::runtime_error("frontier line has a bad forced mask: " + line);
      forced.push_back(c == '1');
    }
  }
  std::string extra;
  if (in >> extra)
    throw std::runtime_error("frontier line has trailing data: " + line);
  return SearchNode::from_path(n, ordinals, forced);
}

void write_frontier(std::ostream& out, const Frontier& frontier)
{
  out << "# degree=" << frontier.degree << " law_order=" << frontier.law_order << '\n';
  uLong crc = crc32(0L, Z_NULL, 0);
  for (const auto& node : frontier.nodes) {
    const std::string line = frontier_line(node) + '\n';
    crc = crc32(crc, reinterpret_cast<const Bytef*>(line.data()), static_cast<uInt>(line.size()));
    out << line;
  }
  char hex[16];
  std::snprintf(hex, sizeof hex, "%08lx", static_cast<unsigned long>(crc));
  out << "# crc32=" << hex << " nodes=" << frontier.nodes.size() << '\n';
}

Frontier read_frontier(std::istream& in)
{
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("frontier file is empty");
  Frontier f;
  {
    std::istringstream h(header);
    std::string hash, deg, order;
    h >> hash >> deg >> order;
    if (hash != "#" || deg.rfind("degree=", 0) != 0 || order.rfind("law_order=", 0) != 0)
      throw std::runtime_error("frontier header is malformed");
    f.degree = std::stoi(deg.substr(7));
    f.law_order = order.substr(10);
    if (f.degree < 3 || f.degree > kMaxDegree)
      throw std::runtime_error("frontier degree out of range");
    if (f.law_order != kLawOrderId)
      throw std::runtime_error("frontier was written with a different law order: " + f.law_order);
  }
  uLong crc = crc32(0L, Z_NULL, 0);
  std::string line;
  bool trailer = false;
  std::string trailer_crc;
  std::size_t trailer_nodes = 0;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    if (line[0] == '#') {
      std::istringstream t(line);
      std::string hash, c, nodes;
      t >> hash >> c >> nodes;
      if (c.rfind("crc32=", 0) != 0 || nodes.rfind("nodes=", 0) != 0)
        throw std::runtime_error("frontier trailer is malformed");
      trailer_crc = c.substr(6);
      trailer_nodes = std::stoul(nodes.substr(6));
      trailer = true;
      break;
    }
    const std::string with_nl = line + '\n';
    crc = crc32(crc, reinterpret_cast<const Bytef*>(with_nl.data()), static_cast<uInt>(with_nl.size()));
    lines.push_back(line);
  }
  if (!trailer)
    throw std::runtime_error("frontier file is truncated (no checksum trailer)");
  char hex[16];
  std::snprintf(hex, sizeof hex, "%08lx", static_cast<unsigned long>(crc));
  if (trailer_crc != hex || trailer_nodes != lines.size())
    throw std::runtime_error("frontier checksum mismatch");
  for (const auto& l : lines) {
    f.nodes.push_back(parse_frontier_line(f.degree, l));
    if (f.nodes.size() == 1)
      f.depth = f.nodes.front().depth;
    else if (f.nodes.back().depth != f.depth)
      throw std::runtime_error("frontier nodes have mixed depths");
  }
  return f;
}

void resume(const SearchNode& node, const LeafSink& sink, SearchOptions options, SearchStats* stats)
{
  SearchEngine engine(node.degree, options);
  engine.run(node, sink);
  if (stats)
    *stats += engine.stats();
}

SearchStats enumerate_mucds(int n, const EnumerateOptions& options, const WorkerLeafSink& sink)
{
  const int workers = std::max(options.workers, 1);
  const int depth = options.frontier_depth >= 0
                        ? options.frontier_depth
                        : default_frontier_depth(n, static_cast<std::size_t>(8) * workers, options.search);

  SearchStats total;
  std::vector<SearchNode> frontier;
  {
    SearchEngine head(n, options.search);
    head.collect(SearchNode::root(n), depth, [&](const SearchNode& node) { frontier.push_back(node); });
    total += head.stats();
  }

  std::atomic<std::size_t> next{0};
  std::vector<SearchStats> per_worker(workers);
  auto work = [&](int w) {
    SearchEngine engine(n, options.search);
    const LeafSink leaf = [&](std::span<const std::uint64_t> set) { sink(w, set); };
    for (std::size_t i = next++; i < frontier.size(); i = next++)
      engine.run(frontier[i], leaf);
    per_worker[w] = engine.stats();
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
    for (auto& th : pool)
      th.join();
  }
  for (const auto& s : per_worker)
    total += s;
  return total;
}

}  // namespace cdom
