#include <doctest.h>

#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "cdom/canon.hpp"
#include "cdom/oracle.hpp"
#include "cdom/search.hpp"
#include "support.hpp"

using namespace cdom;

namespace {

using Leaves = std::multiset<std::vector<std::uint64_t>>;

Leaves leaves_of(int n, SearchOptions opt, SearchStats* stats = nullptr)
{
  Leaves out;
  resume(SearchNode::root(n), [&](std::span<const std::uint64_t> w) { out.emplace(w.begin(), w.end()); }, opt, stats);
  return out;
}

std::set<CanonicalForm> classes_of(int n, const Leaves& leaves)
{
  std::set<CanonicalForm> out;
  for (const auto& w : leaves)
    out.insert(canonical_form(Domain::from_words(n, w)));
  return out;
}

// Reference walk written with the node-level operations only.
void slow_walk(const SearchNode& node, const SearchOptions& opt, Leaves& out)
{
  const int triples = law_table(node.degree).triple_count();
  if (node.depth == triples) {
    out.insert(node.current.words());
    return;
  }
  if (opt.force) {
    if (auto law = forced_law(node)) {
      slow_walk(descend(node, *law, true), opt, out);
      return;
    }
  }
  for (int o = 0; o < 6; ++o) {
    SearchNode child = descend(node, Law::from_ordinal(node.depth, o));
    if (opt.prune && prune_by_precedence(child))
      continue;
    if (opt.maximality && !is_t_mucd(child))
      continue;
    slow_walk(child, opt, out);
  }
}

}  // namespace

TEST_CASE("the engine matches a walk built from node operations")
{
  for (int n = 3; n <= 5; ++n)
    for (bool prune : {false, true})
      for (bool force : {false, true}) {
        if (n == 5 && !force)
          continue;  // slow and covered at n = 4
        SearchOptions opt;
        opt.prune = prune;
        opt.force = force;
        Leaves slow;
        slow_walk(SearchNode::root(n), opt, slow);
        CHECK(leaves_of(n, opt) == slow);
      }
}

TEST_CASE("every leaf is a maximal CD containing the identity")
{
  for (int n = 3; n <= 5; ++n) {
    const Leaves leaves = leaves_of(n, {});
    CHECK_FALSE(leaves.empty());
    std::size_t i = 0;
    for (const auto& w : leaves) {
      const Domain d = Domain::from_words(n, w);
      CHECK(d.unitary());
      CHECK(is_cd_latin(d));
      if (n <= 4 || i++ % 37 == 0)
        CHECK(is_maximal_cd(d));
    }
  }
}

TEST_CASE("class counts of small degrees")
{
  CHECK(test::classes(3).size() == 3);
  CHECK(test::classes(4).size() == 31);
  CHECK(test::classes(5).size() == 1362);
}

TEST_CASE("precedence pruning")
{
  SearchOptions on, off;
  on.prune = true;
  SearchStats s_on, s_off;
  CHECK(classes_of(4, leaves_of(4, on, &s_on)) == classes_of(4, leaves_of(4, off, &s_off)));
  CHECK(s_on.nodes <= s_off.nodes);

  SearchStats f_on, f_off;
  leaves_of(5, on, &f_on);
  leaves_of(5, off, &f_off);
  CHECK(f_on.nodes < f_off.nodes);
  CHECK(f_on.pruned > 0);
  CHECK(f_off.pruned == 0);
}

TEST_CASE("forced steps do not change the leaves reached at degree 4")
{
  SearchOptions no_force;
  no_force.force = false;
  CHECK(classes_of(4, leaves_of(4, no_force)) == classes_of(4, leaves_of(4, {})));
}

TEST_CASE("node operations")
{
  SearchNode root = SearchNode::root(4);
  CHECK(root.current == Domain::full(4));
  const Law l = Law::from_ordinal(0, 2);
  SearchNode child = descend(root, l);
  CHECK(child.depth == 1);
  CHECK(child.current == principal_set(l, 4));
  CHECK(child.ordinals() == std::vector<int>{2});
  CHECK(is_t_mucd(child));
  CHECK_THROWS_AS(descend(root, Law::from_ordinal(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(descend(root, Law::from_code(0, 0)), std::invalid_argument);

  // On triple 0 the laws of the principal set of bN1 say nothing about
  // triple 1, so no law is forced there.
  CHECK_FALSE(forced_law(child).has_value());

  const std::vector<int> path = {2, 0};
  const SearchNode rebuilt = SearchNode::from_path(4, path, {false, false});
  CHECK(rebuilt.current == (principal_set(l, 4) & principal_set(Law::from_ordinal(1, 0), 4)));
  CHECK_THROWS_AS(SearchNode::from_path(4, path, {false}), std::invalid_argument);
}

TEST_CASE("precedence looks for an earlier law on every unforced step")
{
  const SearchNode root = SearchNode::root(4);
  auto earlier = [](const SearchNode& node, int step) {
    for (const auto& x : satisfied_laws(node.current, step))
      if (x.ordinal() >= 0 && x.ordinal() < node.applied[step].ordinal())
        return true;
    return false;
  };
  int hits = 0;
  for (int path = 0; path < 6 * 6 * 6 * 6; ++path)
    for (bool forced0 : {false, true}) {
      SearchNode node = root;
      for (int s = 0, p = path; s < 4; ++s, p /= 6)
        node = descend(node, Law::from_ordinal(s, p % 6), s == 0 && forced0);
      bool expect = false;
      for (int s = forced0 ? 1 : 0; s < 4; ++s)
        expect |= earlier(node, s);
      CHECK(prune_by_precedence(node) == expect);
      hits += expect;
    }
  CHECK(hits > 0);
}

TEST_CASE("frontier split covers the tree")
{
  const Leaves all = leaves_of(5, {});
  for (int depth : {0, 2, 3, 5}) {
    const Frontier f = split_frontier(5, depth);
    CHECK(f.depth == depth);
    Leaves merged;
    for (const auto& node : f.nodes) {
      CHECK(node.depth == depth);
      resume(node, [&](std::span<const std::uint64_t> w) { merged.emplace(w.begin(), w.end()); });
    }
    CHECK(merged == all);
  }
  CHECK(split_frontier(5, 0).nodes.size() == 1);
  CHECK_THROWS_AS(split_frontier(5, 11), std::invalid_argument);
  const int d = default_frontier_depth(5, 64);
  CHECK(split_frontier(5, d).nodes.size() >= 64);
}

TEST_CASE("frontier files round trip and reject corruption")
{
  const Frontier f = split_frontier(5, 3);
  std::ostringstream out;
  write_frontier(out, f);
  const std::string text = out.str();
  {
    std::istringstream in(text);
    const Frontier g = read_frontier(in);
    CHECK(g.degree == 5);
    CHECK(g.depth == 3);
    REQUIRE(g.nodes.size() == f.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      CHECK(g.nodes[i].current == f.nodes[i].current);
      CHECK(g.nodes[i].ordinals() == f.nodes[i].ordinals());
      CHECK(g.nodes[i].forced == f.nodes[i].forced);
    }
  }
  {
    // Flip one law ordinal on the first node line.
    std::string bad = text;
    const auto nl = bad.find('\n');
    bad[nl + 3] = bad[nl + 3] == '0' ? '1' : '0';
    std::istringstream in(bad);
    CHECK_THROWS_WITH_AS(read_frontier(in), "frontier checksum mismatch", std::runtime_error);
  }
  {
    std::istringstream in(text.substr(0, text.rfind("# crc32")));
    CHECK_THROWS_AS(read_frontier(in), std::runtime_error);
  }
  {
    std::string other = text;
    other.replace(other.find("law_order=") + 10, 3, "xyz");
    std::istringstream in(other);
    CHECK_THROWS_AS(read_frontier(in), std::runtime_error);
  }
  {
    std::istringstream in("");
    CHECK_THROWS_AS(read_frontier(in), std::runtime_error);
  }
  CHECK_THROWS_AS(parse_frontier_line(5, "2 0"), std::runtime_error);
  CHECK_THROWS_AS(parse_frontier_line(5, "1 9 0"), std::runtime_error);
  CHECK_THROWS_AS(parse_frontier_line(5, "1 0 2"), std::runtime_error);
  CHECK(frontier_line(SearchNode::root(5)) == "0");
}

TEST_CASE("the emitted leaves do not depend on the worker count")
{
  std::map<int, Leaves> by_workers;
  for (int workers : {1, 3, 4}) {
    EnumerateOptions opt;
    opt.workers = workers;
    opt.frontier_depth = 3;
    std::mutex m;
    Leaves leaves;
    const SearchStats stats = enumerate_mucds(5, opt, [&](int w, std::span<const std::uint64_t> set) {
      CHECK(w < workers);
      std::lock_guard lock(m);
      leaves.emplace(set.begin(), set.end());
    });
    CHECK(stats.leaves == leaves.size());
    by_workers[workers] = std::move(leaves);
  }
  CHECK(by_workers[1] == by_workers[3]);
  CHECK(by_workers[1] == by_workers[4]);
}
