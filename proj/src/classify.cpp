#include "cdom/classify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cdom/laws.hpp"

namespace cdom {

namespace {

void require_nonempty(const Domain& d)
{
  if (d.empty())
    throw std::invalid_argument("property of an empty domain");
}

// Every triple obeys some law whose position is in `positions` (bit mask).
bool laws_with_positions(const Domain& d, unsigned positions)
{
  require_nonempty(d);
  if (d.degree() < 3)
    return true;
  const auto& table = law_table(d.degree());
  std::uint16_t want = 0;
  for (int code = 0; code < 9; ++code)
    if ((positions >> (code % 3)) & 1u)
      want |= static_cast<std::uint16_t>(1u << code);
  for (int t = 0; t < table.triple_count(); ++t)
    if ((satisfied_codes(table.present_patterns(d.words(), t)) & want) == 0)
      return false;
  return true;
}

TreeTable::Mask n3_mask(const Domain& d)
{
  TreeTable::Mask have{};
  const auto& table = law_table(d.degree());
  for (int t = 0; t < table.triple_count(); ++t) {
    const std::uint16_t s = satisfied_codes(table.present_patterns(d.words(), t));
    for (int m = 0; m < 3; ++m)
      if ((s >> (m * 3 + 2)) & 1u) {
        const int bit = 3 * t + m;
        have[bit >> 6] |= std::uint64_t{1} << (bit & 63);
      }
  }
  return have;
}

bool sp_search(const Domain& d, bool stars_only)
{
  require_nonempty(d);
  const int n = d.degree();
  if (n < 3)
    return true;
  const auto& trees = tree_table(n);
  const auto have = n3_mask(d);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (stars_only && !trees.star(i))
      continue;
    const auto& req = trees.requirement(i);
    if ((req[0] & ~have[0]) == 0 && (req[1] & ~have[1]) == 0 && (req[2] & ~have[2]) == 0)
      return true;
  }
  return false;
}

}  // namespace

bool connected(const Domain& d)
{
  require_nonempty(d);
  const auto& table = perm_table(d.degree());
  const auto members = d.ranks();
  Domain seen(d.degree());
  std::vector<Rank> stack{members.front()};
  seen.insert(members.front());
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Rank r = stack.back();
    stack.pop_back();
    for (int j = 0; j + 1 < d.degree(); ++j) {
      const Rank s = table.adjacent_swap(r, j);
      if (d.contains(s) && !seen.contains(s)) {
        seen.insert(s);
        stack.push_back(s);
        ++reached;
      }
    }
  }
  return reached == members.size();
}

bool peak_pit(const Domain& d) { return laws_with_positions(d, 0b101); }
bool arrow_sp(const Domain& d) { return laws_with_positions(d, 0b100); }

std::size_t dual_intersection(const Domain& d) { return (d & dual(d)).size(); }
bool normal(const Domain& d) { return dual_intersection(d) > 0; }
bool symmetric(const Domain& d) { return dual(d) == d; }

bool self_dual(const Domain& d)
{
  require_nonempty(d);
  return canonical_form(d) == canonical_form(conjugate(d));
}

bool copious(const Domain& d)
{
  require_nonempty(d);
  if (d.degree() < 3)
    return false;
  const auto& table = law_table(d.degree());
  for (int t = 0; t < table.triple_count(); ++t)
    if (restriction_count(d, t) != 4)
      return false;
  return true;
}

bool ample(const Domain& d)
{
  require_nonempty(d);
  const auto& table = perm_table(d.degree());
  const int pairs = d.degree() * (d.degree() - 1) / 2;
  const std::uint64_t all = pairs == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pairs) - 1;
  std::uint64_t any = 0, every = all;
  for (Rank r : d.ranks()) {
    any |= table.inversion_bits(r);
    every &= table.inversion_bits(r);
  }
  return any == all && every == 0;
}

bool fixing(const Domain& d)
{
  require_nonempty(d);
  const auto& table = perm_table(d.degree());
  const auto members = d.ranks();
  for (int j = 0; j < d.degree(); ++j) {
    const int x = table.slot(members.front(), j);
    if (std::all_of(members.begin(), members.end(), [&](Rank r) { return table.slot(r, j) == x; }))
      return true;
  }
  return false;
}

bool reducible(const Domain& d)
{
  require_nonempty(d);
  const int n = d.degree();
  if (n < 3)
    return false;
  const auto& table = perm_table(n);
  // Subsets (as bit masks) that are position intervals in every order so far.
  std::vector<std::uint8_t> common(std::size_t{1} << n, 1);
  std::vector<std::uint8_t> here(common.size());
  for (Rank r : d.ranks()) {
    std::fill(here.begin(), here.end(), 0);
    for (int i = 0; i < n; ++i) {
      unsigned mask = 0;
      for (int j = i; j < n; ++j) {
        mask |= 1u << table.slot(r, j);
        here[mask] = 1;
      }
    }
    for (std::size_t m = 0; m < common.size(); ++m)
      common[m] &= here[m];
  }
  for (std::size_t m = 0; m < common.size(); ++m) {
    const int k = std::popcount(static_cast<unsigned>(m));
    if (k >= 2 && k <= n - 1 && common[m])
      return true;
  }
  return false;
}

bool usp(const Domain& d)
{
  require_nonempty(d);
  if (d.degree() < 2)
    return false;
  const auto& table = perm_table(d.degree());
  std::vector<unsigned> seconds(d.degree(), 0);
  for (Rank r : d.ranks())
    seconds[table.slot(r, 0)] |= 1u << table.slot(r, 1);
  return std::any_of(seconds.begin(), seconds.end(), [](unsigned s) { return std::popcount(s) == 1; });
}

bool nuspd(const Domain& d) { return !usp(d) && !usp(dual(d)); }
bool sp_on_tree(const Domain& d) { return sp_search(d, false); }
bool sp_on_star(const Domain& d) { return sp_search(d, true); }

bool boolean_intersection(const Domain& d)
{
  const Domain both = d & dual(d);
  if (both.empty())
    return false;
  const auto& table = perm_table(d.degree());
  const Domain moved = act(both, table.inverse(both.ranks().front()));
  std::vector<std::uint64_t> inv;
  for (Rank r : moved.ranks())
    inv.push_back(table.inversion_bits(r));
  auto below = [](std::uint64_t x, std::uint64_t y) { return (x & ~y) == 0; };
  // Atoms cover the identity, i.e. the empty inversion set.
  std::vector<std::uint64_t> atoms;
  for (std::uint64_t x : inv) {
    if (x == 0)
      continue;
    bool minimal = true;
    for (std::uint64_t y : inv)
      if (y != 0 && y != x && below(y, x))
        minimal = false;
    if (minimal)
      atoms.push_back(x);
  }
  if (atoms.size() >= 32 || inv.size() != (std::size_t{1} << atoms.size()))
    return false;
  std::vector<std::uint32_t> code(inv.size(), 0);
  std::vector<std::uint8_t> used(inv.size(), 0);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (below(atoms[a], inv[i]))
        code[i] |= 1u << a;
    if (used[code[i]]++)
      return false;
  }
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = 0; j < inv.size(); ++j)
      if (below(inv[i], inv[j]) != ((code[i] & ~code[j]) == 0))
        return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> prufer_tree(int n, std::span<const int> sequence)
{
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2)
    throw std::invalid_argument("Prüfer sequence must have length n-2");
  std::vector<int> degree(n, 1);
  for (int v : sequence) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("Prüfer label out of range");
    ++degree[v];
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1)
      ++leaf;
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    --degree[leaf];
    --degree[v];
  }
  int u = -1;
  for (int x = 0; x < n; ++x)
    if (degree[x] == 1) {
      if (u < 0) {
        u = x;
      } else {
        edges.emplace_back(u, x);
        break;
      }
    }
  return edges;
}

TreeTable::TreeTable(int n) : n_(n)
{
  if (n < 3 || n > kMaxDegree)
    throw std::invalid_argument("tree table needs 3 <= degree <= 8");
  const auto& laws = law_table(n);
  std::vector<int> seq(n - 2, 0);
  std::vector<int> dist(static_cast<std::size_t>(n) * n);
  while (true) {
    auto edges = prufer_tree(n, seq);
    // Floyd-Warshall is plenty at n <= 8.
    const int inf = n + 1;
    std::fill(dist.begin(), dist.end(), inf);
    for (int v = 0; v < n; ++v)
      dist[v * n + v] = 0;
    for (auto [a, b] : edges)
      dist[a * n + b] = dist[b * n + a] = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          dist[i * n + j] = std::min(dist[i * n + j], dist[i * n + k] + dist[k * n + j]);
    Mask req{};
    for (const auto& t : laws.triples()) {
      for (int m = 0; m < 3; ++m) {
        const int y = t.member(m), x = t.member((m + 1) % 3), z = t.member((m + 2) % 3);
        if (dist[x * n + y] + dist[y * n + z] == dist[x * n + z]) {
          const int bit = 3 * t.index + m;
          req[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        }
      }
    }
    masks_.push_back(req);
    star_.push_back(std::all_of(seq.begin(), seq.end(), [&](int v) { return v == seq.front(); }));
    edges_.push_back(std::move(edges));

    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1)
      seq[i--] = 0;
    if (i < 0)
      break;
    ++seq[i];
  }
}

const TreeTable& tree_table(int n)
{
  if (n < 3 || n > kMaxDegree)
    throw std::invalid_argument("tree table needs 3 <= degree <= 8");
  static std::array<std::once_flag, kMaxDegree + 1> flags;
  static std::array<std::unique_ptr<TreeTable>, kMaxDegree + 1> tables;
  std::call_once(flags[n], [n] { tables[n] = std::make_unique<TreeTable>(n); });
  return *tables[n];
}

// ---------------------------------------------------------------------------

namespace {

std::size_t core_order_of(const Domain& d)
{
  const auto& table = perm_table(d.degree());
  const auto members = d.ranks();
  std::size_t order = 0;
  for (Rank g : members)
    if (std::all_of(members.begin(), members.end(), [&](Rank s) { return d.contains(table.relabel(g, s)); }))
      ++order;
  return order;
}

ClassRecord record_for(const Domain& d, ClassKey key)
{
  ClassRecord rec;
  rec.key = std::move(key);
  rec.size = d.size();
  rec.core_order = core_order_of(d);
  rec.dual_intersection = dual_intersection(d);
  rec.connected = connected(d);
  rec.peak_pit = peak_pit(d);
  rec.normal = rec.dual_intersection > 0;
  rec.symmetric = rec.dual_intersection == rec.size;
  rec.self_dual = rec.key.reflexive;
  rec.copious = copious(d);
  rec.ample = ample(d);
  rec.fixing = fixing(d);
  rec.reducible = reducible(d);
  rec.arrow_sp = arrow_sp(d);
  rec.usp = usp(d);
  rec.nuspd = !rec.usp && !usp(dual(d));
  rec.sp_tree = sp_on_tree(d);
  rec.sp_star = rec.sp_tree && sp_on_star(d);
  rec.boolean_intersection = rec.normal && boolean_intersection(d);
  return rec;
}

}  // namespace

ClassRecord classify(const CanonicalForm& form)
{
  const Domain d = form.domain();
  ClassKey key;
  key.canonical = form;
  const CanonicalForm conj = canonical_form(conjugate(d));
  key.reflexive = conj == form;
  key.flip_canonical = std::max(form, conj);
  return record_for(d, std::move(key));
}

ClassRecord classify(const Domain& d)
{
  require_nonempty(d);
  ClassKey key = class_key(d);
  const Domain rep = key.canonical.domain();
  return record_for(rep, std::move(key));
}

SizeRow& SizeRow::operator+=(const SizeRow& o)
{
  total += o.total;
  connected += o.connected;
  peak_pit += o.peak_pit;
  normal += o.normal;
  self_dual += o.self_dual;
  symmetric += o.symmetric;
  non_ample += o.non_ample;
  reducible += o.reducible;
  copious += o.copious;
  usp += o.usp;
  nuspd += o.nuspd;
  sp_tree += o.sp_tree;
  sp_star += o.sp_star;
  fixing += o.fixing;
  arrow_sp += o.arrow_sp;
  return *this;
}

SizeRow DegreeReport::totals() const
{
  SizeRow sum;
  for (const auto& [size, row] : rows)
    sum += row;
  return sum;
}

void add_record(DegreeReport& report, const ClassRecord& r)
{
  if (report.degree == 0)
    report.degree = r.key.canonical.degree;
  else if (report.degree != r.key.canonical.degree)
    throw std::invalid_argument("classify over mixed degrees");
  auto& row = report.rows[r.size];
  row.total += 1;
  row.connected += r.connected;
  row.peak_pit += r.peak_pit;
  row.normal += r.normal;
  row.self_dual += r.self_dual;
  row.symmetric += r.symmetric;
  row.non_ample += !r.ample;
  row.reducible += r.reducible;
  row.copious += r.copious;
  row.usp += r.usp;
  row.nuspd += r.nuspd;
  row.sp_tree += r.sp_tree;
  row.sp_star += r.sp_star;
  row.fixing += r.fixing;
  row.arrow_sp += r.arrow_sp;
  report.intersections[{r.size, r.dual_intersection}] += 1;
  report.classes += 1;
  report.max_size = std::max(report.max_size, r.size);

  auto complain = [&](const std::string& what) {
    std::string ranks;
    for (Rank x : r.key.canonical.ranks)
      ranks += (ranks.empty() ? "" : " ") + std::to_string(x);
    report.violations.push_back(what + " (size " + std::to_string(r.size) + ", ranks " + ranks + ")");
  };
  const std::size_t di = r.dual_intersection;
  if (di != 0 && (di < 2 || !std::has_single_bit(di)))
    complain("dual intersection " + std::to_string(di) + " is not a power of two");
  if (r.normal && !r.boolean_intersection)
    complain("dual intersection is not a Boolean lattice");
  if (r.copious && !r.ample)
    complain("copious but not ample");
  if (r.symmetric && !r.self_dual)
    complain("symmetric but not self-dual");
  if (report.degree <= 6 && r.peak_pit != r.connected)
    complain(r.connected ? "connected but not peak-pit" : "peak-pit but not connected");
}

namespace {

void finish_moments(DegreeReport& report)
{
  const double k = static_cast<double>(report.classes);
  double mean = 0;
  for (const auto& [size, row] : report.rows)
    mean += static_cast<double>(size) * static_cast<double>(row.total);
  mean /= k;
  double m2 = 0, m3 = 0;
  for (const auto& [size, row] : report.rows) {
    const double dev = static_cast<double>(size) - mean;
    m2 += dev * dev * static_cast<double>(row.total);
    m3 += dev * dev * dev * static_cast<double>(row.total);
  }
  m2 /= k;
  m3 /= k;
  report.mean = mean;
  report.variance = m2;
  report.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0;
  const auto self_dual = report.totals().self_dual;
  report.flip_classes = (report.classes + self_dual) / 2;
}

}  // namespace

DegreeReport classify_all(std::span<const CanonicalForm> classes, int workers)
{
  if (classes.empty())
    throw std::invalid_argument("classify over no classes");
  const int degree = classes.front().degree;
  for (const auto& c : classes)
    if (c.degree != degree)
      throw std::invalid_argument("classify over mixed degrees");
  workers = std::max(1, workers);
  std::vector<std::vector<ClassRecord>> parts(workers);
  auto work = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < classes.size(); i += static_cast<std::size_t>(workers))
      parts[w].push_back(classify(classes[i]));
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
    for (auto& t : pool)
      t.join();
  }
  // Reduce in input order so violation lists are deterministic.
  DegreeReport report;
  report.degree = degree;
  std::vector<std::size_t> next(workers, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const int w = static_cast<int>(i % static_cast<std::size_t>(workers));
    add_record(report, parts[w][next[w]++]);
  }
  finish_moments(report);
  return report;
}

}  // namespace cdom
