#include "cdom/canon.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <queue>
#include <stdexcept>
#include <unistd.h>

#include "cdom/laws.hpp"

namespace cdom {

std::vector<Rank> canonical_ranks(int n, std::span<const Rank> ranks)
{
  if (ranks.empty())
    throw std::invalid_argument("canonical form of an empty domain");
  const auto& table = perm_table(n);
  const std::size_t words = (table.count() + 63) / 64;
  // Candidates are compared as bit sets: of two equal-size sets, the one
  // with the larger ascending rank list is the one missing the least element
  // of the symmetric difference.
  thread_local std::vector<std::uint64_t> best, cand;
  best.assign(words, 0);
  cand.assign(words, 0);
  bool have_best = false;
  for (Rank g : ranks) {
    const Rank ginv = table.inverse(g);
    std::fill(cand.begin(), cand.end(), 0);
    for (Rank r : ranks) {
      const Rank x = table.relabel(ginv, r);
      cand[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    bool better = !have_best;
    if (have_best) {
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t diff = cand[w] ^ best[w];
        if (diff) {
          better = (best[w] & diff & (~diff + 1)) != 0;
          break;
        }
      }
    }
    if (better) {
      best.swap(cand);
      have_best = true;
    }
  }
  std::vector<Rank> out;
  out.reserve(ranks.size());
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = best[w];
    while (bits) {
      out.push_back(static_cast<Rank>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

CanonicalForm canonical_form(const Domain& d)
{
  const auto r = d.ranks();
  return {d.degree(), canonical_ranks(d.degree(), r)};
}

Domain unitarize(const Domain& d)
{
  if (d.empty())
    throw std::invalid_argument("unitarize an empty domain");
  const auto r = d.ranks();
  return act(d, perm_table(d.degree()).inverse(r.front()));
}

namespace {

// Sorted restriction-count profile over all triples; relabeling permutes
// triples, so this is invariant under isomorphism.
std::vector<int> restriction_profile(const Domain& d)
{
  std::vector<int> profile;
  if (d.degree() < 3)
    return profile;
  const auto& table = law_table(d.degree());
  for (int t = 0; t < table.triple_count(); ++t)
    profile.push_back(restriction_count(d, t));
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace

bool isomorphic(const Domain& a, const Domain& b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
  if (a.empty() || b.empty())
    throw std::invalid_argument("isomorphism test on an empty domain");
  if (a.size() != b.size())
    return false;
  if (restriction_profile(a) != restriction_profile(b))
    return false;
  const Domain a1 = unitarize(a);
  const Domain b1 = unitarize(b);
  const auto& table = perm_table(a.degree());
  for (Rank g : a1.ranks())
    if (act(a1, table.inverse(g)) == b1)
      return true;
  return false;
}

Domain dual(const Domain& d)
{
  const auto& table = perm_table(d.degree());
  Domain out(d.degree());
  for (Rank r : d.ranks())
    out.insert(table.reversed(r));
  return out;
}

Domain conjugate(const Domain& d)
{
  const auto& table = perm_table(d.degree());
  const Rank u = table.count() - 1;
  Domain out(d.degree());
  for (Rank r : d.ranks())
    out.insert(table.relabel(u, table.reversed(r)));
  return out;
}

Domain core(const Domain& d)
{
  if (!d.unitary())
    throw std::invalid_argument("core of a non-unitary domain");
  Domain out(d.degree());
  for (Rank g : d.ranks())
    if (act(d, g) == d)
      out.insert(g);
  return out;
}

ClassKey class_key(const Domain& d)
{
  ClassKey key;
  key.canonical = canonical_form(d);
  const CanonicalForm conj = canonical_form(conjugate(d));
  key.reflexive = conj == key.canonical;
  key.flip_canonical = std::max(key.canonical, conj);
  return key;
}

std::vector<ClassKey> dedup(std::span<const Domain> leaves)
{
  std::map<CanonicalForm, ClassKey> seen;
  int degree = -1;
  for (const auto& leaf : leaves) {
    if (degree < 0)
      degree = leaf.degree();
    else if (leaf.degree() != degree)
      throw std::invalid_argument("dedup over mixed degrees");
    CanonicalForm cf = canonical_form(leaf);
    if (seen.count(cf))
      continue;
    seen.emplace(cf, class_key(cf.domain()));
  }
  std::vector<ClassKey> out;
  out.reserve(seen.size());
  for (auto& [cf, key] : seen)
    out.push_back(std::move(key));
  return out;
}

std::size_t flip_class_count(std::span<const ClassKey> keys)
{
  std::set<CanonicalForm> flips;
  for (const auto& k : keys)
    flips.insert(k.flip_canonical);
  return flips.size();
}

// ---------------------------------------------------------------------------
// ClassCollector

namespace {

std::atomic<unsigned> spill_counter{0};

}  // namespace

bool read_rank_record(std::istream& in, std::vector<Rank>& out)
{
  std::uint16_t len = 0;
  if (!in.read(reinterpret_cast<char*>(&len), sizeof len))
    return false;
  std::vector<std::uint16_t> buf(len);
  if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(len * sizeof(std::uint16_t))))
    throw std::runtime_error("truncated rank record");
  out.assign(buf.begin(), buf.end());
  return true;
}

void write_rank_record(std::ostream& out, std::span<const Rank> ranks)
{
  const auto len = static_cast<std::uint16_t>(ranks.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  std::vector<std::uint16_t> buf(ranks.begin(), ranks.end());
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(std::uint16_t)));
}

ClassCollector::ClassCollector(int n, std::size_t memory_limit, std::filesystem::path spill_dir)
    : n_(n), memory_limit_(memory_limit), spill_dir_(std::move(spill_dir))
{
  if (spill_dir_.empty())
    spill_dir_ = std::filesystem::temp_directory_path();
}

ClassCollector::ClassCollector(ClassCollector&&) noexcept = default;
ClassCollector& ClassCollector::operator=(ClassCollector&&) noexcept = default;

ClassCollector::~ClassCollector()
{
  for (const auto& p : runs_) {
    std::error_code ec;
    std::filesystem::remove(p, ec);
  }
}

void ClassCollector::add_leaf(std::span<const std::uint64_t> words)
{
  scratch_.clear();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    while (w) {
      scratch_.push_back(static_cast<Rank>(i * 64 + static_cast<unsigned>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  add_canonical(canonical_ranks(n_, scratch_));
}

void ClassCollector::add_canonical(std::vector<Rank> ranks)
{
  memory_.insert(std::move(ranks));
  if (memory_limit_ && memory_.size() > memory_limit_)
    spill();
}

void ClassCollector::spill()
{
  if (memory_.empty())
    return;
  auto path = spill_dir_ / ("cdom-run-" + std::to_string(::getpid()) + "-" + std::to_string(spill_counter++) + ".bin");
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write spill run " + path.string());
  for (const auto& e : memory_)
    write_rank_record(out, e);
  if (!out)
    throw std::runtime_error("failed writing spill run " + path.string());
  memory_.clear();
  runs_.push_back(std::move(path));
}

void ClassCollector::merge(ClassCollector&& other)
{
  if (other.n_ != n_)
    throw std::invalid_argument("merging collectors of different degrees");
  if (memory_.empty() && runs_.empty()) {
    memory_.swap(other.memory_);
  } else {
    memory_.merge(other.memory_);
  }
  runs_.insert(runs_.end(), other.runs_.begin(), other.runs_.end());
  other.runs_.clear();
  other.memory_.clear();
  if (memory_limit_ && memory_.size() > memory_limit_)
    spill();
}

void ClassCollector::finish(const std::function<void(const std::vector<Rank>&)>& visit)
{
  if (runs_.empty()) {
    for (const auto& e : memory_)
      visit(e);
    memory_.clear();
    return;
  }
  spill();
  struct Head {
    std::vector<Rank> value;
    std::size_t run;
    bool operator>(const Head& o) const { return value > o.value; }
  };
  std::vector<std::ifstream> ins;
  for (const auto& p : runs_)
    ins.emplace_back(p, std::ios::binary);
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heap;
  for (std::size_t i = 0; i < ins.size(); ++i) {
    Head h{{}, i};
    if (read_rank_record(ins[i], h.value))
      heap.push(std::move(h));
  }
  std::vector<Rank> last;
  bool have_last = false;
  while (!heap.empty()) {
    Head h = heap.top();
    heap.pop();
    if (!have_last || h.value != last) {
      visit(h.value);
      last = h.value;
      have_last = true;
    }
    if (read_rank_record(ins[h.run], h.value))
      heap.push(std::move(h));
  }
  ins.clear();
  for (const auto& p : runs_) {
    std::error_code ec;
    std::filesystem::remove(p, ec);
  }
  runs_.clear();
}

std::vector<CanonicalForm> ClassCollector::finish()
{
  std::vector<CanonicalForm> out;
  finish([&](const std::vector<Rank>& r) { out.push_back({n_, r}); });
  return out;
}

}  // namespace cdom
