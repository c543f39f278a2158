#include "cdom/oracle.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <set>
#include <stdexcept>

#include "cdom/laws.hpp"

namespace cdom {

namespace {

// Order type of (a, b, c) in permutation r as a 3-permutation code in 0..5,
// derived straight from positions. Codes 0, 3, 4 are the even rotations of
// abc, codes 1, 2, 5 the odd ones.
int order_type(const PermTable& table, Rank r, int a, int b, int c)
{
  const int pa = table.position_of(r, a), pb = table.position_of(r, b), pc = table.position_of(r, c);
  if (pa < pb) {
    if (pb < pc) return 0;  // a b c
    return pa < pc ? 1 : 4;  // a c b | c a b
  }
  if (pa < pc) return 2;  // b a c
  return pb < pc ? 3 : 5;  // b c a | c b a
}

constexpr unsigned kEven = (1u << 0) | (1u << 3) | (1u << 4);
constexpr unsigned kOdd = (1u << 1) | (1u << 2) | (1u << 5);

bool latin(unsigned types) { return (types & kEven) == kEven || (types & kOdd) == kOdd; }

}  // namespace

bool is_cd_latin(const Domain& d)
{
  const int n = d.degree();
  if (n < 3)
    return true;
  const auto& table = perm_table(n);
  const auto members = d.ranks();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        unsigned types = 0;
        for (Rank r : members)
          types |= 1u << order_type(table, r, a, b, c);
        if (latin(types))
          return false;
      }
  return true;
}

bool is_maximal_cd(const Domain& d)
{
  const int n = d.degree();
  if (n < 3)
    return d == Domain::full(n);
  if (!is_cd(d))
    return false;
  const auto& table = law_table(n);
  const int T = table.triple_count();
  std::vector<std::uint8_t> present(T);
  for (int t = 0; t < T; ++t)
    present[t] = table.present_patterns(d.words(), t);
  for (Rank r = 0; r < d.universe(); ++r) {
    if (d.contains(r))
      continue;
    bool still_cd = true;
    for (int t = 0; t < T && still_cd; ++t)
      still_cd = satisfied_codes(static_cast<std::uint8_t>(present[t] | (1u << table.pattern(r, t)))) != 0;
    if (still_cd)
      return false;
  }
  return true;
}

namespace {

class BruteForce {
public:
  explicit BruteForce(int n) : n_(n), table_(perm_table(n)), count_(table_.count()), words_((count_ + 63) / 64)
  {
    // third_[x * count + y] = set of z with {x, y, z} a Latin triple.
    third_.assign(static_cast<std::size_t>(count_) * count_ * words_, 0);
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          triples.push_back({a, b, c});
    std::vector<std::vector<int>> types(count_);
    for (Rank r = 0; r < count_; ++r)
      for (const auto& t : triples)
        types[r].push_back(order_type(table_, r, t[0], t[1], t[2]));
    for (Rank x = 0; x < count_; ++x)
      for (Rank y = x + 1; y < count_; ++y)
        for (Rank z = y + 1; z < count_; ++z) {
          bool bad = false;
          for (std::size_t t = 0; t < triples.size() && !bad; ++t)
            bad = latin((1u << types[x][t]) | (1u << types[y][t]) | (1u << types[z][t]));
          if (!bad)
            continue;
          set_bit(x, y, z);
          set_bit(x, z, y);
          set_bit(y, z, x);
        }
    blocked_.assign(count_, 0);
    chosen_.assign(words_, 0);
  }

  std::vector<Domain> run()
  {
    include(0);
    excluded_.clear();
    descend(1);
    return std::move(found_);
  }

private:
  void set_bit(Rank x, Rank y, Rank z)
  {
    auto* a = row(x, y);
    auto* b = row(y, x);
    a[z >> 6] |= std::uint64_t{1} << (z & 63);
    b[z >> 6] |= std::uint64_t{1} << (z & 63);
  }
  std::uint64_t* row(Rank x, Rank y) { return &third_[(static_cast<std::size_t>(x) * count_ + y) * words_]; }
  bool chosen(Rank r) const { return (chosen_[r >> 6] >> (r & 63)) & 1u; }

  void include(Rank x)
  {
    for (Rank y : members_) {
      const auto* z = row(x, y);
      for (Rank r = 0; r < count_; ++r)
        if ((z[r >> 6] >> (r & 63)) & 1u)
          ++blocked_[r];
    }
    members_.push_back(x);
    chosen_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }

  void exclude_last()
  {
    const Rank x = members_.back();
    members_.pop_back();
    chosen_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    for (Rank y : members_) {
      const auto* z = row(x, y);
      for (Rank r = 0; r < count_; ++r)
        if ((z[r >> 6] >> (r & 63)) & 1u)
          --blocked_[r];
    }
  }

  // Can excluded, currently unblocked v still be blocked using members and
  // candidates from `next` on? Two members would already block it, so one
  // partner comes from the future.
  bool can_block(Rank v, Rank next)
  {
    auto available = [&](Rank r) { return chosen(r) || (r >= next && !blocked_[r]); };
    for (Rank q = 0; q < count_; ++q) {
      if (!available(q))
        continue;
      const auto* z = row(v, q);
      for (Rank r = std::max(next, q + 1); r < count_; ++r)
        if (((z[r >> 6] >> (r & 63)) & 1u) && available(r))
          return true;
    }
    return false;
  }

  void descend(Rank i)
  {
    for (Rank v : excluded_)
      if (!blocked_[v] && !can_block(v, i))
        return;
    if (i == count_) {
      Domain d(n_);
      for (Rank r : members_)
        d.insert(r);
      found_.push_back(std::move(d));
      return;
    }
    if (blocked_[i]) {
      descend(i + 1);
      return;
    }
    include(i);
    descend(i + 1);
    exclude_last();
    excluded_.push_back(i);
    descend(i + 1);
    excluded_.pop_back();
  }

  int n_;
  const PermTable& table_;
  Rank count_;
  std::size_t words_;
  std::vector<std::uint64_t> third_;
  std::vector<int> blocked_;
  std::vector<std::uint64_t> chosen_;
  std::vector<Rank> members_;
  std::vector<Rank> excluded_;
  std::vector<Domain> found_;
};

}  // namespace

std::vector<Domain> brute_force_mucds(int n)
{
  if (n < 3 || n > 5)
    throw std::invalid_argument("brute-force oracle supports degrees 3 to 5");
  return BruteForce(n).run();
}

std::vector<CanonicalForm> class_set(const std::vector<Domain>& domains)
{
  std::set<CanonicalForm> seen;
  for (const auto& d : domains)
    seen.insert(canonical_form(d));
  return {seen.begin(), seen.end()};
}

ClassDiff compare_classes(const std::vector<CanonicalForm>& expected, const std::vector<CanonicalForm>& actual)
{
  ClassDiff diff;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(diff.missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(diff.extra));
  return diff;
}

}  // namespace cdom
