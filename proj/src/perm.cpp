#include "cdom/perm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cdom {

std::uint64_t factorial(int n)
{
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::from_zero_based(std::vector<std::uint8_t> slots)
{
  const int n = static_cast<int>(slots.size());
  if (n < 1 || n > 20)
    throw std::invalid_argument("permutation degree out of range");
  std::vector<bool> seen(n, false);
  for (auto s : slots) {
    if (s >= n || seen[s])
      throw std::invalid_argument("slot sequence is not a permutation");
    seen[s] = true;
  }
  return Permutation(std::move(slots));
}

Permutation Permutation::from_one_based(std::span<const int> alternatives)
{
  std::vector<std::uint8_t> slots;
  slots.reserve(alternatives.size());
  for (int a : alternatives) {
    if (a < 1 || a > 255)
      throw std::invalid_argument("alternative out of range");
    slots.push_back(static_cast<std::uint8_t>(a - 1));
  }
  return from_zero_based(std::move(slots));
}

Permutation Permutation::from_one_based(std::initializer_list<int> alternatives)
{
  return from_one_based(std::span<const int>(alternatives.begin(), alternatives.size()));
}

Permutation Permutation::identity(int n)
{
  std::vector<std::uint8_t> s(n);
  std::iota(s.begin(), s.end(), std::uint8_t{0});
  return from_zero_based(std::move(s));
}

Permutation Permutation::reversal(int n)
{
  return identity(n).reversed();
}

int Permutation::position_of(int alternative) const
{
  auto it = std::find(slots_.begin(), slots_.end(), alternative);
  return static_cast<int>(it - slots_.begin());
}

Permutation Permutation::reversed() const
{
  return Permutation(std::vector<std::uint8_t>(slots_.rbegin(), slots_.rend()));
}

Permutation Permutation::inverse() const
{
  std::vector<std::uint8_t> inv(slots_.size());
  for (std::size_t j = 0; j < slots_.size(); ++j)
    inv[slots_[j]] = static_cast<std::uint8_t>(j);
  return Permutation(std::move(inv));
}

Permutation Permutation::relabeled(const Permutation& g) const
{
  if (g.degree() != degree())
    throw std::invalid_argument("degree mismatch");
  std::vector<std::uint8_t> out(slots_.size());
  for (std::size_t j = 0; j < slots_.size(); ++j)
    out[j] = g.slots_[slots_[j]];
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const
{
  std::string s;
  for (std::size_t j = 0; j < slots_.size(); ++j) {
    if (j)
      s += ' ';
    s += std::to_string(slots_[j] + 1);
  }
  return s;
}

Permutation product(const Permutation& g, const Permutation& h)
{
  // x(gh) = h(g(x)), which is h∘g as functions.
  return g.relabeled(h);
}

Rank rank(const Permutation& p)
{
  const int n = p.degree();
  if (n > 12)
    throw std::invalid_argument("degree too large to rank");
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int j = 0; j < n; ++j) {
    const int s = p.at(j);
    const int smaller_unused = std::popcount(~used & ((1u << s) - 1u));
    r += static_cast<std::uint64_t>(smaller_unused) * factorial(n - 1 - j);
    used |= 1u << s;
  }
  return static_cast<Rank>(r);
}

Permutation unrank(Rank r, int n)
{
  if (n < 1 || n > 12)
    throw std::invalid_argument("degree out of range");
  if (r >= factorial(n))
    throw std::out_of_range("rank out of range");
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint8_t> slots;
  slots.reserve(n);
  std::uint64_t rest = r;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t f = factorial(n - 1 - j);
    const auto k = static_cast<std::size_t>(rest / f);
    rest %= f;
    slots.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation::from_zero_based(std::move(slots));
}

std::vector<int> restrict_to(const Permutation& p, std::span<const int> alternatives)
{
  if (alternatives.empty())
    throw std::invalid_argument("restriction to an empty set of alternatives");
  std::uint64_t mask = 0;
  for (int a : alternatives) {
    if (a < 0 || a >= p.degree())
      throw std::invalid_argument("alternative out of range");
    mask |= std::uint64_t{1} << a;
  }
  std::vector<int> out;
  for (int j = 0; j < p.degree(); ++j)
    if ((mask >> p.at(j)) & 1u)
      out.push_back(p.at(j));
  return out;
}

// ---------------------------------------------------------------------------
// Inversions

int InversionSet::pair_index(int n, int i, int j)
{
  // Row-major over i<j.
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

int InversionSet::size() const
{
  return std::popcount(bits_);
}

InversionSet inversions(const Permutation& p)
{
  const int n = p.degree();
  std::uint64_t bits = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.position_of(a) > p.position_of(b))
        bits |= std::uint64_t{1} << InversionSet::pair_index(n, a, b);
  return {n, bits};
}

bool covers(const Permutation& lo, const Permutation& hi)
{
  if (lo.degree() != hi.degree())
    throw std::invalid_argument("degree mismatch");
  const auto a = inversions(lo);
  const auto b = inversions(hi);
  return a.subset_of(b) && b.size() == a.size() + 1;
}

// ---------------------------------------------------------------------------
// PermTable

PermTable::PermTable(int n) : n_(n)
{
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("degree out of table range");
  count_ = static_cast<Rank>(factorial(n));
  slots_.resize(static_cast<std::size_t>(count_) * n);
  positions_.resize(slots_.size());

  std::vector<std::uint8_t> cur(n);
  std::iota(cur.begin(), cur.end(), std::uint8_t{0});
  Rank r = 0;
  do {
    for (int j = 0; j < n; ++j) {
      slots_[r * n + j] = cur[j];
      positions_[r * n + cur[j]] = static_cast<std::uint8_t>(j);
    }
    ++r;
  } while (std::next_permutation(cur.begin(), cur.end()));

  inverse_.resize(count_);
  reversed_.resize(count_);
  swaps_.resize(static_cast<std::size_t>(count_) * std::max(n - 1, 0));
  inversion_counts_.resize(count_);
  inversion_bits_.resize(count_);
  std::vector<std::uint8_t> tmp(n);
  for (Rank q = 0; q < count_; ++q) {
    auto s = slots(q);
    for (int j = 0; j < n; ++j)
      tmp[s[j]] = static_cast<std::uint8_t>(j);
    inverse_[q] = rank_of(tmp);
    std::reverse_copy(s.begin(), s.end(), tmp.begin());
    reversed_[q] = rank_of(tmp);
    for (int j = 0; j + 1 < n; ++j) {
      std::copy(s.begin(), s.end(), tmp.begin());
      std::swap(tmp[j], tmp[j + 1]);
      swaps_[q * (n - 1) + j] = rank_of(tmp);
    }
    std::uint64_t bits = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (positions_[q * n + a] > positions_[q * n + b])
          bits |= std::uint64_t{1} << InversionSet::pair_index(n, a, b);
    inversion_bits_[q] = bits;
    inversion_counts_[q] = static_cast<std::uint8_t>(std::popcount(bits));
  }

  if (n <= 7) {
    relabel_.resize(static_cast<std::size_t>(count_) * count_);
    for (Rank g = 0; g < count_; ++g) {
      auto gs = slots(g);
      for (Rank q = 0; q < count_; ++q) {
        auto s = slots(q);
        for (int j = 0; j < n; ++j)
          tmp[j] = gs[s[j]];
        relabel_[static_cast<std::size_t>(g) * count_ + q] = static_cast<std::uint16_t>(rank_of(tmp));
      }
    }
  }
}

Rank PermTable::rank_of(std::span<const std::uint8_t> s) const
{
  Rank r = 0;
  std::uint32_t used = 0;
  Rank f = count_;
  for (int j = 0; j < n_; ++j) {
    f /= static_cast<Rank>(n_ - j);
    const int smaller_unused = std::popcount(~used & ((1u << s[j]) - 1u));
    r += static_cast<Rank>(smaller_unused) * f;
    used |= 1u << s[j];
  }
  return r;
}

Rank PermTable::relabel(Rank g, Rank sigma) const
{
  if (!relabel_.empty())
    return relabel_[static_cast<std::size_t>(g) * count_ + sigma];
  std::array<std::uint8_t, kMaxDegree> tmp{};
  auto gs = slots(g);
  auto s = slots(sigma);
  for (int j = 0; j < n_; ++j)
    tmp[j] = gs[s[j]];
  return rank_of({tmp.data(), static_cast<std::size_t>(n_)});
}

const PermTable& perm_table(int n)
{
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("degree out of table range");
  static std::array<std::once_flag, kMaxDegree + 1> flags;
  static std::array<std::unique_ptr<PermTable>, kMaxDegree + 1> tables;
  std::call_once(flags[n], [n] { tables[n] = std::make_unique<PermTable>(n); });
  return *tables[n];
}

// ---------------------------------------------------------------------------
// Domain

Domain::Domain(int n) : degree_(n)
{
  universe_ = perm_table(n).count();
  words_.assign((universe_ + 63) / 64, 0);
}

Domain Domain::full(int n)
{
  Domain d(n);
  for (Rank r = 0; r < d.universe_; ++r)
    d.insert(r);
  return d;
}

Domain Domain::from_ranks(int n, std::span<const Rank> ranks)
{
  Domain d(n);
  for (Rank r : ranks) {
    if (r >= d.universe_)
      throw std::out_of_range("rank out of range");
    d.insert(r);
  }
  return d;
}

Domain Domain::from_permutations(int n, std::span<const Permutation> perms)
{
  Domain d(n);
  for (const auto& p : perms) {
    if (p.degree() != n)
      throw std::invalid_argument("degree mismatch");
    d.insert(rank(p));
  }
  return d;
}

Domain Domain::from_words(int n, std::vector<std::uint64_t> words)
{
  Domain d(n);
  if (words.size() != d.words_.size())
    throw std::invalid_argument("word count mismatch");
  d.words_ = std::move(words);
  return d;
}

bool Domain::contains(const Permutation& p) const
{
  if (p.degree() != degree_)
    throw std::invalid_argument("degree mismatch");
  return contains(rank(p));
}

std::size_t Domain::size() const
{
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Domain::empty() const
{
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Rank> Domain::ranks() const
{
  std::vector<Rank> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Rank>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Permutation> Domain::permutations() const
{
  std::vector<Permutation> out;
  for (Rank r : ranks())
    out.push_back(unrank(r, degree_));
  return out;
}

void Domain::check_same_degree(const Domain& other) const
{
  if (other.degree_ != degree_)
    throw std::invalid_argument("degree mismatch");
}

bool Domain::subset_of(const Domain& other) const
{
  check_same_degree(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

Domain& Domain::operator&=(const Domain& other)
{
  check_same_degree(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

Domain& Domain::operator|=(const Domain& other)
{
  check_same_degree(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

Domain act(const Domain& d, Rank g)
{
  const auto& t = perm_table(d.degree());
  Domain out(d.degree());
  for (Rank r : d.ranks())
    out.insert(t.relabel(g, r));
  return out;
}

Domain act(const Domain& d, const Permutation& g)
{
  if (g.degree() != d.degree())
    throw std::invalid_argument("degree mismatch");
  return act(d, rank(g));
}

}  // namespace cdom
