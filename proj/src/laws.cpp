#include "cdom/laws.hpp"

#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cdom {

namespace {

// Order of a b c at each position for the 6 patterns.
constexpr std::array<std::array<int, 3>, kPatterns> kPatternSlots = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

std::uint8_t pattern_index(int first, int second)
{
  for (int k = 0; k < kPatterns; ++k)
    if (kPatternSlots[k][0] == first && kPatternSlots[k][1] == second)
      return static_cast<std::uint8_t>(k);
  return 0;
}

}  // namespace

int Law::ordinal() const
{
  for (int o = 0; o < 6; ++o)
    if (kOrdinalToCode[o] == code())
      return o;
  return -1;
}

Law Law::from_ordinal(int triple, int ordinal)
{
  if (ordinal < 0 || ordinal >= 6)
    throw std::out_of_range("law ordinal out of range");
  return from_code(triple, kOrdinalToCode[ordinal]);
}

std::uint8_t forbidden_patterns(int law_code)
{
  const int member = law_code / 3;
  const int position = law_code % 3;
  std::uint8_t mask = 0;
  for (int k = 0; k < kPatterns; ++k)
    if (kPatternSlots[k][position] == member)
      mask |= static_cast<std::uint8_t>(1u << k);
  return mask;
}

std::uint16_t satisfied_codes(std::uint8_t present)
{
  std::uint16_t out = 0;
  for (int code = 0; code < 9; ++code)
    if ((forbidden_patterns(code) & present) == 0)
      out |= static_cast<std::uint16_t>(1u << code);
  return out;
}

// ---------------------------------------------------------------------------

LawTable::LawTable(int n) : n_(n)
{
  if (n < 3 || n > kMaxDegree)
    throw std::invalid_argument("law table needs 3 <= degree <= 8");
  const auto& pt = perm_table(n);
  const Rank count = pt.count();
  words_ = (count + 63) / 64;

  triple_lookup_.assign(static_cast<std::size_t>(n) * n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int idx = static_cast<int>(triples_.size());
        triples_.push_back({a, b, c, idx});
        const std::array<int, 3> m = {a, b, c};
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
              if (x != y && y != z && x != z)
                triple_lookup_[(m[x] * n + m[y]) * n + m[z]] = idx;
      }

  const std::size_t T = triples_.size();
  patterns_.resize(static_cast<std::size_t>(count) * T);
  pattern_sets_.assign(T * kPatterns * words_, 0);
  for (Rank r = 0; r < count; ++r) {
    for (const auto& tr : triples_) {
      const std::array<int, 3> pos = {pt.position_of(r, tr.a), pt.position_of(r, tr.b), pt.position_of(r, tr.c)};
      // members sorted by position
      int first = 0, second = 0;
      for (int m = 0; m < 3; ++m) {
        int before = 0;
        for (int o = 0; o < 3; ++o)
          before += pos[o] < pos[m];
        if (before == 0)
          first = m;
        else if (before == 1)
          second = m;
      }
      const std::uint8_t k = pattern_index(first, second);
      patterns_[static_cast<std::size_t>(r) * T + tr.index] = k;
      pattern_sets_[(tr.index * kPatterns + k) * words_ + (r >> 6)] |= std::uint64_t{1} << (r & 63);
    }
  }

  pattern_unions_.assign(T * 64 * words_, 0);
  for (std::size_t t = 0; t < T; ++t)
    for (int allowed = 0; allowed < 64; ++allowed) {
      auto* dst = &pattern_unions_[(t * 64 + allowed) * words_];
      for (int k = 0; k < kPatterns; ++k)
        if ((allowed >> k) & 1)
          for (std::size_t w = 0; w < words_; ++w)
            dst[w] |= pattern_sets_[(t * kPatterns + k) * words_ + w];
    }

  principal_sets_.assign(T * 9 * words_, 0);
  for (std::size_t t = 0; t < T; ++t)
    for (int code = 0; code < 9; ++code) {
      const std::uint8_t allowed = static_cast<std::uint8_t>(~forbidden_patterns(code) & 0x3f);
      const auto* src = &pattern_unions_[(t * 64 + allowed) * words_];
      std::copy(src, src + words_, &principal_sets_[(t * 9 + code) * words_]);
    }
}

int LawTable::triple_index(int a, int b, int c) const
{
  if (a < 0 || b < 0 || c < 0 || a >= n_ || b >= n_ || c >= n_)
    return -1;
  return triple_lookup_[(a * n_ + b) * n_ + c];
}

std::uint8_t LawTable::present_patterns(std::span<const std::uint64_t> set_words, int t) const
{
  std::uint8_t mask = 0;
  for (int k = 0; k < kPatterns; ++k) {
    auto ps = pattern_set(t, k);
    for (std::size_t w = 0; w < words_; ++w)
      if (set_words[w] & ps[w]) {
        mask |= static_cast<std::uint8_t>(1u << k);
        break;
      }
  }
  return mask;
}

const LawTable& law_table(int n)
{
  if (n < 3 || n > kMaxDegree)
    throw std::invalid_argument("law table needs 3 <= degree <= 8");
  static std::array<std::once_flag, kMaxDegree + 1> flags;
  static std::array<std::unique_ptr<LawTable>, kMaxDegree + 1> tables;
  std::call_once(flags[n], [n] { tables[n] = std::make_unique<LawTable>(n); });
  return *tables[n];
}

std::string to_string(const Law& law, const LawTable& table)
{
  const auto& t = table.triple(law.triple);
  return "(" + std::to_string(t.a + 1) + "," + std::to_string(t.b + 1) + "," + std::to_string(t.c + 1) +
         "):" + std::to_string(t.member(law.member) + 1) + "N" + std::to_string(law.position + 1);
}

std::vector<Law> law_order(int n)
{
  const auto& table = law_table(n);
  std::vector<Law> out;
  out.reserve(table.triple_count() * 6);
  for (int t = 0; t < table.triple_count(); ++t)
    for (int o = 0; o < 6; ++o)
      out.push_back(Law::from_ordinal(t, o));
  return out;
}

Domain principal_set(const Law& law, int n)
{
  const auto& table = law_table(n);
  if (law.triple < 0 || law.triple >= table.triple_count() || law.member > 2 || law.position > 2)
    throw std::invalid_argument("invalid law");
  auto src = table.principal(law.triple, law.code());
  return Domain::from_words(n, {src.begin(), src.end()});
}

std::uint16_t satisfied_mask(const Domain& d, int t)
{
  if (d.empty())
    throw std::invalid_argument("satisfied laws of an empty domain");
  const auto& table = law_table(d.degree());
  if (t < 0 || t >= table.triple_count())
    throw std::out_of_range("triple index out of range");
  return satisfied_codes(table.present_patterns(d.words(), t));
}

std::vector<Law> satisfied_laws(const Domain& d, int t)
{
  const std::uint16_t mask = satisfied_mask(d, t);
  std::vector<Law> out;
  for (int code = 0; code < 9; ++code)
    if ((mask >> code) & 1u)
      out.push_back(Law::from_code(t, code));
  return out;
}

Domain closure_of_laws(std::span<const Law> laws, int n)
{
  const auto& table = law_table(n);
  Domain d = Domain::full(n);
  for (const auto& law : laws) {
    if (law.triple < 0 || law.triple >= table.triple_count())
      throw std::invalid_argument("invalid law");
    auto p = table.principal(law.triple, law.code());
    auto& w = d.words();
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] &= p[i];
  }
  return d;
}

Domain closure_of_set(const Domain& d)
{
  if (d.empty())
    throw std::invalid_argument("closure of an empty domain");
  const auto& table = law_table(d.degree());
  std::vector<Law> laws;
  for (int t = 0; t < table.triple_count(); ++t) {
    auto s = satisfied_laws(d, t);
    laws.insert(laws.end(), s.begin(), s.end());
  }
  return closure_of_laws(laws, d.degree());
}

bool is_cd(const Domain& d)
{
  if (d.degree() < 3)
    return true;
  const auto& table = law_table(d.degree());
  for (int t = 0; t < table.triple_count(); ++t)
    if (satisfied_codes(table.present_patterns(d.words(), t)) == 0)
      return false;
  return true;
}

int restriction_count(const Domain& d, int t)
{
  const auto& table = law_table(d.degree());
  return std::popcount(static_cast<unsigned>(table.present_patterns(d.words(), t)));
}

}  // namespace cdom
