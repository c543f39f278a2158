#include "cdom/schemes.hpp"

#include <stdexcept>
#include <vector>

#include "cdom/laws.hpp"

namespace cdom {

Domain alternating(int n, AlternatingVariant variant)
{
  if (n < 3)
    throw std::invalid_argument("alternating scheme needs degree >= 3");
  const auto& table = law_table(n);
  std::vector<Law> laws;
  for (const auto& t : table.triples()) {
    const bool even_middle = (t.b + 1) % 2 == 0;
    const bool first = (variant == AlternatingVariant::A) == even_middle;
    laws.push_back({t.index, 1, static_cast<std::uint8_t>(first ? 0 : 2)});
  }
  return closure_of_laws(laws, n);
}

std::uint64_t alternating_size(int n)
{
  if (n < 3)
    throw std::invalid_argument("alternating scheme needs degree >= 3");
  const std::uint64_t head = (std::uint64_t{1} << (n - 3)) * static_cast<std::uint64_t>(n + 3);
  if (n % 2 == 0) {
    // C(n-2, n/2-1) * (n - 3/2), with the central binomial always even.
    const std::uint64_t c = binomial(n - 2, n / 2 - 1);
    return head - c * static_cast<std::uint64_t>(2 * n - 3) / 2;
  }
  return head - binomial(n - 1, (n - 1) / 2) * static_cast<std::uint64_t>(n - 1) / 2;
}

Domain replacement(const Domain& outer, const Domain& inner)
{
  const int k = outer.degree() - 1;
  const int l = inner.degree();
  if (k < 1 || l < 1)
    throw std::invalid_argument("replacement needs outer degree >= 2 and inner degree >= 1");
  if (k + l > kMaxDegree)
    throw std::invalid_argument("replacement degree exceeds the supported range");
  const int n = k + l;
  const auto& po = perm_table(outer.degree());
  const auto& pi = perm_table(l);
  const auto& pn = perm_table(n);
  Domain out(n);
  std::vector<std::uint8_t> slots;
  for (Rank a : outer.ranks()) {
    for (Rank b : inner.ranks()) {
      slots.clear();
      for (int j = 0; j <= k; ++j) {
        const int x = po.slot(a, j);
        if (x == k) {
          for (int i = 0; i < l; ++i)
            slots.push_back(static_cast<std::uint8_t>(k + pi.slot(b, i)));
        } else {
          slots.push_back(static_cast<std::uint8_t>(x));
        }
      }
      out.insert(pn.rank_of(slots));
    }
  }
  return out;
}

Domain black_single_peaked(int n)
{
  if (n < 2)
    throw std::invalid_argument("single-peaked domain needs degree >= 2");
  const auto& table = perm_table(n);
  Domain out(n);
  for (Rank r = 0; r < table.count(); ++r) {
    int lo = table.slot(r, 0), hi = lo;
    bool ok = true;
    for (int j = 1; j < n && ok; ++j) {
      const int x = table.slot(r, j);
      if (x == lo - 1)
        lo = x;
      else if (x == hi + 1)
        hi = x;
      else
        ok = false;
    }
    if (ok)
      out.insert(r);
  }
  return out;
}

}  // namespace cdom
