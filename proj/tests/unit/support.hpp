// Shared fixtures for the unit tests.
#ifndef CDOM_TEST_SUPPORT_HPP
#define CDOM_TEST_SUPPORT_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cdom/canon.hpp"
#include "cdom/perm.hpp"
#include "cdom/search.hpp"

namespace cdom::test {

/// Orders written as digit strings, e.g. {"123", "231"}.
inline Domain orders(int n, std::initializer_list<const char*> rows)
{
  Domain d(n);
  for (const char* row : rows) {
    std::vector<int> v;
    for (const char* c = row; *c; ++c)
      v.push_back(*c - '0');
    d.insert(rank(Permutation::from_one_based(v)));
  }
  return d;
}

inline Permutation perm(const char* digits)
{
  std::vector<int> v;
  for (const char* c = digits; *c; ++c)
    v.push_back(*c - '0');
  return Permutation::from_one_based(v);
}

inline std::mt19937_64& rng()
{
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline Rank random_rank(int n)
{
  return static_cast<Rank>(std::uniform_int_distribution<std::uint64_t>(0, factorial(n) - 1)(rng()));
}

/// Each order kept with probability p.
inline Domain random_domain(int n, double p)
{
  std::bernoulli_distribution keep(p);
  Domain d(n);
  for (Rank r = 0; r < factorial(n); ++r)
    if (keep(rng()))
      d.insert(r);
  if (d.empty())
    d.insert(random_rank(n));
  return d;
}

/// All class representatives of degree n (n <= 5), computed once.
inline const std::vector<CanonicalForm>& classes(int n)
{
  static std::vector<CanonicalForm> cache[6];
  auto& c = cache[n];
  if (c.empty()) {
    ClassCollector collector(n);
    enumerate_mucds(n, {}, [&](int, std::span<const std::uint64_t> set) { collector.add_leaf(set); });
    c = collector.finish();
  }
  return c;
}

}  // namespace cdom::test

#endif
