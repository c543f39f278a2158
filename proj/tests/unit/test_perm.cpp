#include <doctest.h>

#include <set>

#include "cdom/laws.hpp"
#include "cdom/perm.hpp"
#include "support.hpp"

using namespace cdom;
using cdom::test::orders;
using cdom::test::perm;

TEST_CASE("rank and unrank are inverse bijections")
{
  CHECK(rank(Permutation::identity(4)) == 0);
  CHECK(rank(Permutation::reversal(4)) == 23);
  std::set<Rank> seen;
  for (Rank r = 0; r < 24; ++r) {
    const auto p = unrank(r, 4);
    CHECK(rank(p) == r);
    seen.insert(rank(p));
  }
  CHECK(seen.size() == 24);
  std::set<Permutation> five;
  for (Rank r = 0; r < 120; ++r)
    five.insert(unrank(r, 5));
  CHECK(five.size() == 120);
  CHECK_THROWS_AS(unrank(24, 4), std::out_of_range);
}

TEST_CASE("malformed permutations are rejected")
{
  CHECK_THROWS_AS(Permutation::from_one_based({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_based({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_based({1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_zero_based({0, 2}), std::invalid_argument);
}

TEST_CASE("reversal")
{
  CHECK(perm("12345").reversed() == perm("54321"));
  CHECK(Permutation::reversal(5).reversed() == Permutation::identity(5));
  const auto& table = perm_table(4);
  for (Rank r = 0; r < 24; ++r) {
    const auto p = unrank(r, 4);
    CHECK(p.reversed().reversed() == p);
    CHECK(rank(p.reversed()) == table.reversed(r));
    CHECK((inversions(p).bits() ^ inversions(p.reversed()).bits()) == 0x3f);
  }
}

TEST_CASE("inversion sets")
{
  CHECK(inversions(Permutation::identity(4)).size() == 0);
  CHECK(inversions(Permutation::reversal(4)).size() == 6);
  const auto inv = inversions(perm("213"));
  CHECK(inv.size() == 1);
  CHECK(inv.contains(0, 1));
  // Pairs of alternatives, not of positions: 312 ranks 3 above 1 and 2.
  const auto p = inversions(perm("312"));
  CHECK(p.contains(0, 2));
  CHECK(p.contains(1, 2));
  CHECK_FALSE(p.contains(0, 1));

  for (int n = 2; n <= 5; ++n) {
    const auto& table = perm_table(n);
    const int pairs = n * (n - 1) / 2;
    for (Rank r = 0; r < table.count(); ++r) {
      const auto q = unrank(r, n);
      CHECK(inversions(q).size() + inversions(q.reversed()).size() == pairs);
      CHECK(inversions(q).bits() == table.inversion_bits(r));
      CHECK(table.inversion_count(r) == inversions(q).size());
    }
  }
}

TEST_CASE("cover relation of the weak order")
{
  CHECK(covers(perm("123"), perm("213")));
  CHECK_FALSE(covers(perm("123"), perm("321")));
  CHECK_FALSE(covers(perm("213"), perm("123")));
  CHECK(covers(perm("213"), perm("231")));
  CHECK_THROWS_AS(covers(perm("123"), perm("1234")), std::invalid_argument);

  // Hasse diagram of S_4: 24 vertices, 36 edges.
  int edges = 0;
  for (Rank a = 0; a < 24; ++a)
    for (Rank b = 0; b < 24; ++b)
      edges += covers(unrank(a, 4), unrank(b, 4));
  CHECK(edges == 36);

  // A cover is exactly one adjacent swap that adds an inversion.
  for (int n = 3; n <= 5; ++n) {
    const auto& table = perm_table(n);
    for (Rank a = 0; a < table.count(); ++a) {
      std::set<Rank> up;
      for (int j = 0; j + 1 < n; ++j) {
        const Rank b = table.adjacent_swap(a, j);
        if (table.inversion_count(b) > table.inversion_count(a))
          up.insert(b);
      }
      for (Rank b = 0; b < table.count(); ++b) {
        const bool c = covers(unrank(a, n), unrank(b, n));
        CHECK(c == (up.count(b) == 1));
        if (c)
          CHECK(std::popcount(table.inversion_bits(a) ^ table.inversion_bits(b)) == 1);
      }
    }
  }
}

TEST_CASE("restriction to a subset of alternatives")
{
  const std::vector<int> sub = {0, 1, 3};
  CHECK(restrict_to(perm("41325"), sub) == std::vector<int>{3, 0, 1});
  const std::vector<int> all = {0, 1, 2, 3, 4};
  const auto p = perm("41325");
  std::vector<int> slots(p.slots().begin(), p.slots().end());
  CHECK(restrict_to(p, all) == slots);
  CHECK_THROWS_AS(restrict_to(p, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("relabeling convention")
{
  // g∘σ: wherever σ puts x, the result puts g(x).
  const auto g = perm("231");
  CHECK(perm("123").relabeled(g) == perm("231"));
  CHECK(perm("213").relabeled(g) == perm("321"));
  const auto& table = perm_table(4);
  for (Rank g4 = 0; g4 < 24; ++g4)
    for (Rank s = 0; s < 24; ++s)
      CHECK(table.relabel(g4, s) == rank(unrank(s, 4).relabeled(unrank(g4, 4))));
  // act(d, g⁻¹) is unitary for every g in d.
  const Domain d = orders(4, {"2143", "3412", "4321"});
  for (Rank g4 : d.ranks())
    CHECK(act(d, table.inverse(g4)).unitary());
}

TEST_CASE("act is a right group action")
{
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const Domain d = test::random_domain(n, 0.2);
      const auto g = unrank(test::random_rank(n), n);
      const auto h = unrank(test::random_rank(n), n);
      CHECK(act(act(d, g), h) == act(d, product(g, h)));
      CHECK(act(d, g).size() == d.size());
      CHECK(act(d, Permutation::identity(n)) == d);
    }
  }
  CHECK_THROWS_AS(act(Domain(4), Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("domain set operations")
{
  Domain a = orders(3, {"123", "132"});
  Domain b = orders(3, {"132", "321"});
  CHECK((a & b) == orders(3, {"132"}));
  CHECK((a | b).size() == 3);
  CHECK(orders(3, {"132"}).subset_of(a));
  CHECK(a.unitary());
  CHECK_FALSE(b.unitary());
  CHECK(Domain::full(4).size() == 24);
  CHECK(Domain(4).empty());
  CHECK_THROWS_AS(a &= Domain(4), std::invalid_argument);
  const auto perms = a.permutations();
  CHECK(Domain::from_permutations(3, perms) == a);
  CHECK(Domain::from_ranks(3, a.ranks()) == a);
}
