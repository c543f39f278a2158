#ifndef CDOM_LAWS_HPP
#define CDOM_LAWS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cdom/perm.hpp"

namespace cdom {

/// Three alternatives a<b<c (0-based) and their index in the fixed
/// lexicographic triple order.
struct Triple {
  int a = 0, b = 0, c = 0;
  int index = 0;

  int member(int m) const { return m == 0 ? a : (m == 1 ? b : c); }
  auto operator<=>(const Triple&) const = default;
};

/// Never condition "member never at position" on one triple. member and
/// position are 0-based (member 0 is the smallest alternative of the
/// triple); the printed form is 1-based, e.g. "2N1".
struct Law {
  int triple = 0;
  std::uint8_t member = 0;
  std::uint8_t position = 0;

  /// 0..8, member-major.
  int code() const { return member * 3 + position; }
  static Law from_code(int triple, int code)
  {
    return {triple, static_cast<std::uint8_t>(code / 3), static_cast<std::uint8_t>(code % 3)};
  }
  /// The identity restricted to a<b<c is a b c, so aN1, bN2 and cN3 are
  /// the three laws it violates.
  bool identity_compatible() const { return member != position; }
  /// Position in the within-triple search order aN2, aN3, bN1, bN3, cN1, cN2,
  /// or -1 for the identity-incompatible forms.
  int ordinal() const;
  static Law from_ordinal(int triple, int ordinal);

  auto operator<=>(const Law&) const = default;
};

inline constexpr std::array<int, 6> kOrdinalToCode = {1, 2, 3, 5, 6, 7};
inline constexpr const char* kLawOrderId = "lex-triples/aN2,aN3,bN1,bN3,cN1,cN2";

/// Restriction patterns of a triple a<b<c, indexed lexicographically:
/// 0 abc, 1 acb, 2 bac, 3 bca, 4 cab, 5 cba.
inline constexpr int kPatterns = 6;

/// 6-bit mask of the patterns a law forbids (its 2 excluded orders).
std::uint8_t forbidden_patterns(int law_code);
/// 9-bit mask of the laws satisfied by a set whose restriction uses exactly
/// the patterns in `present`.
std::uint16_t satisfied_codes(std::uint8_t present);

/// Per-degree precomputed triples and principal sets, built once and shared
/// read-only.
class LawTable {
public:
  explicit LawTable(int n);

  int degree() const { return n_; }
  int triple_count() const { return static_cast<int>(triples_.size()); }
  const std::vector<Triple>& triples() const { return triples_; }
  const Triple& triple(int index) const { return triples_[index]; }
  int triple_index(int a, int b, int c) const;  // any order of distinct 0-based alternatives
  std::size_t words() const { return words_; }

  /// Restriction pattern of permutation r on triple t.
  std::uint8_t pattern(Rank r, int t) const { return patterns_[static_cast<std::size_t>(r) * triples_.size() + t]; }
  /// Permutations whose restriction to t is pattern k.
  std::span<const std::uint64_t> pattern_set(int t, int k) const { return span_at(pattern_sets_, t * kPatterns + k); }
  /// Principal closed set of the law with this code on triple t.
  std::span<const std::uint64_t> principal(int t, int code) const { return span_at(principal_sets_, t * 9 + code); }
  /// Union of the pattern sets selected by `allowed` on triple t.
  std::span<const std::uint64_t> pattern_union(int t, std::uint8_t allowed) const { return span_at(pattern_unions_, t * 64 + allowed); }

  /// Mask of patterns present in the set given by `set_words` on triple t.
  std::uint8_t present_patterns(std::span<const std::uint64_t> set_words, int t) const;

private:
  std::span<const std::uint64_t> span_at(const std::vector<std::uint64_t>& v, int block) const
  {
    return {v.data() + static_cast<std::size_t>(block) * words_, words_};
  }

  int n_;
  std::size_t words_;
  std::vector<Triple> triples_;
  std::vector<int> triple_lookup_;  // n^3
  std::vector<std::uint8_t> patterns_;
  std::vector<std::uint64_t> pattern_sets_;
  std::vector<std::uint64_t> principal_sets_;
  std::vector<std::uint64_t> pattern_unions_;
};

const LawTable& law_table(int n);

std::string to_string(const Law& law, const LawTable& table);  // "(1,2,3):2N1"

std::vector<Law> law_order(int n);
Domain principal_set(const Law& law, int n);

/// Laws (any of the 9 forms) obeyed by every order of d on triple t. For a
/// unitary d these are automatically identity-compatible.
std::vector<Law> satisfied_laws(const Domain& d, int t);
/// Same as satisfied_laws, as a 9-bit code mask.
std::uint16_t satisfied_mask(const Domain& d, int t);

Domain closure_of_laws(std::span<const Law> laws, int n);
Domain closure_of_set(const Domain& d);

/// Condorcet test in never-condition form: every triple obeys some law.
bool is_cd(const Domain& d);

/// Number of distinct orders d induces on triple t.
int restriction_count(const Domain& d, int t);

}  // namespace cdom

#endif  // CDOM_LAWS_HPP
