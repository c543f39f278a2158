#ifndef CDOM_PERM_HPP
#define CDOM_PERM_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cdom {

using Rank = std::uint32_t;

/// Largest degree for which the n!-bit domain tables are built.
inline constexpr int kMaxDegree = 8;

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// A linear order on the alternatives {1..n}. slot(j) is the alternative
/// placed at position j; position 1 is the most preferred.
///
/// Storage is 0-based (alternatives 0..n-1 at positions 0..n-1); the
/// 1-based accessors are what the file formats use.
class Permutation {
public:
  Permutation() = default;

  /// Builds from 1-based alternatives listed best-first.
  static Permutation from_one_based(std::span<const int> alternatives);
  static Permutation from_one_based(std::initializer_list<int> alternatives);
  /// Builds from 0-based alternatives; throws std::invalid_argument if the
  /// sequence is not a bijection.
  static Permutation from_zero_based(std::vector<std::uint8_t> slots);

  static Permutation identity(int n);
  static Permutation reversal(int n);

  int degree() const { return static_cast<int>(slots_.size()); }
  /// 0-based alternative at 0-based position.
  int at(int position) const { return slots_[position]; }
  /// 0-based position of 0-based alternative.
  int position_of(int alternative) const;
  const std::vector<std::uint8_t>& slots() const { return slots_; }

  Permutation reversed() const;
  Permutation inverse() const;

  /// Relabels alternatives: the result places g(x) wherever this places x,
  /// i.e. the composition g∘σ.
  Permutation relabeled(const Permutation& g) const;

  std::string to_string() const;  // "4 1 3 2 5"

  auto operator<=>(const Permutation&) const = default;

private:
  explicit Permutation(std::vector<std::uint8_t> slots) : slots_(std::move(slots)) {}
  std::vector<std::uint8_t> slots_;
};

/// Product in the right-action convention: x(gh) = (xg)h, i.e. apply g
/// first, then h.
Permutation product(const Permutation& g, const Permutation& h);

/// Lexicographic rank among the n! slot sequences; the identity is 0 and
/// the reversal is n!-1.
Rank rank(const Permutation& p);
Permutation unrank(Rank r, int n);

/// The alternatives of `alternatives` (0-based) in the order they occupy in p.
std::vector<int> restrict_to(const Permutation& p, std::span<const int> alternatives);

/// Pairs of alternatives a<b ranked b before a, as a C(n,2)-bit set. With
/// this reading a cover in the weak order is one adjacent swap of the ranking.
class InversionSet {
public:
  InversionSet(int n, std::uint64_t bits) : degree_(n), bits_(bits) {}

  int degree() const { return degree_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  /// Index of the pair of alternatives (i,j), 0-based, i<j.
  static int pair_index(int n, int i, int j);
  bool contains(int i, int j) const { return (bits_ >> pair_index(degree_, i, j)) & 1u; }
  bool subset_of(const InversionSet& o) const { return (bits_ & ~o.bits_) == 0; }

  bool operator==(const InversionSet&) const = default;

private:
  int degree_;
  std::uint64_t bits_;
};

InversionSet inversions(const Permutation& p);

/// True iff hi covers lo in the weak Bruhat order.
bool covers(const Permutation& lo, const Permutation& hi);

/// Immutable per-degree lookup tables. Obtain through perm_table(n); the
/// instances live for the whole process and are safe to share.
class PermTable {
public:
  explicit PermTable(int n);

  int degree() const { return n_; }
  Rank count() const { return count_; }

  /// 0-based alternative at 0-based position of the permutation with rank r.
  int slot(Rank r, int position) const { return slots_[r * n_ + position]; }
  std::span<const std::uint8_t> slots(Rank r) const { return {slots_.data() + r * n_, static_cast<size_t>(n_)}; }
  int position_of(Rank r, int alternative) const { return positions_[r * n_ + alternative]; }

  Rank inverse(Rank r) const { return inverse_[r]; }
  Rank reversed(Rank r) const { return reversed_[r]; }
  /// Rank of the relabeling g∘σ.
  Rank relabel(Rank g, Rank sigma) const;
  /// Neighbour obtained by swapping positions j and j+1.
  Rank adjacent_swap(Rank r, int j) const { return swaps_[r * (n_ - 1) + j]; }
  int inversion_count(Rank r) const { return inversion_counts_[r]; }
  std::uint64_t inversion_bits(Rank r) const { return inversion_bits_[r]; }
  /// Rank of the permutation given as 0-based slots; no validation.
  Rank rank_of(std::span<const std::uint8_t> slots) const;

private:
  int n_;
  Rank count_;
  std::vector<std::uint8_t> slots_;
  std::vector<std::uint8_t> positions_;
  std::vector<Rank> inverse_;
  std::vector<Rank> reversed_;
  std::vector<Rank> swaps_;
  std::vector<std::uint8_t> inversion_counts_;
  std::vector<std::uint64_t> inversion_bits_;
  std::vector<std::uint16_t> relabel_;  // count_ x count_, only built when n <= 7
};

const PermTable& perm_table(int n);

/// A set of permutations of one degree stored as an n!-bit membership set
/// indexed by rank.
class Domain {
public:
  Domain() = default;
  explicit Domain(int n);
  static Domain full(int n);
  static Domain from_ranks(int n, std::span<const Rank> ranks);
  static Domain from_permutations(int n, std::span<const Permutation> perms);
  static Domain from_words(int n, std::vector<std::uint64_t> words);

  int degree() const { return degree_; }
  Rank universe() const { return universe_; }
  bool contains(Rank r) const { return (words_[r >> 6] >> (r & 63)) & 1u; }
  bool contains(const Permutation& p) const;
  void insert(Rank r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }
  void erase(Rank r) { words_[r >> 6] &= ~(std::uint64_t{1} << (r & 63)); }

  std::size_t size() const;
  bool empty() const;
  /// Contains the identity order.
  bool unitary() const { return degree_ > 0 && contains(Rank{0}); }

  std::vector<Rank> ranks() const;
  std::vector<Permutation> permutations() const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  bool subset_of(const Domain& other) const;
  Domain& operator&=(const Domain& other);
  Domain& operator|=(const Domain& other);
  friend Domain operator&(Domain a, const Domain& b) { return a &= b; }
  friend Domain operator|(Domain a, const Domain& b) { return a |= b; }

  bool operator==(const Domain&) const = default;

private:
  void check_same_degree(const Domain& other) const;

  int degree_ = 0;
  Rank universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Applies the relabeling g to every order: {g∘σ : σ ∈ d}. This is a right
/// action, act(act(d, g), h) == act(d, product(g, h)).
Domain act(const Domain& d, const Permutation& g);
Domain act(const Domain& d, Rank g);

}  // namespace cdom

#endif  // CDOM_PERM_HPP
