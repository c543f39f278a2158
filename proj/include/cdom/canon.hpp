#ifndef CDOM_CANON_HPP
#define CDOM_CANON_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cdom/perm.hpp"

namespace cdom {

inline constexpr const char* kComparatorId = "lexmax-ascending-ranks";

/// A unitary representative written as its strictly increasing rank list.
/// Among all unitary relabelings of a domain, the canonical one is the
/// lexicographic maximum of these lists.
struct CanonicalForm {
  int degree = 0;
  std::vector<Rank> ranks;

  Domain domain() const { return Domain::from_ranks(degree, ranks); }
  std::size_t size() const { return ranks.size(); }
  auto operator<=>(const CanonicalForm&) const = default;
};

struct ClassKey {
  CanonicalForm canonical;
  CanonicalForm flip_canonical;  // max(canonical, canonical of the conjugate)
  bool reflexive = false;        // the class is its own conjugate

  auto operator<=>(const ClassKey& o) const { return canonical <=> o.canonical; }
  bool operator==(const ClassKey& o) const { return canonical == o.canonical; }
};

/// Canonical rank list of the members given by `ranks` (any order).
std::vector<Rank> canonical_ranks(int n, std::span<const Rank> ranks);
CanonicalForm canonical_form(const Domain& d);

/// Isomorphic copy containing the identity, relabeled by the inverse of the
/// lowest-ranked member.
Domain unitarize(const Domain& d);
bool isomorphic(const Domain& a, const Domain& b);

/// Every order reversed.
Domain dual(const Domain& d);
/// The dual relabeled by the reversal; unitary whenever d is.
Domain conjugate(const Domain& d);
/// {g in d : act(d, g) == d}; d must be unitary.
Domain core(const Domain& d);

ClassKey class_key(const Domain& d);

/// Distinct orders in the input stream, one key per isomorphism class,
/// sorted by canonical form. Throws on mixed degrees.
std::vector<ClassKey> dedup(std::span<const Domain> leaves);
/// Number of distinct flip_canonical values.
std::size_t flip_class_count(std::span<const ClassKey> keys);

/// One rank list as a u16 length followed by u16 ranks (native byte order).
void write_rank_record(std::ostream& out, std::span<const Rank> ranks);
/// False at a clean end of stream; throws on a truncated record.
bool read_rank_record(std::istream& in, std::vector<Rank>& out);

/// Sorted, duplicate-free set of canonical rank lists that spills sorted runs
/// to disk once it holds more than `memory_limit` entries; finish() merges
/// the runs. One owner at a time; merge() folds another set in.
class ClassCollector {
public:
  explicit ClassCollector(int n, std::size_t memory_limit = 0, std::filesystem::path spill_dir = {});
  ClassCollector(ClassCollector&&) noexcept;
  ClassCollector& operator=(ClassCollector&&) noexcept;
  ClassCollector(const ClassCollector&) = delete;
  ClassCollector& operator=(const ClassCollector&) = delete;
  ~ClassCollector();

  int degree() const { return n_; }
  /// Canonicalizes and inserts a leaf given by its membership words.
  void add_leaf(std::span<const std::uint64_t> words);
  void add_canonical(std::vector<Rank> ranks);
  void merge(ClassCollector&& other);
  std::size_t pending() const { return memory_.size(); }

  /// Streams the distinct canonical forms in ascending order and clears the
  /// collector.
  void finish(const std::function<void(const std::vector<Rank>&)>& visit);
  std::vector<CanonicalForm> finish();

private:
  void spill();

  int n_;
  std::size_t memory_limit_;
  std::filesystem::path spill_dir_;
  std::set<std::vector<Rank>> memory_;
  std::vector<std::filesystem::path> runs_;
  std::vector<Rank> scratch_;
};

}  // namespace cdom

#endif  // CDOM_CANON_HPP
