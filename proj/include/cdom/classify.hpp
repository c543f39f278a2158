#ifndef CDOM_CLASSIFY_HPP
#define CDOM_CLASSIFY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdom/canon.hpp"
#include "cdom/perm.hpp"

namespace cdom {

bool connected(const Domain& d);
/// Every triple obeys some xN1 or xN3 law.
bool peak_pit(const Domain& d);
/// |d ∩ dual(d)|.
std::size_t dual_intersection(const Domain& d);
bool normal(const Domain& d);
bool symmetric(const Domain& d);
bool self_dual(const Domain& d);
/// Exactly four restriction patterns on every triple.
bool copious(const Domain& d);
/// Both orders of every pair occur.
bool ample(const Domain& d);
bool fixing(const Domain& d);
bool reducible(const Domain& d);
/// Every triple obeys some xN3 law.
bool arrow_sp(const Domain& d);
/// Some a is ranked first somewhere and always followed by the same b.
bool usp(const Domain& d);
bool nuspd(const Domain& d);
bool sp_on_tree(const Domain& d);
bool sp_on_star(const Domain& d);

/// The orders of d ∩ dual(d), moved to a copy that contains the identity,
/// ordered by inversion-set inclusion form a Boolean lattice. False for an
/// empty intersection.
bool boolean_intersection(const Domain& d);

/// Labeled trees on n vertices from Prüfer sequences, each reduced to the
/// set of laws yN3 it demands (y strictly between x and z on a path).
class TreeTable {
public:
  explicit TreeTable(int n);

  using Mask = std::array<std::uint64_t, 3>;  // bit 3*triple + member

  int degree() const { return n_; }
  std::size_t size() const { return masks_.size(); }
  const Mask& requirement(std::size_t i) const { return masks_[i]; }
  bool star(std::size_t i) const { return star_[i]; }
  /// Undirected edges, 0-based.
  const std::vector<std::pair<int, int>>& edges(std::size_t i) const { return edges_[i]; }

private:
  int n_;
  std::vector<Mask> masks_;
  std::vector<bool> star_;
  std::vector<std::vector<std::pair<int, int>>> edges_;
};

const TreeTable& tree_table(int n);

/// Edges of the labeled tree encoded by a Prüfer sequence of length n-2
/// over 0..n-1.
std::vector<std::pair<int, int>> prufer_tree(int n, std::span<const int> sequence);

struct ClassRecord {
  ClassKey key;
  std::size_t size = 0;
  std::size_t core_order = 0;
  std::size_t dual_intersection = 0;
  bool connected = false;
  bool peak_pit = false;
  bool normal = false;
  bool symmetric = false;
  bool self_dual = false;
  bool copious = false;
  bool ample = false;
  bool fixing = false;
  bool reducible = false;
  bool arrow_sp = false;
  bool usp = false;
  bool nuspd = false;
  bool sp_tree = false;
  bool sp_star = false;
  bool boolean_intersection = false;
};

ClassRecord classify(const CanonicalForm& form);
ClassRecord classify(const Domain& d);

struct SizeRow {
  std::uint64_t total = 0;
  std::uint64_t connected = 0;
  std::uint64_t peak_pit = 0;
  std::uint64_t normal = 0;
  std::uint64_t self_dual = 0;
  std::uint64_t symmetric = 0;
  std::uint64_t non_ample = 0;
  std::uint64_t reducible = 0;
  std::uint64_t copious = 0;
  std::uint64_t usp = 0;
  std::uint64_t nuspd = 0;
  std::uint64_t sp_tree = 0;
  std::uint64_t sp_star = 0;
  std::uint64_t fixing = 0;
  std::uint64_t arrow_sp = 0;

  SizeRow& operator+=(const SizeRow& o);
};

struct DegreeReport {
  int degree = 0;
  std::uint64_t classes = 0;
  std::uint64_t flip_classes = 0;
  std::size_t max_size = 0;
  std::map<std::size_t, SizeRow> rows;
  /// (size, dual intersection) -> classes
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> intersections;
  /// Class size under the uniform distribution over classes.
  double mean = 0, variance = 0, skewness = 0;
  /// Human-readable failures of the per-class invariants.
  std::vector<std::string> violations;

  SizeRow totals() const;
};

void add_record(DegreeReport& report, const ClassRecord& record);
/// Throws std::invalid_argument on mixed degrees or an empty input.
DegreeReport classify_all(std::span<const CanonicalForm> classes, int workers = 1);

}  // namespace cdom

#endif  // CDOM_CLASSIFY_HPP
