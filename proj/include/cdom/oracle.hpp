#ifndef CDOM_ORACLE_HPP
#define CDOM_ORACLE_HPP

#include <vector>

#include "cdom/canon.hpp"
#include "cdom/perm.hpp"

namespace cdom {

/// Condorcet test in Latin-square form: no three members restrict to the
/// three rotations of one pattern on any triple. Deliberately shares nothing
/// with the law tables.
bool is_cd_latin(const Domain& d);

/// d is a CD and adding any further order breaks it.
bool is_maximal_cd(const Domain& d);

/// Every maximal CD of degree n that contains the identity, found by
/// exhaustive include/exclude search over the 3-uniform hypergraph of
/// Latin triples. Exponential; meant for n <= 5.
std::vector<Domain> brute_force_mucds(int n);

/// Sorted distinct canonical forms of `domains`.
std::vector<CanonicalForm> class_set(const std::vector<Domain>& domains);

struct ClassDiff {
  std::vector<CanonicalForm> missing;  // in expected, not in actual
  std::vector<CanonicalForm> extra;    // in actual, not in expected
  bool empty() const { return missing.empty() && extra.empty(); }
};

/// Both inputs sorted.
ClassDiff compare_classes(const std::vector<CanonicalForm>& expected, const std::vector<CanonicalForm>& actual);

}  // namespace cdom

#endif  // CDOM_ORACLE_HPP
