#ifndef CDOM_IO_HPP
#define CDOM_IO_HPP

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdom/canon.hpp"
#include "cdom/classify.hpp"
#include "cdom/perm.hpp"

namespace cdom {

/// Malformed input; what() carries "source:line: message".
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

private:
  int line_;
};

/// Text class file:
///
///   # degree=4 classes=2
///   # law_order=... comparator=...
///   1 2 3 4
///   1 2 4 3
///
///   1 2 3 4
///   ...
///
/// One permutation per line as space-separated 1-based alternatives (runs of
/// digits like "1243" are accepted on input), blocks separated by blank
/// lines.
struct ClassFile {
  int degree = 0;
  std::string law_order;
  std::string comparator;
  std::vector<Domain> domains;
};

void write_class_header(std::ostream& out, int degree, std::size_t classes);
void write_class_block(std::ostream& out, int degree, std::span<const Rank> ranks, bool first);
void write_class_file(std::ostream& out, int degree, std::span<const Domain> domains);
void write_class_file(std::ostream& out, std::span<const CanonicalForm> forms);

ClassFile read_class_file(std::istream& in, const std::string& source = "<input>");
ClassFile read_class_file(const std::string& path);

/// Binary sidecar: "CDOMBIN1", u8 degree, u64 count, then rank records.
void write_binary_header(std::ostream& out, int degree, std::uint64_t count);
void write_binary_classes(std::ostream& out, std::span<const CanonicalForm> forms);
std::vector<CanonicalForm> read_binary_classes(std::istream& in);

/// Columns degree,size,Total,Connected,Normal,SelfDual,Symmetric,NonAmple,
/// Reducible,Copious,USP,NUSPD,SPT,Star,Fixing,ArrowSP,PeakPit; rows by size.
void write_size_csv(std::ostream& out, const DegreeReport& report);
/// Columns degree,size,dual_intersection,count.
void write_intersection_csv(std::ostream& out, const DegreeReport& report);

}  // namespace cdom

#endif  // CDOM_IO_HPP
