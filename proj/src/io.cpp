#include "cdom/io.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cdom/laws.hpp"

namespace cdom {

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line)
{
}

void write_class_header(std::ostream& out, int degree, std::size_t classes)
{
  out << "# degree=" << degree << " classes=" << classes << "\n";
  out << "# law_order=" << kLawOrderId << " comparator=" << kComparatorId << "\n";
}

void write_class_block(std::ostream& out, int degree, std::span<const Rank> ranks, bool first)
{
  const auto& table = perm_table(degree);
  if (!first)
    out << "\n";
  std::string line(static_cast<std::size_t>(2 * degree), ' ');
  line.back() = '\n';
  for (Rank r : ranks) {
    for (int j = 0; j < degree; ++j)
      line[2 * j] = static_cast<char>('1' + table.slot(r, j));
    out << line;
  }
}

void write_class_file(std::ostream& out, int degree, std::span<const Domain> domains)
{
  write_class_header(out, degree, domains.size());
  bool first = true;
  for (const auto& d : domains) {
    if (d.degree() != degree)
      throw std::invalid_argument("class file over mixed degrees");
    const auto ranks = d.ranks();
    write_class_block(out, degree, ranks, first);
    first = false;
  }
}

void write_class_file(std::ostream& out, std::span<const CanonicalForm> forms)
{
  if (forms.empty())
    throw std::invalid_argument("class file needs at least one class");
  const int degree = forms.front().degree;
  write_class_header(out, degree, forms.size());
  bool first = true;
  for (const auto& f : forms) {
    if (f.degree != degree)
      throw std::invalid_argument("class file over mixed degrees");
    write_class_block(out, degree, f.ranks, first);
    first = false;
  }
}

namespace {

// "key=value" fields of a header line.
std::string header_field(const std::string& line, const std::string& key)
{
  std::istringstream words(line.substr(1));
  std::string w;
  while (words >> w)
    if (w.compare(0, key.size() + 1, key + "=") == 0)
      return w.substr(key.size() + 1);
  return {};
}

std::vector<int> parse_order(const std::string& line)
{
  std::vector<int> out;
  if (line.find_first_of(" \t,") == std::string::npos) {
    for (char c : line) {
      if (c < '1' || c > '9')
        return {};
      out.push_back(c - '0');
    }
    return out;
  }
  std::string tokens = line;
  for (char& c : tokens)
    if (c == ',' || c == '\t')
      c = ' ';
  std::istringstream in(tokens);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size())
        return {};
      out.push_back(v);
    } catch (const std::exception&) {
      return {};
    }
  }
  return out;
}

}  // namespace

ClassFile read_class_file(std::istream& in, const std::string& source)
{
  ClassFile file;
  long declared = -1;
  std::string line;
  int lineno = 0;
  std::vector<Rank> block;
  int block_line = 0;

  auto close_block = [&] {
    if (block.empty())
      return;
    Domain d(file.degree);
    for (Rank r : block) {
      if (d.contains(r))
        throw ParseError(source, block_line, "block repeats an order");
      d.insert(r);
    }
    file.domains.push_back(std::move(d));
    block.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      close_block();
      continue;
    }
    line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
    if (line[0] == '#') {
      if (auto deg = header_field(line, "degree"); !deg.empty()) {
        try {
          file.degree = std::stoi(deg);
        } catch (const std::exception&) {
          throw ParseError(source, lineno, "bad degree '" + deg + "'");
        }
        if (file.degree < 1 || file.degree > kMaxDegree)
          throw ParseError(source, lineno, "degree out of range");
      }
      if (auto k = header_field(line, "classes"); !k.empty()) {
        try {
          declared = std::stol(k);
        } catch (const std::exception&) {
          throw ParseError(source, lineno, "bad class count '" + k + "'");
        }
      }
      if (auto lo = header_field(line, "law_order"); !lo.empty())
        file.law_order = lo;
      if (auto cmp = header_field(line, "comparator"); !cmp.empty())
        file.comparator = cmp;
      continue;
    }
    const auto values = parse_order(line);
    if (values.empty())
      throw ParseError(source, lineno, "not a permutation: '" + line + "'");
    if (file.degree == 0)
      file.degree = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != file.degree)
      throw ParseError(source, lineno, "expected " + std::to_string(file.degree) + " alternatives, got " +
                                           std::to_string(values.size()));
    Permutation p;
    try {
      p = Permutation::from_one_based(values);
    } catch (const std::exception& e) {
      throw ParseError(source, lineno, "not a permutation: '" + line + "'");
    }
    if (block.empty())
      block_line = lineno;
    block.push_back(rank(p));
  }
  close_block();
  if (file.domains.empty())
    throw ParseError(source, lineno, "no classes in file");
  if (declared >= 0 && static_cast<std::size_t>(declared) != file.domains.size())
    throw ParseError(source, lineno, "header declares " + std::to_string(declared) + " classes, found " +
                                         std::to_string(file.domains.size()));
  if (!file.law_order.empty() && file.law_order != kLawOrderId)
    throw ParseError(source, 2, "file was written under law order " + file.law_order);
  return file;
}

ClassFile read_class_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  return read_class_file(in, path);
}

namespace {
constexpr char kBinaryMagic[8] = {'C', 'D', 'O', 'M', 'B', 'I', 'N', '1'};
}

void write_binary_header(std::ostream& out, int degree, std::uint64_t count)
{
  out.write(kBinaryMagic, sizeof kBinaryMagic);
  const auto deg = static_cast<std::uint8_t>(degree);
  out.write(reinterpret_cast<const char*>(&deg), 1);
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
}

void write_binary_classes(std::ostream& out, std::span<const CanonicalForm> forms)
{
  if (forms.empty())
    throw std::invalid_argument("binary class file needs at least one class");
  write_binary_header(out, forms.front().degree, forms.size());
  for (const auto& f : forms)
    write_rank_record(out, f.ranks);
}

std::vector<CanonicalForm> read_binary_classes(std::istream& in)
{
  char magic[sizeof kBinaryMagic];
  std::uint8_t degree = 0;
  std::uint64_t count = 0;
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kBinaryMagic, sizeof magic) != 0)
    throw std::runtime_error("not a binary class file");
  if (!in.read(reinterpret_cast<char*>(&degree), 1) || !in.read(reinterpret_cast<char*>(&count), sizeof count))
    throw std::runtime_error("truncated binary class header");
  if (degree < 1 || degree > kMaxDegree)
    throw std::runtime_error("binary class file degree out of range");
  std::vector<CanonicalForm> out;
  std::vector<Rank> ranks;
  while (read_rank_record(in, ranks))
    out.push_back({degree, ranks});
  if (out.size() != count)
    throw std::runtime_error("binary class file holds " + std::to_string(out.size()) + " records, header says " +
                             std::to_string(count));
  return out;
}

void write_size_csv(std::ostream& out, const DegreeReport& report)
{
  out << "degree,size,Total,Connected,Normal,SelfDual,Symmetric,NonAmple,Reducible,Copious,USP,NUSPD,SPT,Star,"
         "Fixing,ArrowSP,PeakPit\n";
  for (const auto& [size, r] : report.rows) {
    out << report.degree << ',' << size << ',' << r.total << ',' << r.connected << ',' << r.normal << ','
        << r.self_dual << ',' << r.symmetric << ',' << r.non_ample << ',' << r.reducible << ',' << r.copious << ','
        << r.usp << ',' << r.nuspd << ',' << r.sp_tree << ',' << r.sp_star << ',' << r.fixing << ',' << r.arrow_sp
        << ',' << r.peak_pit << '\n';
  }
}

void write_intersection_csv(std::ostream& out, const DegreeReport& report)
{
  out << "degree,size,dual_intersection,count\n";
  for (const auto& [key, count] : report.intersections)
    out << report.degree << ',' << key.first << ',' << key.second << ',' << count << '\n';
}

}  // namespace cdom
