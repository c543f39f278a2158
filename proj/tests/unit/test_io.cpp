#include <doctest.h>

#include <sstream>

#include "cdom/classify.hpp"
#include "cdom/io.hpp"
#include "cdom/laws.hpp"
#include "cdom/schemes.hpp"
#include "support.hpp"

using namespace cdom;
using cdom::test::orders;

namespace {

std::string parse_error(const std::string& text)
{
  std::istringstream in(text);
  try {
    read_class_file(in, "f.txt");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("class files round trip")
{
  const auto& cls = test::classes(4);
  std::ostringstream out;
  write_class_file(out, cls);
  const std::string text = out.str();
  CHECK(text.rfind("# degree=4 classes=31\n# law_order=", 0) == 0);
  CHECK(text.find("1 2 3 4\n") != std::string::npos);
  std::istringstream in(text);
  const ClassFile file = read_class_file(in);
  CHECK(file.degree == 4);
  CHECK(file.law_order == kLawOrderId);
  CHECK(file.comparator == kComparatorId);
  REQUIRE(file.domains.size() == cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i)
    CHECK(file.domains[i] == cls[i].domain());

  const std::vector<Domain> ds = {alternating(5), black_single_peaked(5)};
  std::ostringstream o2;
  write_class_file(o2, 5, ds);
  std::istringstream i2(o2.str());
  const auto back = read_class_file(i2).domains;
  CHECK(back == ds);
}

TEST_CASE("reader accepts compact and comma-separated orders")
{
  std::istringstream in("1234\n2143\n\n# comment\n1,2,3,4\n 4 3 2 1 \r\n");
  const ClassFile f = read_class_file(in);
  CHECK(f.degree == 4);
  REQUIRE(f.domains.size() == 2);
  CHECK(f.domains[0] == orders(4, {"1234", "2143"}));
  CHECK(f.domains[1] == orders(4, {"1234", "4321"}));
}

TEST_CASE("reader errors carry the line number")
{
  CHECK(parse_error("1 2 3\n1 2 4\n") == "f.txt:2: not a permutation: '1 2 4'");
  CHECK(parse_error("1 2 3\n1 2 3 4\n") == "f.txt:2: expected 3 alternatives, got 4");
  CHECK(parse_error("123\n\n132\n1x3\n") == "f.txt:4: not a permutation: '1x3'");
  CHECK(parse_error("123\n213\n123\n") == "f.txt:1: block repeats an order");
  CHECK(parse_error("# degree=4\n123\n") == "f.txt:2: expected 4 alternatives, got 3");
  CHECK(parse_error("# degree=x\n").find("f.txt:1: bad degree") == 0);
  CHECK(parse_error("# degree=3 classes=2\n123\n") == "f.txt:2: header declares 2 classes, found 1");
  CHECK(parse_error("").find("no classes") != std::string::npos);
  CHECK(parse_error("# law_order=other\n123\n").find("law order other") != std::string::npos);
  CHECK_THROWS_AS(read_class_file("/nonexistent/classes.txt"), std::runtime_error);
}

TEST_CASE("writer rejects bad input")
{
  std::ostringstream out;
  const std::vector<Domain> mixed = {Domain::full(3), Domain::full(4)};
  CHECK_THROWS_AS(write_class_file(out, 3, mixed), std::invalid_argument);
  CHECK_THROWS_AS(write_class_file(out, std::vector<CanonicalForm>{}), std::invalid_argument);
}

TEST_CASE("binary class files")
{
  const auto& cls = test::classes(5);
  std::stringstream buf;
  write_binary_classes(buf, cls);
  CHECK(buf.str().substr(0, 8) == "CDOMBIN1");
  CHECK(read_binary_classes(buf) == cls);

  const std::string full = [&] {
    std::stringstream b;
    write_binary_classes(b, cls);
    return b.str();
  }();
  std::stringstream cut(full.substr(0, full.size() - 3));
  CHECK_THROWS_AS(read_binary_classes(cut), std::runtime_error);
  std::stringstream junk("NOTABIN!xxxxxxxxx");
  CHECK_THROWS_WITH_AS(read_binary_classes(junk), "not a binary class file", std::runtime_error);
  std::stringstream shorter(full.substr(0, 12));
  CHECK_THROWS_AS(read_binary_classes(shorter), std::runtime_error);
}

TEST_CASE("report csv files")
{
  const DegreeReport report = classify_all(test::classes(4));
  std::ostringstream sizes, inter;
  write_size_csv(sizes, report);
  write_intersection_csv(inter, report);
  std::istringstream s(sizes.str());
  std::string header, line;
  std::getline(s, header);
  CHECK(header ==
        "degree,size,Total,Connected,Normal,SelfDual,Symmetric,NonAmple,Reducible,Copious,USP,NUSPD,SPT,Star,Fixing,"
        "ArrowSP,PeakPit");
  int rows = 0;
  std::uint64_t total = 0;
  while (std::getline(s, line)) {
    ++rows;
    CHECK(line.rfind("4,", 0) == 0);
    std::istringstream fields(line);
    std::string deg, size, t;
    std::getline(fields, deg, ',');
    std::getline(fields, size, ',');
    std::getline(fields, t, ',');
    total += std::stoull(t);
  }
  CHECK(rows == static_cast<int>(report.rows.size()));
  CHECK(total == 31);
  CHECK(inter.str().rfind("degree,size,dual_intersection,count\n", 0) == 0);
}
