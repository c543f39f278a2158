#include "cdom/cli.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "cdom/canon.hpp"
#include "cdom/classify.hpp"
#include "cdom/io.hpp"
#include "cdom/laws.hpp"
#include "cdom/oracle.hpp"
#include "cdom/schemes.hpp"
#include "cdom/search.hpp"

namespace fs = std::filesystem;

namespace cdom::cli {

namespace {

// Thrown for bad arguments and unreadable or unwritable files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_orders(const CanonicalForm& f)
{
  const auto& table = perm_table(f.degree);
  std::string s = "{";
  for (Rank r : f.ranks) {
    if (s.size() > 1)
      s += ' ';
    for (int j = 0; j < f.degree; ++j)
      s += static_cast<char>('1' + table.slot(r, j));
  }
  return s + "}";
}

void print_stats(std::ostream& out, const SearchStats& s)
{
  out << "nodes " << s.nodes << ", leaves " << s.leaves << ", forced " << s.forced << ", pruned " << s.pruned
      << ", cut " << s.cut << "\n";
}

struct Totals {
  std::size_t classes = 0;
  std::size_t reflexive = 0;
  std::size_t max_size = 0;
};

// Streams the collector's classes into `path` (text) and, when asked, a
// binary sidecar `path.bin`. The body goes to a temporary first because the
// header carries the class count.
Totals write_outputs(ClassCollector& collector, const std::string& path, bool binary)
{
  const int n = collector.degree();
  const std::string body_path = path + ".part";
  const std::string bin_path = path + ".bin";
  Totals totals;
  {
    std::ofstream body(body_path);
    if (!body)
      throw UsageError("cannot write " + body_path);
    std::ofstream bin;
    if (binary) {
      bin.open(bin_path, std::ios::binary);
      if (!bin)
        throw UsageError("cannot write " + bin_path);
      write_binary_header(bin, n, 0);
    }
    collector.finish([&](const std::vector<Rank>& ranks) {
      write_class_block(body, n, ranks, totals.classes == 0);
      if (binary)
        write_rank_record(bin, ranks);
      ++totals.classes;
      totals.max_size = std::max(totals.max_size, ranks.size());
      const Domain d = Domain::from_ranks(n, ranks);
      if (canonical_form(conjugate(d)).ranks == ranks)
        ++totals.reflexive;
    });
    if (binary) {
      bin.seekp(0);
      write_binary_header(bin, n, totals.classes);
      if (!bin)
        throw std::runtime_error("failed writing " + bin_path);
    }
    if (!body)
      throw std::runtime_error("failed writing " + body_path);
  }
  {
    std::ofstream out(path);
    if (!out)
      throw UsageError("cannot write " + path);
    write_class_header(out, n, totals.classes);
    std::ifstream body(body_path);
    out << body.rdbuf();
    if (!out)
      throw std::runtime_error("failed writing " + path);
  }
  fs::remove(body_path);
  return totals;
}

std::string options_line(const SearchOptions& o)
{
  return "# prune=" + std::to_string(o.prune) + " force=" + std::to_string(o.force) + " law_order=" + kLawOrderId;
}

// Returns false when the run stopped before every frontier node was done.
bool run_checkpointed(const EnumerateArgs& args, const SearchOptions& search, ClassCollector& result,
                      SearchStats& stats, std::ostream& out)
{
  const int n = args.degree;
  const fs::path dir = args.checkpoint;
  fs::create_directories(dir);
  const fs::path frontier_path = dir / "frontier.txt";
  const fs::path progress_path = dir / "progress.log";
  const fs::path classes_path = dir / "classes.bin";

  Frontier frontier;
  if (fs::exists(frontier_path)) {
    std::ifstream in(frontier_path);
    try {
      frontier = read_frontier(in);
    } catch (const std::exception& e) {
      throw UsageError(frontier_path.string() + ": " + e.what());
    }
    if (frontier.degree != n)
      throw UsageError("checkpoint " + dir.string() + " belongs to degree " + std::to_string(frontier.degree));
  } else {
    const int depth = args.frontier_depth >= 0
                          ? args.frontier_depth
                          : default_frontier_depth(n, std::max<std::size_t>(64, 8u * args.jobs), search);
    frontier = split_frontier(n, depth, search);
    std::ofstream f(frontier_path);
    write_frontier(f, frontier);
    if (!f)
      throw UsageError("cannot write " + frontier_path.string());
  }

  // Progress lines are "done <node> <end offset in classes.bin>". A torn last
  // line or a classes.bin longer than the last recorded offset is what an
  // interrupted run leaves behind; both are cut back.
  std::set<std::size_t> done;
  std::uintmax_t offset = 0;
  std::vector<std::string> kept;
  const std::string expected_header = options_line(search);
  if (fs::exists(progress_path)) {
    std::ifstream in(progress_path);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (first) {
        first = false;
        if (line != expected_header)
          throw UsageError("checkpoint was made with different search options: " + line);
        continue;
      }
      std::istringstream fields(line);
      std::string tag, rest;
      std::size_t node = 0;
      std::uintmax_t end = 0;
      if (in.eof() || !(fields >> tag >> node >> end) || tag != "done" || (fields >> rest) ||
          node >= frontier.nodes.size() || end < offset)
        break;
      done.insert(node);
      offset = end;
      kept.push_back(line);
    }
  }
  {
    std::ofstream progress(progress_path, std::ios::trunc);
    progress << expected_header << "\n";
    for (const auto& l : kept)
      progress << l << "\n";
  }
  if (!fs::exists(classes_path))
    std::ofstream(classes_path, std::ios::binary);
  if (fs::file_size(classes_path) < offset)
    throw UsageError(classes_path.string() + " is shorter than the progress log says");
  fs::resize_file(classes_path, offset);

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < frontier.nodes.size(); ++i)
    if (!done.count(i))
      todo.push_back(i);
  const std::size_t limit = args.stop_after ? std::min(args.stop_after, todo.size()) : todo.size();
  out << "checkpoint " << dir.string() << ": " << done.size() << " of " << frontier.nodes.size()
      << " frontier nodes already done\n";

  std::ofstream classes(classes_path, std::ios::binary | std::ios::app);
  std::ofstream progress(progress_path, std::ios::app);
  std::mutex io;
  std::atomic<std::size_t> next{0};
  std::vector<SearchStats> per_worker(std::max(args.jobs, 1));
  auto work = [&](int w) {
    for (std::size_t k = next++; k < limit; k = next++) {
      const std::size_t node = todo[k];
      ClassCollector local(n, args.memory_limit, dir);
      resume(frontier.nodes[node], [&](std::span<const std::uint64_t> set) { local.add_leaf(set); }, search,
             &per_worker[w]);
      std::vector<std::vector<Rank>> forms;
      local.finish([&](const std::vector<Rank>& r) { forms.push_back(r); });
      std::lock_guard lock(io);
      for (const auto& f : forms)
        write_rank_record(classes, f);
      classes.flush();
      progress << "done " << node << " " << static_cast<std::uintmax_t>(classes.tellp()) << "\n";
      progress.flush();
      if (!classes || !progress)
        throw std::runtime_error("failed writing checkpoint in " + dir.string());
    }
  };
  if (per_worker.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < static_cast<int>(per_worker.size()); ++w)
      pool.emplace_back(work, w);
    for (auto& t : pool)
      t.join();
  }
  for (const auto& s : per_worker)
    stats += s;
  classes.close();
  progress.close();

  const std::size_t finished = done.size() + limit;
  if (finished < frontier.nodes.size()) {
    out << "stopped with " << finished << " of " << frontier.nodes.size()
        << " frontier nodes done; rerun the same command to continue\n";
    return false;
  }
  std::ifstream in(classes_path, std::ios::binary);
  std::vector<Rank> ranks;
  while (read_rank_record(in, ranks))
    result.add_canonical(ranks);
  return true;
}

int enumerate_impl(const EnumerateArgs& args, std::ostream& out)
{
  const int n = args.degree;
  if (n < 3 || n > 7)
    throw UsageError("degree must be between 3 and 7");
  if (args.out.empty())
    throw UsageError("--out is required");
  if (args.jobs < 1)
    throw UsageError("--jobs must be positive");
  if (n == 7) {
    if (!args.i_have_time)
      throw UsageError("degree 7 runs for days and needs --i-have-time");
    if (args.checkpoint.empty())
      throw UsageError("degree 7 needs --checkpoint DIR");
  }
  if (args.stop_after && args.checkpoint.empty())
    throw UsageError("--stop-after needs --checkpoint");
  if (args.frontier_depth > static_cast<int>(binomial(n, 3)))
    throw UsageError("--frontier-depth exceeds the number of triples");
  {
    std::ofstream probe(args.out, std::ios::app);
    if (!probe)
      throw UsageError("cannot write " + args.out);
  }

  SearchOptions search;
  search.prune = args.prune;
  search.force = !args.no_force;

  ClassCollector collector(n, args.memory_limit);
  SearchStats stats;
  if (!args.checkpoint.empty()) {
    if (!run_checkpointed(args, search, collector, stats, out)) {
      print_stats(out, stats);
      return kSuccess;
    }
  } else {
    std::vector<ClassCollector> parts;
    for (int w = 0; w < args.jobs; ++w)
      parts.emplace_back(n, args.memory_limit);
    EnumerateOptions opts;
    opts.search = search;
    opts.workers = args.jobs;
    opts.frontier_depth = args.frontier_depth;
    stats = enumerate_mucds(n, opts, [&](int w, std::span<const std::uint64_t> set) { parts[w].add_leaf(set); });
    for (auto& p : parts)
      collector.merge(std::move(p));
  }
  const Totals t = write_outputs(collector, args.out, args.binary || n >= 6);
  out << "degree " << n << ": " << t.classes << " classes, " << (t.classes + t.reflexive) / 2 << " flip classes, max size "
      << t.max_size << "\n";
  print_stats(out, stats);
  return kSuccess;
}

ClassFile read_input(const std::string& path)
{
  try {
    return read_class_file(path);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::vector<CanonicalForm> canonical_classes(const ClassFile& file, std::size_t* duplicates)
{
  std::set<CanonicalForm> seen;
  for (const auto& d : file.domains)
    seen.insert(canonical_form(d));
  if (duplicates)
    *duplicates = file.domains.size() - seen.size();
  return {seen.begin(), seen.end()};
}

int classify_impl(const std::string& in, const std::string& prefix, int jobs, std::ostream& out, std::ostream& err)
{
  if (prefix.empty())
    throw UsageError("--out is required");
  const ClassFile file = read_input(in);
  std::size_t duplicates = 0;
  const auto forms = canonical_classes(file, &duplicates);
  const DegreeReport report = classify_all(forms, jobs);

  const std::string sizes = prefix + "_sizes.csv";
  const std::string inter = prefix + "_intersections.csv";
  {
    std::ofstream s(sizes);
    if (!s)
      throw UsageError("cannot write " + sizes);
    write_size_csv(s, report);
    std::ofstream i(inter);
    if (!i)
      throw UsageError("cannot write " + inter);
    write_intersection_csv(i, report);
  }
  out << "degree " << report.degree << ": " << report.classes << " classes, " << report.flip_classes
      << " flip classes, max size " << report.max_size << "\n";
  out << "mean " << report.mean << ", variance " << report.variance << ", skewness " << report.skewness << "\n";
  out << "wrote " << sizes << " and " << inter << "\n";
  int status = kSuccess;
  if (duplicates) {
    err << "error: " << duplicates << " blocks repeat an earlier class\n";
    status = kFailure;
  }
  for (const auto& v : report.violations) {
    err << "invariant violated: " << v << "\n";
    status = kFailure;
  }
  return status;
}

int verify_impl(int n, const std::string& against, std::ostream& out)
{
  if (n < 3 || n > 5)
    throw UsageError("verify supports degrees 3 to 5");
  const auto oracle = class_set(brute_force_mucds(n));
  std::vector<CanonicalForm> actual;
  std::string label;
  if (against.empty()) {
    ClassCollector collector(n);
    EnumerateOptions opts;
    enumerate_mucds(n, opts, [&](int, std::span<const std::uint64_t> set) { collector.add_leaf(set); });
    actual = collector.finish();
    label = "search";
  } else {
    const ClassFile file = read_input(against);
    if (file.degree != n)
      throw UsageError(against + " has degree " + std::to_string(file.degree));
    actual = canonical_classes(file, nullptr);
    label = against;
  }
  const ClassDiff diff = compare_classes(oracle, actual);
  out << "degree " << n << ": oracle " << oracle.size() << " classes, " << label << " " << actual.size()
      << " classes: " << (diff.empty() ? "pass" : "FAIL") << "\n";
  for (const auto& f : diff.missing)
    out << "missing " << format_orders(f) << "\n";
  for (const auto& f : diff.extra)
    out << "extra " << format_orders(f) << "\n";
  return diff.empty() ? kSuccess : kFailure;
}

Domain single_domain(const std::string& path)
{
  const ClassFile file = read_input(path);
  if (file.domains.size() != 1)
    throw UsageError(path + " must hold exactly one domain");
  return file.domains.front();
}

int scheme_impl(const SchemeArgs& args, std::ostream& out, std::ostream& err)
{
  Domain d;
  std::string name;
  if (args.kind == "alternating") {
    if (args.degree < 3 || args.degree > kMaxDegree)
      throw UsageError("alternating scheme needs 3 <= degree <= 8");
    if (args.variant != "A" && args.variant != "B")
      throw UsageError("--variant must be A or B");
    d = alternating(args.degree, args.variant == "A" ? AlternatingVariant::A : AlternatingVariant::B);
    name = "alternating " + args.variant;
  } else if (args.kind == "black") {
    if (args.degree < 2 || args.degree > kMaxDegree)
      throw UsageError("black scheme needs 2 <= degree <= 8");
    d = black_single_peaked(args.degree);
    name = "black single-peaked";
  } else if (args.kind == "replacement") {
    if (args.left.empty() || args.right.empty())
      throw UsageError("replacement needs --left and --right");
    const Domain left = single_domain(args.left);
    const Domain right = single_domain(args.right);
    if (left.degree() + right.degree() - 1 > kMaxDegree)
      throw UsageError("replacement degree exceeds 8");
    if (left.degree() < 2)
      throw UsageError("replacement needs a left domain of degree >= 2");
    d = replacement(left, right);
    name = "replacement";
  } else {
    throw UsageError("unknown scheme '" + args.kind + "'");
  }

  std::ostream* report = &out;
  std::ofstream file;
  const std::vector<Domain> one{d};
  if (args.out == "-") {
    write_class_file(out, d.degree(), one);
    report = &err;
  } else {
    file.open(args.out);
    if (!file)
      throw UsageError("cannot write " + args.out);
    write_class_file(file, d.degree(), one);
  }

  const bool cd = is_cd(d);
  *report << name << ", degree " << d.degree() << ": size " << d.size() << ", cd " << (cd ? "yes" : "no")
          << ", maximal " << (cd && is_maximal_cd(d) ? "yes" : "no") << "\n";
  if (d.degree() >= 3) {
    const ClassRecord r = classify(d);
    *report << "connected=" << r.connected << " peak_pit=" << r.peak_pit << " normal=" << r.normal
            << " symmetric=" << r.symmetric << " self_dual=" << r.self_dual << " copious=" << r.copious
            << " ample=" << r.ample << " fixing=" << r.fixing << " reducible=" << r.reducible
            << " arrow_sp=" << r.arrow_sp << " usp=" << r.usp << " nuspd=" << r.nuspd << " sp_tree=" << r.sp_tree
            << " sp_star=" << r.sp_star << " dual_intersection=" << r.dual_intersection
            << " core_order=" << r.core_order << "\n";
  }
  return cd ? kSuccess : kFailure;
}

int canon_impl(const std::string& in, const std::string& out_path, std::ostream& out)
{
  if (out_path.empty())
    throw UsageError("--out is required");
  const ClassFile file = read_input(in);
  const auto forms = canonical_classes(file, nullptr);
  std::ofstream o(out_path);
  if (!o)
    throw UsageError("cannot write " + out_path);
  write_class_file(o, forms);
  out << file.domains.size() << " blocks, " << forms.size() << " classes\n";
  return kSuccess;
}

int stats_impl(const std::string& in, std::ostream& out)
{
  const ClassFile file = read_input(in);
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& d : file.domains)
    ++sizes[d.size()];
  double k = static_cast<double>(file.domains.size()), mean = 0, m2 = 0, m3 = 0;
  for (auto [s, c] : sizes)
    mean += static_cast<double>(s) * static_cast<double>(c);
  mean /= k;
  for (auto [s, c] : sizes) {
    const double dev = static_cast<double>(s) - mean;
    m2 += dev * dev * static_cast<double>(c) / k;
    m3 += dev * dev * dev * static_cast<double>(c) / k;
  }
  out << "degree " << file.degree << ": " << file.domains.size() << " domains, max size " << sizes.rbegin()->first
      << "\n";
  out << "mean " << mean << ", variance " << m2 << ", skewness " << (m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0) << "\n";
  out << "size,count\n";
  for (auto [s, c] : sizes)
    out << s << "," << c << "\n";
  return kSuccess;
}

template <class F>
int guarded(std::ostream& err, F&& body)
{
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] { return enumerate_impl(args, out); });
}

int cmd_classify(const std::string& in, const std::string& prefix, int jobs, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] { return classify_impl(in, prefix, jobs, out, err); });
}

int cmd_verify(int degree, const std::string& against, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] { return verify_impl(degree, against, out); });
}

int cmd_scheme(const SchemeArgs& args, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] { return scheme_impl(args, out, err); });
}

int cmd_canon(const std::string& in, const std::string& out_path, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] { return canon_impl(in, out_path, out); });
}

int cmd_stats(const std::string& in, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] { return stats_impl(in, out); });
}

}  // namespace cdom::cli
