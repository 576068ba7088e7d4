#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "sfold/bench.hpp"
#include "sfold/decide2d.hpp"
#include "sfold/oracle.hpp"
#include "sfold/satgen.hpp"

namespace {

constexpr int kExitFoldable = 0;
constexpr int kExitUnfoldable = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sfold::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sfold::Error("cannot write file: " + path);
  out << content;
}

bool looks_like_2d(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return tok == "PAPER";
  }
  return false;
}

using AnyPattern = std::variant<sfold::Pattern1D, sfold::CreasePattern2D>;

AnyPattern load_pattern(const std::string& path) {
  std::string text = read_file(path);
  if (looks_like_2d(text)) return sfold::parse_pattern2d(text);
  // strip comment lines for the 1D format too
  std::istringstream in(text);
  std::string line, clean;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    clean += line;
    clean += '\n';
  }
  return sfold::parse_pattern1d(clean);
}

// A fold step: either a 1D crease index ("C 3") or a 2D fold line.
using FoldStep = std::variant<int, sfold::FoldLine>;

FoldStep parse_fold_step(const std::string& spec) {
  std::istringstream in(spec);
  std::string head;
  in >> head;
  if (head == "C") {
    int idx;
    if (!(in >> idx) || idx < 1) throw sfold::ParseError("bad crease step: " + spec);
    return idx;
  }
  return sfold::parse_fold_line(spec);
}

std::vector<FoldStep> parse_witness_file(const std::string& text) {
  std::vector<FoldStep> steps;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace((unsigned char)c)) blank = false;
    if (blank) continue;
    steps.push_back(parse_fold_step(line));
  }
  return steps;
}

void print_1d_witness(const std::vector<int>& w) {
  for (int c : w) std::cout << "C " << c << "\n";
}

void print_2d_witness(const std::vector<sfold::FoldLine>& w) {
  for (auto& f : w) std::cout << sfold::format_fold_line(f) << "\n";
}

int cmd_decide1d(const std::string& file) {
  auto pat = load_pattern(file);
  if (!std::holds_alternative<sfold::Pattern1D>(pat))
    throw sfold::ParseError("decide1d expects a 1D pattern file");
  auto& p = std::get<sfold::Pattern1D>(pat);
  sfold::Decision1D d = sfold::decide_1d(p);
  std::cout << (d.foldable ? "foldable" : "unfoldable") << "\n";
  print_1d_witness(d.witness);
  return d.foldable ? kExitFoldable : kExitUnfoldable;
}

int cmd_decide2d(const std::string& file) {
  auto pat = load_pattern(file);
  if (!std::holds_alternative<sfold::CreasePattern2D>(pat))
    throw sfold::ParseError("decide2d expects a 2D pattern file");
  auto& p = std::get<sfold::CreasePattern2D>(pat);
  sfold::Decision2D d = sfold::decide_unassigned_2d(p);
  std::cout << (d.foldable ? "foldable" : "unfoldable") << "\n";
  print_2d_witness(d.witness);
  return d.foldable ? kExitFoldable : kExitUnfoldable;
}

int cmd_check_fold(const std::string& file, const std::string& spec) {
  auto pat = load_pattern(file);
  FoldStep step = parse_fold_step(spec);
  if (std::holds_alternative<sfold::Pattern1D>(pat)) {
    if (!std::holds_alternative<int>(step))
      throw sfold::ParseError("1D patterns fold at crease steps: 'C <index>'");
    auto rep = sfold::legal_fold_1d(std::get<sfold::Pattern1D>(pat), std::get<int>(step));
    std::cout << "cond1 pass\ncond2 " << (rep.cond2 ? "pass" : "fail");
    if (rep.uncovered_point) std::cout << " (facet point at " << rep.uncovered_point->str() << ")";
    std::cout << "\ncond3 pass\ncond4 " << (rep.cond4 ? "pass" : "fail");
    if (rep.conflict)
      std::cout << " (creases " << rep.conflict->first << " and " << rep.conflict->second << ")";
    std::cout << "\n" << (rep.legal() ? "legal" : "illegal") << "\n";
    return rep.legal() ? kExitFoldable : kExitUnfoldable;
  }
  if (!std::holds_alternative<sfold::FoldLine>(step))
    throw sfold::ParseError("2D patterns fold at lines: 'V x=<r> move=<low|high>'");
  auto rep =
      sfold::check_fold_legality_2d(std::get<sfold::CreasePattern2D>(pat), std::get<sfold::FoldLine>(step));
  auto show = [](const char* name, const sfold::CondResult& c) {
    std::cout << name << " " << (c.pass ? "pass" : "fail");
    if (c.point) std::cout << " (point " << c.point->x.str() << " " << c.point->y.str() << ")";
    std::cout << "\n";
  };
  show("cond1", rep.cond1);
  show("cond2", rep.cond2);
  show("cond3", rep.cond3);
  show("cond4", rep.cond4);
  std::cout << (rep.legal() ? "legal" : "illegal") << "\n";
  return rep.legal() ? kExitFoldable : kExitUnfoldable;
}

int cmd_fold(const std::string& file, const std::string& spec, const std::string& out) {
  auto pat = load_pattern(file);
  FoldStep step = parse_fold_step(spec);
  try {
    if (std::holds_alternative<sfold::Pattern1D>(pat)) {
      if (!std::holds_alternative<int>(step))
        throw sfold::ParseError("1D patterns fold at crease steps: 'C <index>'");
      auto folded = sfold::apply_fold_1d(std::get<sfold::Pattern1D>(pat), std::get<int>(step));
      write_file(out, sfold::format_pattern1d(folded) + "\n");
    } else {
      if (!std::holds_alternative<sfold::FoldLine>(step))
        throw sfold::ParseError("2D patterns fold at lines: 'V x=<r> move=<low|high>'");
      auto folded =
          sfold::apply_fold_2d(std::get<sfold::CreasePattern2D>(pat), std::get<sfold::FoldLine>(step));
      write_file(out, sfold::format_pattern2d(folded));
    }
  } catch (const sfold::IllegalFoldError& e) {
    std::cerr << e.what() << "\n";
    return kExitUnfoldable;
  }
  return kExitFoldable;
}

int cmd_oracle(const std::string& file, const sfold::SearchLimits& lim) {
  auto pat = load_pattern(file);
  if (std::holds_alternative<sfold::Pattern1D>(pat)) {
    auto res = sfold::oracle_1d(std::get<sfold::Pattern1D>(pat));
    if (res.verdict == sfold::Verdict::Foldable) {
      std::cout << "foldable\n";
      print_1d_witness(res.witness);
      return kExitFoldable;
    }
    std::cout << "unfoldable\n";
    return kExitUnfoldable;
  }
  auto res = sfold::oracle_2d(std::get<sfold::CreasePattern2D>(pat), lim);
  switch (res.verdict) {
    case sfold::Verdict::Foldable:
      std::cout << "foldable\n";
      print_2d_witness(res.witness);
      return kExitFoldable;
    case sfold::Verdict::Unfoldable:
      std::cout << "unfoldable\n";
      return kExitUnfoldable;
    default:
      std::cout << "unknown\n";
      return kExitUnknown;
  }
}

int cmd_verify(const std::string& file, const std::string& witness_file) {
  auto pat = load_pattern(file);
  auto steps = parse_witness_file(read_file(witness_file));
  sfold::VerifyResult res;
  if (std::holds_alternative<sfold::Pattern1D>(pat)) {
    std::vector<int> w;
    for (auto& s : steps) {
      if (!std::holds_alternative<int>(s))
        throw sfold::ParseError("1D witness must contain 'C <index>' steps only");
      w.push_back(std::get<int>(s));
    }
    res = sfold::verify_witness(std::get<sfold::Pattern1D>(pat), w);
  } else {
    std::vector<sfold::FoldLine> w;
    for (auto& s : steps) {
      if (!std::holds_alternative<sfold::FoldLine>(s))
        throw sfold::ParseError("2D witness must contain fold lines only");
      w.push_back(std::get<sfold::FoldLine>(s));
    }
    res = sfold::verify_witness(std::get<sfold::CreasePattern2D>(pat), w);
  }
  if (res.ok) {
    std::cout << "ok\n";
    return kExitFoldable;
  }
  std::cout << "invalid";
  if (res.failed_step) std::cout << " at step " << *res.failed_step;
  std::cout << ": " << res.reason << "\n";
  return kExitUnfoldable;
}

int cmd_gen3sat(const std::string& cnf_file, const std::string& out, bool dump_runs) {
  auto cnf = sfold::parse_dimacs(read_file(cnf_file));
  auto inst = sfold::generate_instance(cnf);
  write_file(out, sfold::format_pattern2d(inst.pattern));
  if (dump_runs) std::cout << sfold::format_runs(inst.runs);
  return kExitFoldable;
}

int cmd_bench(const std::string& sizes_csv, const std::string& family_name, std::uint64_t seed,
              std::optional<std::size_t> baseline_cap) {
  auto family = sfold::bench_family_from_name(family_name);
  if (!family) throw sfold::ParseError("unknown family: " + family_name);
  std::vector<std::size_t> sizes;
  std::istringstream in(sizes_csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    long long v = std::stoll(tok);
    if (v < 1) throw sfold::ParseError("sizes must be positive");
    sizes.push_back((std::size_t)v);
  }
  if (sizes.empty()) throw sfold::ParseError("no sizes given");
  auto rows = sfold::run_bench_1d(sizes, *family, seed, baseline_cap);
  std::cout << sfold::bench_csv(rows);
  return kExitFoldable;
}

int cmd_conjecture(int max_n, const std::string& lengths_csv) {
  sfold::ConjectureFamily fam;
  fam.max_n = max_n;
  if (!lengths_csv.empty()) {
    fam.lengths.clear();
    std::istringstream in(lengths_csv);
    std::string tok;
    while (std::getline(in, tok, ',')) fam.lengths.push_back(sfold::Rat::parse(tok));
  }
  auto rep = sfold::conjecture_check_1d(fam);
  std::cout << "patterns checked: " << rep.patterns_checked << "\n";
  std::cout << "disagreements: " << rep.disagreements.size() << "\n";
  for (auto& c : rep.disagreements) {
    std::cout << "  pattern '" << sfold::format_pattern1d(c.pattern) << "' greedy="
              << (c.greedy_foldable ? "foldable" : "unfoldable") << " oracle="
              << (c.oracle_verdict == sfold::Verdict::Foldable ? "foldable" : "unfoldable") << "\n";
  }
  return kExitFoldable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infinite all-layers simple-fold toolkit"};
  app.require_subcommand(1);

  std::string file, spec, out, witness_file, cnf_file;
  std::string sizes_csv, family_name = "accordion", lengths_csv;
  std::uint64_t seed = 0;
  int max_n = 5;
  bool dump_runs = false;
  std::optional<std::size_t> baseline_cap;
  sfold::SearchLimits lim;

  auto* decide1d = app.add_subcommand("decide1d", "decide 1D foldability in linear time");
  decide1d->add_option("FILE", file)->required();

  auto* decide2d = app.add_subcommand("decide2d", "decide unassigned 2D foldability");
  decide2d->add_option("FILE", file)->required();

  auto* check = app.add_subcommand("check-fold", "report the legality of one fold");
  check->add_option("FILE", file)->required();
  check->add_option("--line", spec, "fold step: 'C <k>' or 'V x=<r> move=<low|high>'")->required();

  auto* fold = app.add_subcommand("fold", "apply one fold and write the result");
  fold->add_option("FILE", file)->required();
  fold->add_option("--line", spec)->required();
  fold->add_option("-o,--output", out)->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive fold-sequence search");
  oracle->add_option("FILE", file)->required();
  oracle->add_option("--max-states", lim.max_states);
  oracle->add_option("--max-depth", lim.max_depth);
  oracle->add_option("--timeout-ms", lim.max_millis);

  auto* verify = app.add_subcommand("verify", "replay a fold witness");
  verify->add_option("FILE", file)->required();
  verify->add_option("--witness", witness_file)->required();

  auto* gen = app.add_subcommand("gen3sat", "generate a hardness instance from DIMACS CNF");
  gen->add_option("CNF", cnf_file)->required();
  gen->add_option("-o,--output", out)->required();
  gen->add_flag("--dump-runs", dump_runs, "print the assignment runs");

  auto* bench = app.add_subcommand("bench1d", "compare decide1d against the rescanning baseline");
  bench->add_option("--sizes", sizes_csv)->required();
  bench->add_option("--family", family_name)->required();
  bench->add_option("--seed", seed);
  bench->add_option("--baseline-cap", baseline_cap, "skip the baseline above this size");

  auto* conj = app.add_subcommand("conjecture1d", "greedy vs oracle on partially assigned patterns");
  conj->add_option("--max-n", max_n);
  conj->add_option("--lengths", lengths_csv, "comma-separated segment lengths (default 1,2)");

  try {
    app.parse(argc, argv);
    if (decide1d->parsed()) return cmd_decide1d(file);
    if (decide2d->parsed()) return cmd_decide2d(file);
    if (check->parsed()) return cmd_check_fold(file, spec);
    if (fold->parsed()) return cmd_fold(file, spec, out);
    if (oracle->parsed()) return cmd_oracle(file, lim);
    if (verify->parsed()) return cmd_verify(file, witness_file);
    if (gen->parsed()) return cmd_gen3sat(cnf_file, out, dump_runs);
    if (bench->parsed()) return cmd_bench(sizes_csv, family_name, seed, baseline_cap);
    if (conj->parsed()) return cmd_conjecture(max_n, lengths_csv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const sfold::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const sfold::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const sfold::UnsupportedPartialAssignment& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const sfold::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
