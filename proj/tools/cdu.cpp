// cdu: construct trace-form permutations over GF(2^m) and measure their
// c-differential uniformity.
//
//   cdu analyze family=g t=2 n=1 gamma=1 c=all
//   cdu verify --suite t1 --max-m 8
//   cdu ddt family=f t=2 n=1 i=1 gamma=g c=g --out table.csv
//   cdu lemma --t 4 --i 2 --alpha 1 --beta 0
//   cdu scan-gamma family=h t=2 n=1 i=1 c=all

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdu/cdiff.hpp"
#include "cdu/families.hpp"
#include "cdu/linsolve.hpp"
#include "cdu/report.hpp"
#include "cdu/verify.hpp"

namespace {

using namespace cdu;

constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;

struct CommonArgs {
  std::vector<std::string> assignments;
  std::optional<std::string> family, gamma, c, exclude;
  std::optional<unsigned> t, n, i;
  std::optional<std::uint64_t> k;
  std::string out;
  std::string format = "report";
  bool override_h = false;
  bool omit_zero = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("assignments", args.assignments, "key=value parameters (family t n i k gamma c)");
  cmd->add_option("--family", args.family, "f | g | h | generic");
  cmd->add_option("--t", args.t, "q = 2^t");
  cmd->add_option("--n", args.n, "field is GF(q^(2n))");
  cmd->add_option("--i", args.i, "exponent shift 2^i (families f, h)");
  cmd->add_option("--k", args.k, "explicit exponent (generic)");
  cmd->add_option("--gamma", args.gamma, "gamma: decimal, 0x hex or g^k");
  cmd->add_option("--c", args.c, "element | all | subfield:<s> | comma list");
  cmd->add_option("--exclude", args.exclude, "comma list removed from c ranges (default 0,1)");
  cmd->add_option("--out", args.out, "output path (default stdout)");
  cmd->add_option("--format", args.format, "report | csv")
      ->check(CLI::IsMember({"report", "csv"}));
  cmd->add_flag("--override-h-precondition", args.override_h,
                "build h even when the odd-n gamma condition fails");
}

unsigned thread_count() {
  if (const char* env = std::getenv("CDU_THREADS")) return static_cast<unsigned>(std::atoi(env));
  return 0;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Resolved {
  FieldSpec field;
  FamilyParams params;
  std::map<std::string, std::string> kv;  // non-family keys, e.g. c
};

Resolved resolve(const CommonArgs& args) {
  std::map<std::string, std::string> kv;
  for (const auto& a : args.assignments) {
    for (auto& [key, value] : parse_assignments(a)) kv[key] = value;
  }
  if (args.family) kv["family"] = *args.family;
  if (args.t) kv["t"] = std::to_string(*args.t);
  if (args.n) kv["n"] = std::to_string(*args.n);
  if (args.i) kv["i"] = std::to_string(*args.i);
  if (args.k) kv["k"] = std::to_string(*args.k);
  if (args.gamma) kv["gamma"] = *args.gamma;
  if (args.c) kv["c"] = *args.c;
  if (args.exclude) kv["exclude"] = *args.exclude;
  if (!kv.contains("family")) throw PreconditionError("missing family (f, g, h or generic)");

  std::map<std::string, std::string> family_kv, rest;
  for (auto& [key, value] : kv) {
    (key == "c" || key == "exclude" ? rest : family_kv)[key] = value;
  }
  FieldSpec field = FieldSpec::make(assignments_degree(family_kv));
  FamilyParams params = resolve_family_params(family_kv, field);
  return {std::move(field), params, std::move(rest)};
}

struct CSelection {
  CRange range;
  std::vector<Word> exclusions;
};

CSelection resolve_c(const Resolved& r) {
  const auto it = r.kv.find("c");
  const std::string spec = it == r.kv.end() ? "all" : it->second;
  CSelection sel;
  bool is_range = true;
  if (spec == "all") {
    sel.range = AllElements{};
  } else if (spec.starts_with("subfield:")) {
    sel.range = SubfieldRange{static_cast<unsigned>(std::stoul(spec.substr(9)))};
  } else {
    std::vector<Word> cs;
    for (const auto& item : split_commas(spec)) cs.push_back(parse_element(r.field, item));
    sel.range = std::move(cs);
    is_range = false;
  }
  // Default exclusions only apply to ranges; an explicit list is taken as is.
  const auto ex = r.kv.find("exclude");
  if (ex != r.kv.end()) {
    for (const auto& item : split_commas(ex->second)) {
      sel.exclusions.push_back(parse_element(r.field, item));
    }
  } else if (is_range) {
    sel.exclusions = {0, 1};
  }
  return sel;
}

// Writes to --out or stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw std::runtime_error("cannot write output file: " + path);
}

int cmd_analyze(const CommonArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  const Resolved r = resolve(args);
  const auto table = build_family(r.field, r.params, BuildOptions{args.override_h});
  const auto sel = resolve_c(r);
  const auto reports = scan_c(table, sel.range, sel.exclusions, ScanOptions{thread_count()});
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (args.format == "csv") {
    std::ostringstream os;
    os << "c,uniformity,classification\n";
    for (const auto& rep : reports) {
      os << rep.c << ',' << rep.uniformity << ',' << to_string(rep.classification) << '\n';
    }
    emit(args.out, os.str());
  } else {
    emit(args.out, analysis_document(table, reports, elapsed).dump(2) + "\n");
  }
  return 0;
}

int cmd_ddt(const CommonArgs& args) {
  const Resolved r = resolve(args);
  const auto table = build_family(r.field, r.params, BuildOptions{args.override_h});
  const auto it = r.kv.find("c");
  if (it == r.kv.end()) throw PreconditionError("ddt needs a single c");
  const Word c = parse_element(r.field, it->second);
  std::ostringstream os;
  write_cddt_csv(os, table, c, args.omit_zero);
  emit(args.out, os.str());
  return 0;
}

int cmd_scan_gamma(const CommonArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  Resolved r = resolve(args);
  const auto sel = resolve_c(r);
  Json rows = Json::array();
  for (Word gamma : admissible_gammas(r.field, r.params.family, r.params.t)) {
    FamilyParams p = r.params;
    p.gamma = gamma;
    const auto table = build_family(r.field, p, BuildOptions{true});
    Json row;
    row["gamma"] = format_element(gamma);
    if (p.family == Family::H) {
      row["h_condition"] = check_h_permutation_condition(r.field, p.t, p.n, p.i, gamma);
    }
    const bool perm = is_permutation(table);
    row["permutation"] = perm;
    std::uint32_t worst = 0;
    for (const auto& rep : scan_c(table, sel.range, sel.exclusions, ScanOptions{thread_count()})) {
      worst = std::max(worst, rep.uniformity);
    }
    row["max_uniformity"] = worst;
    rows.push_back(std::move(row));
  }
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["field"] = {{"m", r.field.degree()}, {"modulus_hex", format_element(r.field.modulus())}};
  doc["params"] = format_family_params(r.params);
  doc["gammas"] = std::move(rows);
  doc["metadata"] = {
      {"elapsed_seconds",
       std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  emit(args.out, doc.dump(2) + "\n");
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  unsigned max_m = 12;
  unsigned exhaustive_max_m = 8;
  std::string out;
};

void print_matrix(const VerificationSuiteResult& result) {
  struct Row {
    std::size_t total = 0, passed = 0;
    std::uint32_t worst = 0, bound = 0;
    bool predicted = true, sampled = false;
    std::string first_failure;
  };
  std::vector<std::pair<std::string, Row>> rows;
  for (const auto& v : result.verdicts) {
    const std::string key = v.group + " | " + v.claim;
    auto it = std::find_if(rows.begin(), rows.end(), [&](auto& e) { return e.first == key; });
    if (it == rows.end()) it = rows.insert(rows.end(), {key, Row{}});
    Row& row = it->second;
    ++row.total;
    row.passed += v.passed;
    row.worst = std::max(row.worst, v.observed);
    row.bound = v.bound;
    row.predicted = v.predicted;
    row.sampled |= v.sampled;
    if (v.predicted && !v.passed && row.first_failure.empty()) {
      row.first_failure = v.instance + (v.detail.empty() ? "" : ": " + v.detail);
    }
  }
  for (const auto& [key, row] : rows) {
    const char* tag = !row.predicted ? "[info]" : row.passed == row.total ? "[PASS]" : "[FAIL]";
    std::cout << tag << ' ' << key << " | " << row.passed << '/' << row.total
              << " instances | max " << row.worst << " (bound " << row.bound << ')'
              << (row.sampled ? " sampled" : "") << '\n';
    if (row.predicted && !row.first_failure.empty()) {
      std::cout << "         counterexample: " << row.first_failure << '\n';
    }
  }
  for (const auto& note : result.notes) std::cout << "note: " << note << '\n';
  std::cout << "suite " << to_string(result.suite) << ": " << result.verdicts.size()
            << " verdicts, " << result.violations() << " violations, "
            << result.elapsed_seconds << " s\n";
}

int cmd_verify(const VerifyArgs& args) {
  std::vector<Suite> suites;
  if (args.suite == "all") {
    suites = {Suite::Lemma, Suite::T1, Suite::T2, Suite::T3};
  } else {
    suites = {parse_suite(args.suite)};
  }
  VerifyOptions options;
  options.max_m = args.max_m;
  options.exhaustive_max_m = args.exhaustive_max_m;
  options.threads = thread_count();
  Json docs = Json::array();
  bool ok = true;
  for (Suite s : suites) {
    const auto result = run_suite(s, options);
    print_matrix(result);
    ok &= result.passed();
    docs.push_back(suite_document(result));
  }
  if (!args.out.empty()) emit(args.out, (docs.size() == 1 ? docs[0] : docs).dump(2) + "\n");
  return ok ? 0 : kExitViolation;
}

struct LemmaArgs {
  unsigned t = 1;
  unsigned i = 1;
  std::string alpha = "1";
  std::string beta = "0";
};

int cmd_lemma(const LemmaArgs& args) {
  const FieldSpec field = FieldSpec::make(args.t);
  const AffineLinearizedEq eq{field, args.i, parse_element(field, args.alpha),
                              parse_element(field, args.beta)};
  const auto roots = solve_affine(eq);
  Json doc;
  doc["t"] = args.t;
  doc["i"] = args.i;
  doc["alpha"] = format_element(eq.alpha);
  doc["beta"] = format_element(eq.beta);
  Json list = Json::array();
  for (Word x : roots) list.push_back(format_element(x));
  doc["roots"] = std::move(list);
  doc["count"] = roots.size();
  doc["full_count"] = std::uint32_t{1} << std::gcd(args.i, args.t);
  std::cout << doc.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c-differential uniformity toolkit for trace-form maps over GF(2^m)"};
  app.require_subcommand(1);

  CommonArgs analyze_args, ddt_args, scan_args;
  auto* analyze = app.add_subcommand("analyze", "c-uniformity reports for one table");
  add_common(analyze, analyze_args);
  auto* ddt = app.add_subcommand("ddt", "dump the full c-DDT as CSV");
  add_common(ddt, ddt_args);
  ddt->add_flag("--omit-zero", ddt_args.omit_zero, "skip zero-count rows");
  auto* scan = app.add_subcommand("scan-gamma", "sweep every admissible gamma");
  add_common(scan, scan_args);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_args.suite, "t1 | t2 | t3 | lemma | all");
  verify->add_option("--max-m", verify_args.max_m, "largest field degree 2nt")
      ->check(CLI::Range(1u, kMaxDegree));
  verify->add_option("--exhaustive-max-m", verify_args.exhaustive_max_m,
                     "largest degree checked without sampling");
  verify->add_option("--out", verify_args.out, "write the JSON result here");

  LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand("lemma", "roots of X^(2^i) + alpha X + beta over GF(2^t)");
  lemma->add_option("--t", lemma_args.t)->check(CLI::Range(1u, kMaxSolveDegree));
  lemma->add_option("--i", lemma_args.i)->check(CLI::PositiveNumber);
  lemma->add_option("--alpha", lemma_args.alpha);
  lemma->add_option("--beta", lemma_args.beta);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_args);
    if (ddt->parsed()) return cmd_ddt(ddt_args);
    if (scan->parsed()) return cmd_scan_gamma(scan_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (lemma->parsed()) return cmd_lemma(lemma_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
