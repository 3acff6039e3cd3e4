#pragma once

// Exhaustive verification suites for the three trace-form families and the
// linearized root-count lemma.
//
// Each suite walks a parameter grid (all (t, n, i) with 2nt <= max_m), builds
// every admissible instance and checks the predicted properties:
//
//   t1  f = gamma X + Tr(X^(2^i (q+1))), gamma in GF(q^2)^*:
//       PcN for c in GF(q^2) \ GF(2); uniformity <= 2 beyond GF(q^2) when gcd(i, t) = 1
//   t2  g = gamma X + Tr(X^(q^2+1)), gamma in GF(q)^*: PcN for c outside GF(2)
//   t3  h = gamma X + Tr(X^(2^i (q^2+1))), gamma in GF(q^2)^* with the odd-n
//       condition: same claims as t1, plus the condition implies bijectivity
//   lemma  X^(2^i) + alpha X + beta has 0, 1 or 2^gcd(i, t) roots in GF(2^t)
//
// Up to `exhaustive_max_m` every gamma and every c is checked; larger fields
// use evenly spaced deterministic samples of both.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cdu {

enum class Suite { T1, T2, T3, Lemma };
std::string_view to_string(Suite s) noexcept;
Suite parse_suite(std::string_view text);

struct Verdict {
  std::string group;     // grid point without gamma, e.g. "family=f t=2 n=2 i=1"
  std::string instance;  // full descriptor including gamma
  std::string claim;
  bool predicted = true;  // false: recorded observation, never a failure
  bool passed = true;
  std::uint32_t observed = 0;  // max uniformity, or max root count for the lemma
  std::uint32_t bound = 0;
  std::size_t checked = 0;  // c values or equations examined
  bool sampled = false;
  std::string detail;
};

struct VerificationSuiteResult {
  Suite suite = Suite::T1;
  unsigned max_m = 0;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  double elapsed_seconds = 0;

  std::size_t violations() const;
  bool passed() const { return violations() == 0; }
};

struct VerifyOptions {
  unsigned max_m = 12;
  unsigned exhaustive_max_m = 8;
  std::size_t gamma_samples = 4;
  std::size_t c_samples = 8;
  unsigned max_i = 3;
  // Lemma grid: t <= min(max_m, lemma_max_t), i <= lemma_max_i.
  unsigned lemma_max_t = 12;
  unsigned lemma_max_i = 6;
  unsigned threads = 1;
};

VerificationSuiteResult run_suite(Suite suite, const VerifyOptions& options = {});

// Evenly spaced deterministic subset of at most `count` items, order kept.
template <typename T>
std::vector<T> spread_sample(const std::vector<T>& items, std::size_t count) {
  if (items.size() <= count) return items;
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(items[j * items.size() / count]);
  return out;
}

}  // namespace cdu
