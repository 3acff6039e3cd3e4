#pragma once

// c-differential analysis: for a map f on GF(2^m) and a multiplier c, the
// c-derivative is x -> f(x + a) + c f(x), the c-DDT entry (a, b) counts its
// solutions x equal to b, and the c-differential uniformity is the largest
// entry (rows with a = 0 are skipped only when c = 1).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <variant>
#include <vector>

#include "cdu/families.hpp"
#include "cdu/field.hpp"

namespace cdu {

inline constexpr std::size_t kMaxWitnesses = 8;

enum class Classification { PCN, APCN, Other };
std::string_view to_string(Classification c) noexcept;

struct Witness {
  Word a;
  Word b;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CUniformityReport {
  Word c = 0;
  std::uint32_t uniformity = 0;
  Classification classification = Classification::Other;
  // entry value -> number of (a, b) pairs with that entry; only values >= 1.
  std::map<std::uint32_t, std::uint64_t> spectrum;
  // First (a, b) pairs, in lexicographic order, attaining the maximum.
  std::vector<Witness> witnesses;
  // c = 1: the ordinary differential uniformity (a = 0 excluded).
  bool classical_ddt = false;
};

Word c_derivative(const FunctionTable& f, Word c, Word a, Word x) noexcept;
std::uint32_t cddt_entry(const FunctionTable& f, Word c, Word a, Word b);
// Entries (a, b) for every b, indexed by b.
std::vector<std::uint32_t> cddt_row(const FunctionTable& f, Word c, Word a);
CUniformityReport c_uniformity(const FunctionTable& f, Word c);

struct AllElements {};
struct SubfieldRange {
  unsigned s;
};
using CRange = std::variant<AllElements, SubfieldRange, std::vector<Word>>;

struct ScanOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
};

// One report per c in the range minus exclusions, ascending by encoding.
std::vector<CUniformityReport> scan_c(const FunctionTable& f, const CRange& range,
                                      const std::vector<Word>& exclusions,
                                      const ScanOptions& options = {});

// Elements of `range` in ascending order, duplicates removed.
std::vector<Word> expand_range(const FieldSpec& field, const CRange& range);

enum class TheoremCase { InF2, InFqMinusF2, InFq2MinusFq, BeyondFq2 };
std::string_view to_string(TheoremCase tc) noexcept;

// Position of c in the chain GF(2) < GF(q) < GF(q^2) < GF(2^m), q = 2^t.
TheoremCase classify_theorem_case(const FieldSpec& field, unsigned t, Word c);

// Writes the c-DDT as CSV "a,b,count" in lexicographic (a, b) order.
void write_cddt_csv(std::ostream& out, const FunctionTable& f, Word c, bool omit_zero = false);

}  // namespace cdu
