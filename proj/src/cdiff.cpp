#include "cdu/cdiff.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

namespace cdu {

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::PCN: return "PcN";
    case Classification::APCN: return "APcN";
    case Classification::Other: return "other";
  }
  return "?";
}

std::string_view to_string(TheoremCase tc) noexcept {
  switch (tc) {
    case TheoremCase::InF2: return "in_F2";
    case TheoremCase::InFqMinusF2: return "in_Fq_minus_F2";
    case TheoremCase::InFq2MinusFq: return "in_Fq2_minus_Fq";
    case TheoremCase::BeyondFq2: return "beyond_Fq2";
  }
  return "?";
}

Word c_derivative(const FunctionTable& f, Word c, Word a, Word x) noexcept {
  return f[x ^ a] ^ f.field().mul(c, f[x]);
}

std::vector<std::uint32_t> cddt_row(const FunctionTable& f, Word c, Word a) {
  const FieldSpec& field = f.field();
  field.require_element(c);
  field.require_element(a);
  std::vector<std::uint32_t> row(field.size(), 0);
  for (Word x = 0; x < field.size(); ++x) ++row[c_derivative(f, c, a, x)];
  return row;
}

std::uint32_t cddt_entry(const FunctionTable& f, Word c, Word a, Word b) {
  const FieldSpec& field = f.field();
  field.require_element(c);
  field.require_element(a);
  field.require_element(b);
  std::uint32_t count = 0;
  for (Word x = 0; x < field.size(); ++x) count += c_derivative(f, c, a, x) == b;
  return count;
}

CUniformityReport c_uniformity(const FunctionTable& f, Word c) {
  const FieldSpec& field = f.field();
  field.require_element(c);
  const Word size = field.size();
  const auto images = f.images();

  std::vector<Word> scaled(size);
  for (Word x = 0; x < size; ++x) scaled[x] = field.mul(c, images[x]);

  CUniformityReport report;
  report.c = c;
  report.classical_ddt = c == 1;

  std::vector<std::uint32_t> hist(size, 0);
  for (Word a = report.classical_ddt ? 1 : 0; a < size; ++a) {
    for (Word x = 0; x < size; ++x) ++hist[images[x ^ a] ^ scaled[x]];
    for (Word b = 0; b < size; ++b) {
      const std::uint32_t v = hist[b];
      if (v == 0) continue;
      hist[b] = 0;
      ++report.spectrum[v];
      if (v > report.uniformity) {
        report.uniformity = v;
        report.witnesses.clear();
      }
      if (v == report.uniformity && report.witnesses.size() < kMaxWitnesses) {
        report.witnesses.push_back({a, b});
      }
    }
  }
  report.classification = report.uniformity == 1   ? Classification::PCN
                          : report.uniformity == 2 ? Classification::APCN
                                                   : Classification::Other;
  return report;
}

std::vector<Word> expand_range(const FieldSpec& field, const CRange& range) {
  std::vector<Word> out;
  if (std::holds_alternative<AllElements>(range)) {
    out.resize(field.size());
    for (Word x = 0; x < field.size(); ++x) out[x] = x;
  } else if (const auto* sub = std::get_if<SubfieldRange>(&range)) {
    out = field.subfield_elements(sub->s);
  } else {
    out = std::get<std::vector<Word>>(range);
    for (Word x : out) field.require_element(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<CUniformityReport> scan_c(const FunctionTable& f, const CRange& range,
                                      const std::vector<Word>& exclusions,
                                      const ScanOptions& options) {
  std::vector<Word> cs = expand_range(f.field(), range);
  std::erase_if(cs, [&](Word c) {
    return std::find(exclusions.begin(), exclusions.end(), c) != exclusions.end();
  });

  std::vector<CUniformityReport> reports(cs.size());
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, std::max<std::size_t>(cs.size(), 1));
  if (threads == 1) {
    for (std::size_t j = 0; j < cs.size(); ++j) reports[j] = c_uniformity(f, cs[j]);
    return reports;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < cs.size(); j = next++) reports[j] = c_uniformity(f, cs[j]);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  pool.clear();  // joins
  return reports;
}

TheoremCase classify_theorem_case(const FieldSpec& field, unsigned t, Word c) {
  if (t == 0 || field.degree() % (2 * t) != 0) {
    throw FieldError("dimension mismatch: 2t = " + std::to_string(2 * t) +
                     " does not divide field degree " + std::to_string(field.degree()));
  }
  field.require_element(c);
  if (c <= 1) return TheoremCase::InF2;
  if (field.is_in_subfield(c, t)) return TheoremCase::InFqMinusF2;
  if (field.is_in_subfield(c, 2 * t)) return TheoremCase::InFq2MinusFq;
  return TheoremCase::BeyondFq2;
}

void write_cddt_csv(std::ostream& out, const FunctionTable& f, Word c, bool omit_zero) {
  const FieldSpec& field = f.field();
  field.require_element(c);
  if (c == 1) out << "# c = 1: classical DDT; row a = 0 is excluded from the uniformity\n";
  out << "a,b,count\n";
  for (Word a = 0; a < field.size(); ++a) {
    const auto row = cddt_row(f, c, a);
    for (Word b = 0; b < field.size(); ++b) {
      if (omit_zero && row[b] == 0) continue;
      out << a << ',' << b << ',' << row[b] << '\n';
    }
  }
}

}  // namespace cdu
