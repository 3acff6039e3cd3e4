#pragma once

// Trace-form maps x -> gamma*x + Tr_{q^{2n}/q}(x^k) over GF(q^{2n}), q = 2^t,
// materialized as full evaluation tables.
//
//   F:       k = 2^i (q + 1),    gamma in GF(q^2)^*
//   G:       k = q^2 + 1,        gamma in GF(q)^*
//   H:       k = 2^i (q^2 + 1),  gamma in GF(q^2)^*, plus a gamma condition for odd n
//   GENERIC: explicit k, any nonzero gamma

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdu/field.hpp"

namespace cdu {

enum class Family { F, G, H, Generic };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view text);

struct FamilyParams {
  Family family = Family::F;
  unsigned t = 1;
  unsigned n = 1;
  unsigned i = 1;  // unused by G and GENERIC
  Word gamma = 1;
  std::uint64_t k = 1;  // GENERIC only

  // Absolute degree m = 2nt of the ambient field.
  unsigned degree() const noexcept { return 2 * n * t; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Raised when family parameters violate a construction's hypotheses.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses "key=value" tokens separated by whitespace into an ordered map.
std::map<std::string, std::string> parse_assignments(std::string_view text);

// Builds FamilyParams from assignments (keys: family t n i gamma k). Unknown
// keys are rejected. gamma is read in element text format in `field`.
FamilyParams resolve_family_params(const std::map<std::string, std::string>& kv,
                                   const FieldSpec& field);
// Degree 2nt implied by the t and n assignments (both default to 1).
unsigned assignments_degree(const std::map<std::string, std::string>& kv);

FamilyParams parse_family_params(std::string_view text, const FieldSpec& field);
std::string format_family_params(const FamilyParams& p);

// Exponent of the family reduced modulo 2^m - 1, in [1, 2^m - 1].
std::uint64_t implied_exponent(const FamilyParams& p, const FieldSpec& field);

// Nonzero gamma values admissible for a family: GF(q)^* for G, GF(q^2)^* for
// F and H, the whole multiplicative group for GENERIC.
std::vector<Word> admissible_gammas(const FieldSpec& field, Family family, unsigned t);

// Sufficient condition for h to permute GF(q^{2n}): n even, or n odd and
// Tr_{q^2/q}(gamma^{-e})^((q-1)/gcd(2^{i+1}-1, 2^t-1)) != 1.
// The exponent e defaults to 2^{i+1}.
bool check_h_permutation_condition(const FieldSpec& field, unsigned t, unsigned n, unsigned i,
                                   Word gamma,
                                   std::optional<std::uint64_t> exponent = std::nullopt);

class FunctionTable {
 public:
  // Throws FieldError unless images has 2^m entries, all valid elements.
  FunctionTable(FieldSpec field, std::vector<Word> images,
                std::optional<FamilyParams> params = std::nullopt);

  static FunctionTable identity(const FieldSpec& field);

  const FieldSpec& field() const noexcept { return field_; }
  std::span<const Word> images() const noexcept { return images_; }
  const std::optional<FamilyParams>& params() const noexcept { return params_; }
  Word operator[](Word x) const noexcept { return images_[x]; }
  std::size_t size() const noexcept { return images_.size(); }

 private:
  FieldSpec field_;
  std::vector<Word> images_;
  std::optional<FamilyParams> params_;
};

struct BuildOptions {
  // Build H tables even when the odd-n gamma condition fails.
  bool override_h_precondition = false;
};

// Checks the FamilyParams invariants against `field`; throws PreconditionError.
void validate_family_params(const FieldSpec& field, const FamilyParams& p,
                            const BuildOptions& options = {});

FunctionTable build_family(const FieldSpec& field, const FamilyParams& p,
                           const BuildOptions& options = {});

bool is_permutation(const FunctionTable& table);

}  // namespace cdu
