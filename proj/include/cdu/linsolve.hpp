#pragma once

// Roots of affine linearized equations X^(2^i) + alpha X + beta = 0 over
// GF(2^t). For alpha != 0 the root count is 0, 1 or 2^gcd(i, t).

#include <cstdint>
#include <vector>

#include "cdu/field.hpp"

namespace cdu {

// Brute-force solving is limited to fields of this degree.
inline constexpr unsigned kMaxSolveDegree = 16;

struct AffineLinearizedEq {
  FieldSpec field;
  unsigned i = 1;
  Word alpha = 1;
  Word beta = 0;
};

// All roots, ascending by encoding. Throws std::domain_error when alpha = 0.
std::vector<Word> solve_affine(const AffineLinearizedEq& eq);
std::size_t count_roots(const AffineLinearizedEq& eq);

// Root counts of X^(2^i) + alpha X = beta for every beta at once, indexed by
// beta: the fiber sizes of the GF(2)-linear map x -> x^(2^i) + alpha x.
std::vector<std::uint32_t> root_count_profile(const FieldSpec& field, unsigned i, Word alpha);

}  // namespace cdu
