#include "cdu/linsolve.hpp"

#include <stdexcept>

namespace cdu {

namespace {

void check(const FieldSpec& field, unsigned i, Word alpha) {
  if (field.degree() > kMaxSolveDegree) {
    throw FieldError("linearized solving is limited to GF(2^" + std::to_string(kMaxSolveDegree) +
                     ")");
  }
  if (i == 0) throw FieldError("i must be positive");
  field.require_element(alpha);
  if (alpha == 0) throw std::domain_error("alpha must be nonzero");
}

}  // namespace

std::vector<Word> solve_affine(const AffineLinearizedEq& eq) {
  check(eq.field, eq.i, eq.alpha);
  eq.field.require_element(eq.beta);
  std::vector<Word> roots;
  for (Word x = 0; x < eq.field.size(); ++x) {
    if ((eq.field.frobenius(x, eq.i) ^ eq.field.mul(eq.alpha, x) ^ eq.beta) == 0) {
      roots.push_back(x);
    }
  }
  return roots;
}

std::size_t count_roots(const AffineLinearizedEq& eq) { return solve_affine(eq).size(); }

std::vector<std::uint32_t> root_count_profile(const FieldSpec& field, unsigned i, Word alpha) {
  check(field, i, alpha);
  std::vector<std::uint32_t> counts(field.size(), 0);
  for (Word x = 0; x < field.size(); ++x) {
    ++counts[field.frobenius(x, i) ^ field.mul(alpha, x)];
  }
  return counts;
}

}  // namespace cdu
