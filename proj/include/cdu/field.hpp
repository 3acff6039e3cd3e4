#pragma once

// Arithmetic in binary fields GF(2^m), 1 <= m <= 24, in polynomial basis.
//
// Elements are handled as raw coordinate bitmasks (`Word`, bit j is the
// coefficient of X^j). The hot paths of the analysis code work on words
// directly through FieldSpec; `Element` is a checked wrapper that carries its
// field and rejects mixed-field arithmetic.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdu {

using Word = std::uint32_t;

inline constexpr unsigned kMaxDegree = 24;
// Fields up to this degree use log/antilog tables for multiplication.
inline constexpr unsigned kTableDegree = 16;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldSpec {
 public:
  // Builds GF(2^m). Without a modulus the smallest irreducible polynomial of
  // degree m (by integer encoding) is used; m = 1 uses the modulus X.
  static FieldSpec make(unsigned m, std::optional<Word> modulus = std::nullopt);

  unsigned degree() const noexcept { return m_; }
  Word modulus() const noexcept { return modulus_; }
  // Smallest element (by encoding) of multiplicative order 2^m - 1.
  Word generator() const noexcept { return generator_; }
  Word size() const noexcept { return Word{1} << m_; }
  Word group_order() const noexcept { return size() - 1; }
  bool contains(Word x) const noexcept { return x < size(); }

  static constexpr Word add(Word x, Word y) noexcept { return x ^ y; }
  Word mul(Word x, Word y) const noexcept;
  Word square(Word x) const noexcept { return mul(x, x); }
  // Throws std::domain_error for x = 0.
  Word inv(Word x) const;
  // 0^0 = 1.
  Word pow(Word x, std::uint64_t k) const noexcept;
  // generator()^k
  Word gen_pow(std::uint64_t k) const noexcept;
  // x^(2^s)
  Word frobenius(Word x, unsigned s) const noexcept;

  // Relative trace onto GF(2^s): sum of x^(2^(s*j)) for j < m/s.
  Word rel_trace(Word x, unsigned s) const;
  bool is_in_subfield(Word x, unsigned s) const;
  // All 2^s elements of the subfield GF(2^s), ascending by encoding.
  std::vector<Word> subfield_elements(unsigned s) const;

  // Throws FieldError unless s > 0 and s divides m.
  void require_subfield(unsigned s) const;
  // Throws FieldError when x is not an encoding of this field.
  void require_element(Word x) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<Word> exp;  // exp[k] = g^k, doubled length to skip a modulo
    std::vector<Word> log;  // log[0] unused
  };

  FieldSpec(unsigned m, Word modulus);
  Word clmul_reduce(Word x, Word y) const noexcept;

  unsigned m_ = 1;
  Word modulus_ = 0b10;
  Word generator_ = 1;
  std::shared_ptr<const Tables> tables_;
};

// Polynomial helpers over GF(2), used for modulus validation.
namespace gf2poly {
int degree(std::uint64_t p) noexcept;
std::uint64_t mod(std::uint64_t a, std::uint64_t b) noexcept;
// Smallest nontrivial factor of p by trial division, or nullopt if p is
// irreducible. p must have degree >= 1.
std::optional<std::uint64_t> find_factor(std::uint64_t p) noexcept;
bool is_irreducible(std::uint64_t p) noexcept;
}  // namespace gf2poly

// Element text format: decimal, 0x-prefixed hex, or "g^k" (power of the
// field's canonical generator).
Word parse_element(const FieldSpec& field, std::string_view text);
std::string format_element(Word x);

class Element {
 public:
  Element(FieldSpec field, Word bits);

  const FieldSpec& field() const noexcept { return field_; }
  Word bits() const noexcept { return bits_; }

  Element operator+(const Element& o) const;
  Element operator*(const Element& o) const;
  Element inverse() const;
  Element pow(std::uint64_t k) const;
  Element frobenius(unsigned s) const;
  Element rel_trace(unsigned s) const;
  bool is_in_subfield(unsigned s) const;

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.bits_ == b.bits_ && a.field_ == b.field_;
  }

 private:
  void check_same_field(const Element& o) const;

  FieldSpec field_;
  Word bits_;
};

}  // namespace cdu
