#include "cdu/field.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace cdu {

namespace gf2poly {

int degree(std::uint64_t p) noexcept { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t b) noexcept {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

std::optional<std::uint64_t> find_factor(std::uint64_t p) noexcept {
  const int dp = degree(p);
  // Any reducible p has a factor of degree <= dp / 2.
  const std::uint64_t limit = std::uint64_t{1} << (dp / 2 + 1);
  for (std::uint64_t d = 2; d < limit; ++d) {
    if (mod(p, d) == 0) return d;
  }
  return std::nullopt;
}

bool is_irreducible(std::uint64_t p) noexcept {
  return degree(p) >= 1 && !find_factor(p).has_value();
}

}  // namespace gf2poly

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldSpec FieldSpec::make(unsigned m, std::optional<Word> modulus) {
  if (m < 1 || m > kMaxDegree) {
    throw FieldError("field degree " + std::to_string(m) + " outside [1, " +
                     std::to_string(kMaxDegree) + "]");
  }
  if (!modulus) {
    if (m == 1) {
      modulus = 0b10;
    } else {
      for (Word p = (Word{1} << m) | 1;; p += 2) {
        if (gf2poly::is_irreducible(p)) {
          modulus = p;
          break;
        }
      }
    }
  } else {
    if (gf2poly::degree(*modulus) != static_cast<int>(m)) {
      throw FieldError("modulus 0x" + [&] {
        std::ostringstream os;
        os << std::hex << *modulus;
        return os.str();
      }() + " does not have degree " + std::to_string(m));
    }
    if (auto factor = gf2poly::find_factor(*modulus)) {
      std::ostringstream os;
      os << "modulus 0x" << std::hex << *modulus << " is reducible: divisible by 0x"
         << *factor;
      throw FieldError(os.str());
    }
  }
  return FieldSpec(m, *modulus);
}

FieldSpec::FieldSpec(unsigned m, Word modulus) : m_(m), modulus_(modulus) {
  const std::uint64_t order = group_order();
  const auto factors = prime_factors(order);
  auto slow_pow = [this](Word x, std::uint64_t k) {
    Word r = 1;
    while (k) {
      if (k & 1) r = clmul_reduce(r, x);
      x = clmul_reduce(x, x);
      k >>= 1;
    }
    return r;
  };
  for (Word g = 1; g < size(); ++g) {
    bool full = true;
    for (auto p : factors) {
      if (slow_pow(g, order / p) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      generator_ = g;
      break;
    }
  }

  if (m_ <= kTableDegree) {
    auto t = std::make_shared<Tables>();
    t->exp.resize(2 * order);
    t->log.assign(size(), 0);
    Word x = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
      t->exp[k] = t->exp[k + order] = x;
      t->log[x] = static_cast<Word>(k);
      x = clmul_reduce(x, generator_);
    }
    tables_ = std::move(t);
  }
}

Word FieldSpec::clmul_reduce(Word x, Word y) const noexcept {
  std::uint64_t prod = 0;
  std::uint64_t xx = x;
  while (y) {
    if (y & 1) prod ^= xx;
    xx <<= 1;
    y >>= 1;
  }
  for (int j = 2 * static_cast<int>(m_) - 2; j >= static_cast<int>(m_); --j) {
    if ((prod >> j) & 1) prod ^= std::uint64_t{modulus_} << (j - m_);
  }
  return static_cast<Word>(prod);
}

Word FieldSpec::mul(Word x, Word y) const noexcept {
  if (x == 0 || y == 0) return 0;
  if (tables_) return tables_->exp[tables_->log[x] + tables_->log[y]];
  return clmul_reduce(x, y);
}

Word FieldSpec::inv(Word x) const {
  if (x == 0) throw std::domain_error("inverse of zero");
  if (tables_) {
    const Word l = tables_->log[x];
    return tables_->exp[l == 0 ? 0 : group_order() - l];
  }
  return pow(x, group_order() - 1);
}

Word FieldSpec::pow(Word x, std::uint64_t k) const noexcept {
  if (k == 0) return 1;
  if (x == 0) return 0;
  const std::uint64_t order = group_order();
  k %= order;
  if (tables_) return tables_->exp[(std::uint64_t{tables_->log[x]} * k) % order];
  Word r = 1;
  while (k) {
    if (k & 1) r = clmul_reduce(r, x);
    x = clmul_reduce(x, x);
    k >>= 1;
  }
  return r;
}

Word FieldSpec::gen_pow(std::uint64_t k) const noexcept {
  if (tables_) return tables_->exp[k % group_order()];
  return pow(generator_, k);
}

Word FieldSpec::frobenius(Word x, unsigned s) const noexcept {
  s %= m_;
  if (x == 0 || s == 0) return x;
  if (tables_) {
    const std::uint64_t l = tables_->log[x];
    return tables_->exp[(l << s) % group_order()];
  }
  for (unsigned j = 0; j < s; ++j) x = clmul_reduce(x, x);
  return x;
}

void FieldSpec::require_subfield(unsigned s) const {
  if (s == 0 || m_ % s != 0) {
    throw FieldError("subfield degree " + std::to_string(s) + " does not divide field degree " +
                     std::to_string(m_));
  }
}

void FieldSpec::require_element(Word x) const {
  if (!contains(x)) {
    throw FieldError("element " + std::to_string(x) + " is not in GF(2^" + std::to_string(m_) +
                     ")");
  }
}

Word FieldSpec::rel_trace(Word x, unsigned s) const {
  require_subfield(s);
  Word acc = 0;
  Word term = x;
  for (unsigned j = 0; j < m_ / s; ++j) {
    acc ^= term;
    term = frobenius(term, s);
  }
  return acc;
}

bool FieldSpec::is_in_subfield(Word x, unsigned s) const {
  require_subfield(s);
  return frobenius(x, s) == x;
}

std::vector<Word> FieldSpec::subfield_elements(unsigned s) const {
  require_subfield(s);
  std::vector<Word> out;
  out.reserve(std::size_t{1} << s);
  out.push_back(0);
  // The nonzero part of GF(2^s) is generated by g^((2^m - 1) / (2^s - 1)).
  const std::uint64_t step = group_order() / ((std::uint64_t{1} << s) - 1);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << s) - 1; ++k) out.push_back(gen_pow(k * step));
  std::sort(out.begin(), out.end());
  return out;
}

Word parse_element(const FieldSpec& field, std::string_view text) {
  auto fail = [&](const std::string& why) -> Word {
    throw FieldError("cannot parse element '" + std::string(text) + "': " + why);
  };
  auto parse_u64 = [&](std::string_view s, int base) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) fail("malformed number");
    return v;
  };
  if (text.starts_with("g^")) return field.gen_pow(parse_u64(text.substr(2), 10));
  if (text == "g") return field.generator();
  std::uint64_t v = text.starts_with("0x") || text.starts_with("0X")
                        ? parse_u64(text.substr(2), 16)
                        : parse_u64(text, 10);
  if (v >= field.size()) fail("out of range for GF(2^" + std::to_string(field.degree()) + ")");
  return static_cast<Word>(v);
}

std::string format_element(Word x) {
  std::ostringstream os;
  os << "0x" << std::hex << x;
  return os.str();
}

Element::Element(FieldSpec field, Word bits) : field_(std::move(field)), bits_(bits) {
  field_.require_element(bits_);
}

void Element::check_same_field(const Element& o) const {
  if (!(field_ == o.field_)) throw FieldError("operands belong to different fields");
}

Element Element::operator+(const Element& o) const {
  check_same_field(o);
  return {field_, FieldSpec::add(bits_, o.bits_)};
}

Element Element::operator*(const Element& o) const {
  check_same_field(o);
  return {field_, field_.mul(bits_, o.bits_)};
}

Element Element::inverse() const { return {field_, field_.inv(bits_)}; }
Element Element::pow(std::uint64_t k) const { return {field_, field_.pow(bits_, k)}; }
Element Element::frobenius(unsigned s) const { return {field_, field_.frobenius(bits_, s)}; }
Element Element::rel_trace(unsigned s) const { return {field_, field_.rel_trace(bits_, s)}; }
bool Element::is_in_subfield(unsigned s) const { return field_.is_in_subfield(bits_, s); }

}  // namespace cdu
