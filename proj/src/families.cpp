#include "cdu/families.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace cdu {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::F: return "f";
    case Family::G: return "g";
    case Family::H: return "h";
    case Family::Generic: return "generic";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "f" || text == "F") return Family::F;
  if (text == "g" || text == "G") return Family::G;
  if (text == "h" || text == "H") return Family::H;
  if (text == "generic" || text == "GENERIC") return Family::Generic;
  throw PreconditionError("unknown family '" + std::string(text) + "' (expected f, g, h or generic)");
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw PreconditionError("invalid value for " + std::string(key) + ": '" + std::string(value) +
                            "'");
  }
  return v;
}

std::uint64_t pow2_mod(unsigned e, std::uint64_t modulus) {
  std::uint64_t r = 1 % modulus;
  std::uint64_t b = 2 % modulus;
  while (e) {
    if (e & 1) r = r * b % modulus;
    b = b * b % modulus;
    e >>= 1;
  }
  return r;
}

std::string subfield_name(unsigned s) { return "GF(2^" + std::to_string(s) + ")^*"; }

}  // namespace

std::map<std::string, std::string> parse_assignments(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw PreconditionError("expected key=value, got '" + token + "'");
    }
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return kv;
}

unsigned assignments_degree(const std::map<std::string, std::string>& kv) {
  auto get = [&](const char* key) {
    auto it = kv.find(key);
    return it == kv.end() ? 1u : parse_number<unsigned>(key, it->second);
  };
  return 2 * get("t") * get("n");
}

FamilyParams resolve_family_params(const std::map<std::string, std::string>& kv,
                                   const FieldSpec& field) {
  FamilyParams p;
  for (const auto& [key, value] : kv) {
    if (key == "family") {
      p.family = parse_family(value);
    } else if (key == "t") {
      p.t = parse_number<unsigned>(key, value);
    } else if (key == "n") {
      p.n = parse_number<unsigned>(key, value);
    } else if (key == "i") {
      p.i = parse_number<unsigned>(key, value);
    } else if (key == "k") {
      p.k = parse_number<std::uint64_t>(key, value);
    } else if (key == "gamma") {
      p.gamma = parse_element(field, value);
    } else {
      throw PreconditionError("unknown parameter '" + key + "'");
    }
  }
  return p;
}

FamilyParams parse_family_params(std::string_view text, const FieldSpec& field) {
  return resolve_family_params(parse_assignments(text), field);
}

std::string format_family_params(const FamilyParams& p) {
  std::ostringstream os;
  os << "family=" << to_string(p.family) << " t=" << p.t << " n=" << p.n;
  if (p.family == Family::F || p.family == Family::H) os << " i=" << p.i;
  if (p.family == Family::Generic) os << " k=" << p.k;
  os << " gamma=" << format_element(p.gamma);
  return os.str();
}

std::uint64_t implied_exponent(const FamilyParams& p, const FieldSpec& field) {
  const std::uint64_t order = field.group_order();
  const std::uint64_t q = pow2_mod(p.t, order);
  std::uint64_t k = 0;
  switch (p.family) {
    case Family::F: k = pow2_mod(p.i, order) * ((q + 1) % order) % order; break;
    case Family::G: k = (q * q + 1) % order; break;
    case Family::H: k = pow2_mod(p.i, order) * ((q * q + 1) % order) % order; break;
    case Family::Generic: k = p.k % order; break;
  }
  // x^0 and x^(2^m-1) agree on nonzero x, but only the latter sends 0 to 0.
  return k == 0 ? order : k;
}

std::vector<Word> admissible_gammas(const FieldSpec& field, Family family, unsigned t) {
  std::vector<Word> out;
  if (family == Family::Generic) {
    for (Word x = 1; x < field.size(); ++x) out.push_back(x);
    return out;
  }
  out = field.subfield_elements(family == Family::G ? t : 2 * t);
  out.erase(out.begin());  // zero
  return out;
}

bool check_h_permutation_condition(const FieldSpec& field, unsigned t, unsigned n, unsigned i,
                                   Word gamma, std::optional<std::uint64_t> exponent) {
  field.require_subfield(2 * t);
  if (gamma == 0 || !field.contains(gamma) || !field.is_in_subfield(gamma, 2 * t)) {
    throw PreconditionError("gamma must lie in GF(q^2)^* = " + subfield_name(2 * t));
  }
  if (n % 2 == 0) return true;
  const std::uint64_t e =
      exponent ? *exponent : pow2_mod(i + 1, field.group_order());
  const Word y = field.pow(field.inv(gamma), e);
  const Word tr = y ^ field.frobenius(y, t);  // Tr_{q^2/q}
  // gcd(2^a - 1, 2^b - 1) = 2^gcd(a, b) - 1
  const unsigned g = std::gcd(i + 1, t);
  const std::uint64_t d = ((std::uint64_t{1} << t) - 1) / ((std::uint64_t{1} << g) - 1);
  return field.pow(tr, d) != 1;
}

FunctionTable::FunctionTable(FieldSpec field, std::vector<Word> images,
                             std::optional<FamilyParams> params)
    : field_(std::move(field)), images_(std::move(images)), params_(std::move(params)) {
  if (images_.size() != field_.size()) {
    throw FieldError("function table has " + std::to_string(images_.size()) +
                     " entries, expected " + std::to_string(field_.size()));
  }
  for (Word y : images_) field_.require_element(y);
}

FunctionTable FunctionTable::identity(const FieldSpec& field) {
  std::vector<Word> images(field.size());
  std::iota(images.begin(), images.end(), Word{0});
  return FunctionTable(field, std::move(images));
}

void validate_family_params(const FieldSpec& field, const FamilyParams& p,
                            const BuildOptions& options) {
  if (p.t == 0 || p.n == 0) throw PreconditionError("t and n must be positive");
  if ((p.family == Family::F || p.family == Family::H) && p.i == 0) {
    throw PreconditionError("i must be positive");
  }
  if (p.degree() != field.degree()) {
    throw PreconditionError("dimension mismatch: 2nt = " + std::to_string(p.degree()) +
                            " but field degree is " + std::to_string(field.degree()));
  }
  if (p.gamma == 0 || !field.contains(p.gamma)) {
    throw PreconditionError("gamma must be a nonzero element of the field");
  }
  switch (p.family) {
    case Family::F:
    case Family::H:
      if (!field.is_in_subfield(p.gamma, 2 * p.t)) {
        throw PreconditionError("gamma must lie in GF(q^2)^* = " + subfield_name(2 * p.t));
      }
      break;
    case Family::G:
      if (!field.is_in_subfield(p.gamma, p.t)) {
        throw PreconditionError("gamma must lie in GF(q)^* = " + subfield_name(p.t));
      }
      break;
    case Family::Generic:
      if (p.k == 0) throw PreconditionError("exponent k must be positive");
      break;
  }
  if (p.family == Family::H && !options.override_h_precondition &&
      !check_h_permutation_condition(field, p.t, p.n, p.i, p.gamma)) {
    throw PreconditionError(
        "h permutation condition fails for odd n: "
        "Tr_{q^2/q}(gamma^-(2^(i+1)))^((q-1)/gcd(2^(i+1)-1, 2^t-1)) = 1; "
        "use the override flag to build the table anyway");
  }
}

FunctionTable build_family(const FieldSpec& field, const FamilyParams& p,
                           const BuildOptions& options) {
  validate_family_params(field, p, options);
  const unsigned m = field.degree();
  const std::uint64_t k = implied_exponent(p, field);

  // The relative trace is GF(2)-linear: tabulate it on the polynomial basis.
  std::vector<Word> basis_trace(m);
  for (unsigned j = 0; j < m; ++j) basis_trace[j] = field.rel_trace(Word{1} << j, p.t);
  auto trace = [&](Word y) {
    Word acc = 0;
    for (unsigned j = 0; y; ++j, y >>= 1) {
      if (y & 1) acc ^= basis_trace[j];
    }
    return acc;
  };

  // Walk x = g^j so that x^k and gamma*x advance by one multiplication each.
  std::vector<Word> images(field.size(), 0);
  const Word g = field.generator();
  const Word gk = field.pow(g, k);
  Word x = 1;
  Word xk = 1;
  Word gx = p.gamma;
  for (Word j = 0; j < field.group_order(); ++j) {
    images[x] = gx ^ trace(xk);
    x = field.mul(x, g);
    xk = field.mul(xk, gk);
    gx = field.mul(gx, g);
  }
  images[0] = 0;  // gamma*0 + Tr(0^k)
  return FunctionTable(field, std::move(images), p);
}

bool is_permutation(const FunctionTable& table) {
  std::vector<bool> seen(table.field().size(), false);
  for (Word y : table.images()) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

}  // namespace cdu
