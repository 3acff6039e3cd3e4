#include "cdu/families.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cdu;

namespace {

// images[x] = gamma x + Tr(x^k), evaluated with the test oracles only.
std::vector<Word> direct_table(const FieldSpec& f, unsigned t, Word gamma, std::uint64_t k) {
  const unsigned m = f.degree();
  std::vector<Word> out(f.size());
  for (Word x = 0; x < f.size(); ++x) {
    Word y = 1;
    for (std::uint64_t j = 0; j < k; ++j) y = oracle::mul(y, x, m, f.modulus());
    Word tr = 0;
    for (unsigned j = 0; j < m / t; ++j) {
      tr ^= y;
      for (unsigned s = 0; s < t; ++s) y = oracle::mul(y, y, m, f.modulus());
    }
    out[x] = oracle::mul(gamma, x, m, f.modulus()) ^ tr;
  }
  return out;
}

}  // namespace

TEST(Families, FamilyFZeroMapsToZero) {
  const auto f = FieldSpec::make(4);
  for (Word gamma : admissible_gammas(f, Family::F, 2)) {
    const auto table = build_family(f, {Family::F, 2, 1, 1, gamma, 1});
    EXPECT_EQ(table[0], 0u);
  }
}

TEST(Families, MatchesDirectEvaluation) {
  // Small exponents keep the repeated-multiplication oracle cheap.
  const auto f16 = FieldSpec::make(4);
  // f with t=1, n=2, i=1: k = 2 * 3 = 6.
  const auto f = build_family(f16, {Family::F, 1, 2, 1, 1, 1});
  EXPECT_EQ(std::vector<Word>(f.images().begin(), f.images().end()), direct_table(f16, 1, 1, 6));
  // g with t=1, n=2: k = 5.
  const auto g = build_family(f16, {Family::G, 1, 2, 1, 1, 1});
  EXPECT_EQ(std::vector<Word>(g.images().begin(), g.images().end()), direct_table(f16, 1, 1, 5));
  // h with t=2, n=1, i=1: k = 2 * 17 = 34.
  const Word gamma = f16.generator();
  const auto h = build_family(f16, {Family::H, 2, 1, 1, gamma, 1}, {true});
  EXPECT_EQ(std::vector<Word>(h.images().begin(), h.images().end()),
            direct_table(f16, 2, gamma, 34));
}

TEST(Families, GenericLinearIsXPlusTrace) {
  for (unsigned t : {1u, 2u}) {
    const auto f = FieldSpec::make(4 * t);
    const auto table = build_family(f, {Family::Generic, t, 2, 1, 1, 1});
    for (Word x = 0; x < f.size(); ++x) EXPECT_EQ(table[x], x ^ f.rel_trace(x, t));
  }
}

TEST(Families, FamilyFIsBijection) {
  const auto f = FieldSpec::make(4);
  EXPECT_TRUE(is_permutation(build_family(f, {Family::F, 2, 1, 1, f.generator(), 1})));
}

TEST(Families, IsPermutationBasics) {
  const auto f = FieldSpec::make(3);
  EXPECT_TRUE(is_permutation(FunctionTable::identity(f)));
  EXPECT_FALSE(is_permutation(FunctionTable(f, std::vector<Word>(8, 0))));
  EXPECT_TRUE(is_permutation(build_family(FieldSpec::make(4), {Family::G, 2, 1, 1, 1, 1})));
}

TEST(Families, TableRejectsBadImages) {
  const auto f = FieldSpec::make(3);
  EXPECT_THROW(FunctionTable(f, std::vector<Word>(7, 0)), FieldError);
  EXPECT_THROW(FunctionTable(f, std::vector<Word>(8, 8)), FieldError);
}

TEST(Families, AllAdmissibleParametersPermute) {
  for (unsigned t = 1; t <= 6; ++t) {
    for (unsigned n = 1; 2 * n * t <= 12; ++n) {
      const auto f = FieldSpec::make(2 * n * t);
      for (Word gamma : admissible_gammas(f, Family::G, t)) {
        EXPECT_TRUE(is_permutation(build_family(f, {Family::G, t, n, 1, gamma, 1})))
            << "g t=" << t << " n=" << n << " gamma=" << gamma;
      }
      for (unsigned i = 1; i <= 2; ++i) {
        for (Word gamma : admissible_gammas(f, Family::F, t)) {
          EXPECT_TRUE(is_permutation(build_family(f, {Family::F, t, n, i, gamma, 1})))
              << "f t=" << t << " n=" << n << " i=" << i << " gamma=" << gamma;
          if (check_h_permutation_condition(f, t, n, i, gamma)) {
            EXPECT_TRUE(is_permutation(build_family(f, {Family::H, t, n, i, gamma, 1})))
                << "h t=" << t << " n=" << n << " i=" << i << " gamma=" << gamma;
          }
        }
      }
    }
  }
}

TEST(Families, PreconditionErrors) {
  const auto f256 = FieldSpec::make(8);
  const Word outside = f256.generator();  // not in GF(16)
  try {
    build_family(f256, {Family::F, 2, 2, 1, outside, 1});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("GF(2^4)"), std::string::npos) << e.what();
  }
  try {
    build_family(f256, {Family::G, 2, 2, 1, f256.subfield_elements(4)[5], 1});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("GF(2^2)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(build_family(f256, {Family::F, 2, 2, 1, 0, 1}), PreconditionError);
  EXPECT_THROW(build_family(f256, {Family::F, 2, 1, 1, 1, 1}), PreconditionError);  // 2nt = 4
  EXPECT_THROW(build_family(f256, {Family::Generic, 2, 2, 1, 1, 0}), PreconditionError);
  EXPECT_THROW(build_family(f256, {Family::F, 2, 2, 0, 1, 1}), PreconditionError);
}

TEST(Families, HConditionRefusesUnlessOverridden) {
  const auto f = FieldSpec::make(4);
  Word failing = 0;
  for (Word gamma : admissible_gammas(f, Family::H, 2)) {
    if (!check_h_permutation_condition(f, 2, 1, 1, gamma)) failing = gamma;
  }
  ASSERT_NE(failing, 0u);
  EXPECT_THROW(build_family(f, {Family::H, 2, 1, 1, failing, 1}), PreconditionError);
  const auto table = build_family(f, {Family::H, 2, 1, 1, failing, 1}, {true});
  EXPECT_EQ(table.size(), 16u);
}

TEST(Families, HConditionExamples) {
  const auto f256 = FieldSpec::make(8);
  for (Word gamma : admissible_gammas(f256, Family::H, 2)) {
    EXPECT_TRUE(check_h_permutation_condition(f256, 2, 2, 1, gamma));
  }
  const auto f16 = FieldSpec::make(4);
  // Tr_{q^2/q}(1) = 0 and 0^e = 0 != 1.
  EXPECT_TRUE(check_h_permutation_condition(f16, 2, 1, 1, 1));
  EXPECT_THROW(check_h_permutation_condition(f16, 2, 1, 1, 0), PreconditionError);
  EXPECT_THROW(check_h_permutation_condition(f256, 2, 1, 1, f256.generator()), PreconditionError);
}

TEST(Families, HConditionMatchesBijectivityWithDefaultExponent) {
  // Observed: with exponent 2^(i+1) the condition decides bijectivity exactly.
  for (auto [t, n] : {std::pair{1u, 1u}, {2u, 1u}, {1u, 3u}, {3u, 1u}}) {
    const auto f = FieldSpec::make(2 * n * t);
    for (unsigned i = 1; i <= 3; ++i) {
      for (Word gamma : admissible_gammas(f, Family::H, t)) {
        const bool perm = is_permutation(build_family(f, {Family::H, t, n, i, gamma, 1}, {true}));
        EXPECT_EQ(check_h_permutation_condition(f, t, n, i, gamma), perm)
            << "t=" << t << " n=" << n << " i=" << i << " gamma=" << gamma;
      }
    }
  }
}

TEST(Families, AlternateExponentIsNotSufficient) {
  // Reading the exponent as 2^i + 1 admits non-bijective h at t=2, n=1, i=1.
  const auto f = FieldSpec::make(4);
  int admitted_non_perm = 0;
  for (Word gamma : admissible_gammas(f, Family::H, 2)) {
    const bool perm = is_permutation(build_family(f, {Family::H, 2, 1, 1, gamma, 1}, {true}));
    admitted_non_perm += check_h_permutation_condition(f, 2, 1, 1, gamma, 3) && !perm;
  }
  EXPECT_EQ(admitted_non_perm, 4);
}

TEST(Families, ExponentReductionGivesSameTable) {
  const auto f = FieldSpec::make(6);
  for (std::uint64_t k : {1u, 5u, 9u, 62u, 63u}) {
    const auto a = build_family(f, {Family::Generic, 1, 3, 1, 3, k});
    const auto b = build_family(f, {Family::Generic, 1, 3, 1, 3, k + 63});
    const auto c = build_family(f, {Family::Generic, 1, 3, 1, 3, k + 63 * 1000});
    EXPECT_TRUE(std::equal(a.images().begin(), a.images().end(), b.images().begin()));
    EXPECT_TRUE(std::equal(a.images().begin(), a.images().end(), c.images().begin()));
  }
  // k = 2^m - 1 maps zero to zero.
  EXPECT_EQ(build_family(f, {Family::Generic, 1, 3, 1, 1, 63})[0], 0u);
}

TEST(Families, ImpliedExponentReduced) {
  const auto f = FieldSpec::make(8);
  EXPECT_EQ(implied_exponent({Family::F, 2, 2, 1, 1, 1}, f), 10u);   // 2 * 5
  EXPECT_EQ(implied_exponent({Family::G, 2, 2, 1, 1, 1}, f), 17u);   // 16 + 1
  EXPECT_EQ(implied_exponent({Family::H, 2, 2, 3, 1, 1}, f), 136u);  // 8 * 17
  EXPECT_EQ(implied_exponent({Family::H, 2, 2, 11, 1, 1}, f), 136u);
}

TEST(Families, GCommutesWithSubfieldFrobenius) {
  for (auto [t, n] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {1u, 3u}}) {
    const auto f = FieldSpec::make(2 * n * t);
    for (Word gamma : admissible_gammas(f, Family::G, t)) {
      const auto table = build_family(f, {Family::G, t, n, 1, gamma, 1});
      for (Word x = 0; x < f.size(); ++x) {
        ASSERT_EQ(f.frobenius(table[x], t), table[f.frobenius(x, t)]);
      }
    }
  }
}

TEST(Families, ParamsTextForm) {
  const auto f = FieldSpec::make(4);
  const auto p = parse_family_params("family=f t=2 n=1 i=1 gamma=g^3", f);
  EXPECT_EQ(p.family, Family::F);
  EXPECT_EQ(p.t, 2u);
  EXPECT_EQ(p.gamma, f.pow(f.generator(), 3));
  EXPECT_EQ(format_family_params(p), "family=f t=2 n=1 i=1 gamma=0x8");
  EXPECT_EQ(parse_family_params(format_family_params(p), f), p);
  EXPECT_EQ(format_family_params({Family::G, 2, 1, 1, 1, 1}), "family=g t=2 n=1 gamma=0x1");
  EXPECT_EQ(format_family_params({Family::Generic, 1, 1, 1, 1, 7}),
            "family=generic t=1 n=1 k=7 gamma=0x1");
  EXPECT_EQ(assignments_degree(parse_assignments("t=3 n=2")), 12u);
  EXPECT_THROW(parse_family_params("family=f t=two", f), PreconditionError);
  EXPECT_THROW(parse_family_params("family=q", f), PreconditionError);
  EXPECT_THROW(parse_family_params("family=f color=3", f), PreconditionError);
  EXPECT_THROW(parse_family_params("family", f), PreconditionError);
}
