#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "psl2cov/errors.hpp"
#include "psl2cov/psl2_tables.hpp"
#include "psl2cov/validation.hpp"
#include "support.hpp"

namespace psl2cov {
namespace {

std::vector<std::uint64_t> sizes(std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (const auto& c : conjugacy_data(group_params(q))) out.push_back(c.size);
  return out;
}

TEST(GroupParams, Examples) {
  const auto p8 = group_params(8);
  EXPECT_EQ(p8.p, 2u);
  EXPECT_EQ(p8.m, 3);
  EXPECT_EQ(p8.parity, ParityCase::Even);
  EXPECT_EQ(p8.order, 504u);
  EXPECT_EQ(p8.conductor, 63u);

  const auto p11 = group_params(11);
  EXPECT_EQ(p11.parity, ParityCase::ThreeMod4);
  EXPECT_EQ(p11.order, 660u);
  EXPECT_EQ(p11.conductor, 660u);

  EXPECT_EQ(group_params(13).parity, ParityCase::OneMod4);
  EXPECT_EQ(group_params(4).order, 60u);
  EXPECT_FALSE(group_params(7).within_theorem_range());
  EXPECT_TRUE(group_params(8).within_theorem_range());
}

TEST(GroupParams, RejectsNonPrimePowers) {
  EXPECT_THROW(group_params(12), NotAPrimePower);
  EXPECT_THROW(group_params(3), NotAPrimePower);
  EXPECT_THROW(group_params(1), NotAPrimePower);
  EXPECT_THROW(group_params(100), NotAPrimePower);
}

TEST(ConjugacyData, Examples) {
  EXPECT_EQ(sizes(8), (std::vector<std::uint64_t>{1, 63, 72, 72, 72, 56, 56, 56, 56}));
  EXPECT_EQ(sizes(11), (std::vector<std::uint64_t>{1, 60, 60, 132, 132, 110, 110, 55}));
  // two split classes of size q(q+1) = 182, then the half class of size 91
  EXPECT_EQ(sizes(13), (std::vector<std::uint64_t>{1, 84, 84, 182, 182, 91, 156, 156, 156}));
}

TEST(ConjugacyData, CountsAndSizesSumToOrder) {
  for (auto q : testing::prime_powers(4, 101)) {
    const auto params = group_params(q);
    const auto classes = conjugacy_data(params);
    EXPECT_EQ(classes.size(), q % 2 == 0 ? q + 1 : (q + 5) / 2) << q;
    std::uint64_t total = 0;
    for (const auto& c : classes) {
      EXPECT_EQ(params.order % c.size, 0u);
      total += c.size;
    }
    EXPECT_EQ(total, params.order) << q;
  }
}

TEST(Omega, PerfectSquareCase) {
  const auto [w, ws] = omega_values(group_params(9));
  EXPECT_EQ(w.as_integer(), BigInt(2));
  EXPECT_EQ(ws.as_integer(), BigInt(-1));
}

TEST(Omega, GaussSumIsSquareRoot) {
  const auto g = quadratic_gauss_sum(5);
  const auto z = [](std::int64_t k) { return Cyclotomic::root(5, k); };
  EXPECT_EQ(g, z(1) - z(2) - z(3) + z(4));
  EXPECT_NEAR(g.approx().real(), 2.2360679775, 1e-9);
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101}) {
    const auto s = quadratic_gauss_sum(p);
    const std::int64_t expected = p % 4 == 1 ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
    EXPECT_EQ((s * s).as_integer(), BigInt(expected)) << p;
  }
}

TEST(Omega, Identities) {
  const auto [w, ws] = omega_values(group_params(11));
  EXPECT_EQ((w * ws).as_integer(), BigInt(3));
  EXPECT_EQ((w + ws).as_integer(), BigInt(1));
  // omega = (1 + sqrt(-11)) / 2 numerically
  EXPECT_NEAR(w.approx().real(), 0.5, 1e-12);
  EXPECT_NEAR(w.approx().imag(), std::sqrt(11.0) / 2, 1e-12);
  for (auto q : testing::prime_powers(5, 101)) {
    if (q % 2 == 1) EXPECT_TRUE(omega_identities_hold(group_params(q))) << q;
  }
  EXPECT_THROW(omega_values(group_params(8)), CaseMismatch);
}

TEST(Omega, SignConventionPerCase) {
  for (auto q : {13u, 25u, 27u, 19u, 125u}) {
    const auto params = group_params(q);
    const auto [w, ws] = omega_values(params);
    const auto r = (w - ws).approx();
    if (params.parity == ParityCase::OneMod4) {
      EXPECT_NEAR(r.real(), std::sqrt(static_cast<double>(q)), 1e-9) << q;
    } else {
      EXPECT_NEAR(r.imag(), std::sqrt(static_cast<double>(q)), 1e-9) << q;
    }
  }
}

TEST(CharacterTable, TableExamples) {
  const auto t8 = character_table(group_params(8));
  const auto st = CharacterLabel::steinberg();
  EXPECT_EQ(t8.value(st, {ClassKind::Split, 2}), Cyclotomic(1));
  EXPECT_EQ(t8.value(st, {ClassKind::NonSplit, 3}), Cyclotomic(-1));

  const auto t11 = character_table(group_params(11));
  for (int j : {2, 4}) {
    const auto v = t11.value(CharacterLabel::discrete(j), {ClassKind::NonSplitHalf, 3});
    EXPECT_EQ(v, Cyclotomic(j % 4 == 0 ? -2 : 2)) << j;
  }

  const auto params13 = group_params(13);
  const auto t13 = character_table(params13);
  const CharacterLabel h1{CharKind::HalfPlus1, 0};
  EXPECT_EQ(t13.character(h1).degree, 7u);
  EXPECT_EQ(t13.value(h1, {ClassKind::Identity, 0}), Cyclotomic(7));
  EXPECT_EQ(t13.value(h1, {ClassKind::UnipN, 0}), omega_values(params13).first);
}

TEST(CharacterTable, IndexSets) {
  EXPECT_EQ(principal_indices(group_params(8)), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(discrete_indices(group_params(8)), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(principal_indices(group_params(11)), (std::vector<int>{2, 4}));
  EXPECT_EQ(discrete_indices(group_params(11)), (std::vector<int>{2, 4}));
  EXPECT_EQ(principal_indices(group_params(13)), (std::vector<int>{2, 4}));
  EXPECT_EQ(discrete_indices(group_params(13)), (std::vector<int>{2, 4, 6}));
}

TEST(CharacterTable, EvenCaseMatchesNumericFormulas) {
  for (std::uint64_t q : {4u, 8u, 16u, 32u, 64u}) {
    const auto table = character_table(group_params(q));
    const auto numeric = testing::numeric_even_table(q);
    ASSERT_EQ(table.characters().size(), numeric.rows.size());
    for (std::size_t r = 0; r < numeric.rows.size(); ++r) {
      const auto row = testing::approx_row(table.characters()[r]);
      for (std::size_t c = 0; c < row.size(); ++c) {
        EXPECT_NEAR(std::abs(row[c] - numeric.rows[r][c]), 0.0, 1e-9) << q << " " << r << " " << c;
      }
    }
  }
}

TEST(CharacterTable, ValidityForAllSmallPrimePowers) {
  for (auto q : testing::prime_powers(4, 101)) {
    const auto v = validate_table(character_table(group_params(q)));
    EXPECT_TRUE(v.passed()) << q << (v.failures.empty() ? "" : ": " + v.failures.front());
  }
}

TEST(CharacterTable, LabelsParseAndValidate) {
  const auto t = character_table(group_params(13));
  EXPECT_EQ(CharacterLabel::parse("pp:4"), CharacterLabel::principal(4));
  EXPECT_EQ(CharacterLabel::parse("half-:2").kind, CharKind::HalfMinus2);
  EXPECT_THROW(CharacterLabel::parse("xx"), InvalidLabel);
  EXPECT_THROW(CharacterLabel::parse("pp:"), InvalidLabel);
  EXPECT_THROW(t.character(CharacterLabel::principal(3)), InvalidLabel);
  EXPECT_THROW(t.character(CharacterLabel::parse("half-:1")), InvalidLabel);
  for (const auto& chi : t.characters()) EXPECT_EQ(CharacterLabel::parse(chi.label.to_string()), chi.label);
}

TEST(CenterClasses, Examples) {
  const auto t8 = character_table(group_params(8));
  EXPECT_EQ(center_classes(t8.character(CharacterLabel::trivial()), t8).size(), t8.classes().size());
  const std::vector<ClassLabel> identity{{ClassKind::Identity, 0}};
  EXPECT_EQ(center_classes(t8.character(CharacterLabel::steinberg()), t8), identity);
  const auto t13 = character_table(group_params(13));
  EXPECT_EQ(center_classes(t13.character({CharKind::HalfPlus1, 0}), t13), identity);
}

TEST(CenterClasses, NontrivialCharactersAreFaithful) {
  for (auto q : testing::prime_powers(4, 49)) {
    const auto t = character_table(group_params(q));
    for (const auto& chi : t.characters()) {
      if (chi.label.kind == CharKind::Trivial) continue;
      EXPECT_EQ(center_classes(chi, t).size(), 1u) << q << " " << chi.label.to_string();
    }
  }
}

}  // namespace
}  // namespace psl2cov
