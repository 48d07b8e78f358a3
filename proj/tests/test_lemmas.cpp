#include <gtest/gtest.h>

#include <algorithm>

#include "uncrossing/lemmas.hpp"

using namespace uncrossing;

TEST(LemmaSuite, ExhaustiveSmall) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = lemma_suite(UncrossingPoset::generate(n));
    EXPECT_TRUE(r.passed()) << r.to_json().dump(1);
    EXPECT_EQ(r.checks.size(), 8U);
  }
}

TEST(LemmaSuite, EveryCheckSeesCasesAtN3) {
  const auto r = lemma_suite(UncrossingPoset::generate(3));
  for (const auto& c : r.checks) EXPECT_GT(c.cases, 0U) << c.name;
}

TEST(LemmaSuite, SeededSampleAtN4) {
  const auto up = UncrossingPoset::generate(4);
  const auto a = lemma_suite(up, Sample{0.25, 7});
  const auto b = lemma_suite(up, Sample{0.25, 7});
  EXPECT_TRUE(a.passed()) << a.to_json().dump(1);
  EXPECT_EQ(a.to_json(), b.to_json());
  const auto full = lemma_suite(up);
  EXPECT_LT(a.find("three-wire-diamond")->cases, full.find("three-wire-diamond")->cases);
}

TEST(LemmaSuite, DiamondsNeedRenamingOnlyFromN4) {
  EXPECT_EQ(lemma_suite(UncrossingPoset::generate(3)).find("three-wire-diamond")->info.value("renamed_labels", 0), 0);
  EXPECT_GT(lemma_suite(UncrossingPoset::generate(4)).find("three-wire-diamond")->info.value("renamed_labels", 0), 0);
}

TEST(SampleMask, DeterministicAndRoughlyProportional) {
  const auto a = sample_mask(10000, Sample{0.1, 42});
  EXPECT_EQ(a, sample_mask(10000, Sample{0.1, 42}));
  EXPECT_NE(a, sample_mask(10000, Sample{0.1, 43}));
  std::size_t on = 0;
  for (char c : a) on += c ? 1 : 0;
  EXPECT_GT(on, 850U);
  EXPECT_LT(on, 1150U);
  for (char c : sample_mask(50, Sample{})) EXPECT_TRUE(c);
}

TEST(EcNotEl, WitnessInP3) {
  const auto dual = UncrossingPoset::generate(3).as_finite_poset(true);
  const auto c = find_ec_not_el_witness(dual);
  ASSERT_TRUE(c.passed());
  const auto& w = c.info.at("witness");
  EXPECT_GE(w.at("weakly_ascending_chains").size(), 2U);
  // both chains share endpoints at distance two
  std::size_t lower = 0;
  std::size_t upper = 0;
  for (std::size_t x = 0; x < dual.size(); ++x) {
    if (dual.name(x) == w.at("lower").get<std::string>()) lower = x;
    if (dual.name(x) == w.at("upper").get<std::string>()) upper = x;
  }
  EXPECT_EQ(dual.rank(upper) - dual.rank(lower), 2);
}

TEST(EcNotEl, NoWitnessInP2) {
  const auto dual = UncrossingPoset::generate(2).as_finite_poset(true);
  EXPECT_FALSE(find_ec_not_el_witness(dual).passed());
}

TEST(Identities, CarriedIdentitiesArePermutations) {
  const auto up = UncrossingPoset::generate(4);
  const std::vector<int> id{0, 1, 2, 3, 4};
  std::size_t renamed = 0;
  for (const auto& c : up.covers()) {
    if (c.lower == up.bottom()) continue;
    const auto& x = up.word(c.upper);
    const auto& y = up.word(c.lower);
    const auto carried = detail::carry_identities(x, y, c.label, id);
    auto sorted = carried;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, id);
    if (c.label.is_ascending()) EXPECT_EQ(carried, id) << x.str() << " -> " << y.str();
    renamed += carried == id ? 0 : 1;
  }
  EXPECT_GT(renamed, 0U) << "renormalization renames some wire";
}
