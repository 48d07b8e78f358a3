#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "uncrossing/dot.hpp"
#include "uncrossing/lemmas.hpp"
#include "uncrossing/uncrossing_poset.hpp"

using namespace uncrossing;

namespace {

std::vector<int> renormalize(const std::vector<int>& w) {
  std::map<int, int> rename;
  std::vector<int> out;
  for (int c : w) {
    if (!rename.count(c)) rename.emplace(c, static_cast<int>(rename.size()) + 1);
    out.push_back(rename.at(c));
  }
  return out;
}

// Both uncrossings of every crossing pair, done on raw letters, kept when
// the scanned crossing count drops by one.
std::set<std::vector<int>> oracle_dual_covers(const std::vector<int>& w) {
  std::set<std::vector<int>> out;
  const int c = oracle::crossings(w);
  std::map<int, std::vector<std::size_t>> at;
  for (std::size_t p = 0; p < w.size(); ++p) at[w[p]].push_back(p);
  for (const auto& [i, pi] : at) {
    for (const auto& [j, pj] : at) {
      if (j <= i) continue;
      if (!(pi[0] < pj[0] && pj[0] < pi[1] && pi[1] < pj[1])) continue;
      auto swapped = w;
      std::swap(swapped[pi[1]], swapped[pj[1]]);
      auto moved = w;
      std::swap(moved[pi[1]], moved[pj[0]]);
      for (auto v : {swapped, renormalize(moved)})
        if (oracle::crossings(v) == c - 1) out.insert(v);
    }
  }
  return out;
}

std::set<std::vector<int>> upper_words(const std::vector<DualCover>& covers) {
  std::set<std::vector<int>> out;
  for (const auto& c : covers)
    if (const auto* w = std::get_if<WireWord>(&c.upper)) out.insert(w->letters());
  return out;
}

std::set<std::string> label_set(const std::vector<DualCover>& covers) {
  std::set<std::string> out;
  for (const auto& c : covers) out.insert(c.label.str());
  return out;
}

}  // namespace

TEST(UncrossingPoset, ElementCounts) {
  const std::vector<std::size_t> expected{0, 0, 4, 16, 106, 946};
  for (int n = 2; n <= 5; ++n) {
    const auto p = UncrossingPoset::generate(n);
    EXPECT_EQ(p.size(), expected[static_cast<std::size_t>(n)]);
    EXPECT_EQ(p.size(), oracle::double_factorial_odd(n) + 1);
    EXPECT_EQ(uncrossing_poset_size(n), p.size());
  }
}

TEST(UncrossingPoset, AtomsAreCrossinglessWordsCountedByCatalan) {
  for (int n = 2; n <= 5; ++n) {
    const auto p = UncrossingPoset::generate(n);
    std::size_t crossingless = 0;
    for (const auto& w : oracle::normalized_words(n)) crossingless += oracle::crossings(w) == 0 ? 1 : 0;
    EXPECT_EQ(p.atoms().size(), crossingless);
    EXPECT_EQ(p.atoms().size(), oracle::catalan(n));
  }
}

TEST(UncrossingPoset, SmallCases) {
  const auto p2 = UncrossingPoset::generate(2);
  EXPECT_EQ(p2.atoms().size(), 2U);
  const auto p3 = UncrossingPoset::generate(3);
  EXPECT_EQ(p3.rank_profile(), (std::vector<std::size_t>{1, 5, 6, 3, 1}));
}

TEST(UncrossingPoset, RankIsCrossingsPlusOne) {
  for (int n = 2; n <= 4; ++n) {
    const auto p = UncrossingPoset::generate(n);
    const auto fp = p.as_finite_poset(false);
    EXPECT_TRUE(fp.graded());
    EXPECT_EQ(p.rank(p.bottom()), 0);
    for (std::size_t x = 1; x < p.size(); ++x) {
      EXPECT_EQ(p.rank(x), oracle::crossings(p.word(x).letters()) + 1);
      EXPECT_EQ(fp.rank(x), p.rank(x));
    }
    EXPECT_EQ(fp.top(), p.top());
  }
}

TEST(UncrossingPoset, DualCoverExamples) {
  const auto top = dual_covers(parse_word("123123"));
  EXPECT_EQ(label_set(top), (std::set<std::string>{"(1,2)", "(2,3)", "(3,1)"}));
  const auto flat = dual_covers(parse_word("112233"));
  ASSERT_EQ(flat.size(), 1U);
  EXPECT_TRUE(std::holds_alternative<Bottom>(flat[0].upper));
  EXPECT_TRUE(flat[0].label.is_top());
  EXPECT_EQ(upper_words(dual_covers(parse_word("123213"))), oracle_dual_covers(parse_word("123213").letters()));
}

TEST(UncrossingPoset, DualCoversMatchRawLetterOracle) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : enumerate_words(n)) {
      if (w.crossing_count() == 0) continue;
      ASSERT_EQ(upper_words(dual_covers(w)), oracle_dual_covers(w.letters())) << w.str();
    }
  }
}

TEST(UncrossingPoset, FirstLevelLabels) {
  const auto dual = UncrossingPoset::generate(3).as_finite_poset(true);
  const std::size_t start = *dual.bottom();
  EXPECT_EQ(dual.name(start), "123123");
  std::set<std::string> labels;
  for (std::size_t e : dual.up_covers(start)) labels.insert(dual.cover(e).label.str());
  EXPECT_EQ(labels, (std::set<std::string>{"(1,2)", "(2,3)", "(3,1)"}));
  const std::size_t top = *dual.top();
  EXPECT_EQ(dual.down_covers(top).size(), 5U);
  for (std::size_t e : dual.down_covers(top)) EXPECT_TRUE(dual.cover(e).label.is_top());
}

TEST(UncrossingPoset, DualOfP2) {
  const auto up = UncrossingPoset::generate(2);
  const auto dual = up.as_finite_poset(true);
  ASSERT_EQ(dual.size(), 4U);
  EXPECT_EQ(dual.name(*dual.bottom()), "1212");
  EXPECT_EQ(dual.name(*dual.top()), "⊥");
  std::set<std::string> middle;
  for (std::size_t e : dual.up_covers(*dual.bottom())) middle.insert(dual.name(dual.cover(e).upper));
  EXPECT_EQ(middle, (std::set<std::string>{"1122", "1221"}));
  const auto p = up.as_finite_poset(false);
  for (const auto& c : p.covers()) EXPECT_TRUE(dual.cover_index(c.upper, c.lower).has_value());
}

TEST(UncrossingPoset, DotExportCounts) {
  const auto p = UncrossingPoset::generate(3).as_finite_poset(false);
  std::ostringstream out;
  write_dot(out, p, "P3");
  const std::string dot = out.str();
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" -> ") != std::string::npos) ++edges;
    else if (line.find("[label=") != std::string::npos) ++nodes;
  }
  EXPECT_EQ(nodes, 16U);
  EXPECT_EQ(edges, p.covers().size());
}

TEST(UncrossingPoset, JsonExport) {
  const auto up = UncrossingPoset::generate(3);
  const auto j = up.to_json(true);
  EXPECT_EQ(j.at("elements").size(), 16U);
  EXPECT_TRUE(j.at("elements")[0].is_null());
  EXPECT_EQ(j.at("covers").size(), up.covers().size());
}

TEST(UncrossingPoset, ElementLimit) {
  try {
    UncrossingPoset::generate(4, 50);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

// The literal "exactly one noncrossing pair" rule drops a genuine cover.
TEST(CoverCriterion, ExactlyOneMissesANestedCover) {
  const auto w = parse_word("121332");
  const auto direct = upper_words(dual_covers(w));
  const auto literal = upper_words(dual_covers_by_criterion(w, CoverCriterion::ExactlyOne));
  EXPECT_TRUE(direct.count(parse_word("112332").letters()));
  EXPECT_FALSE(literal.count(parse_word("112332").letters()));
  EXPECT_EQ(upper_words(dual_covers_by_criterion(w, CoverCriterion::NotBothCrossing)), direct);
}

TEST(CoverCriterion, AgreementCounts) {
  const auto c3 = cover_criterion_agreement(UncrossingPoset::generate(3), CoverCriterion::ExactlyOne);
  EXPECT_EQ(c3.cases, 15U);
  EXPECT_EQ(c3.violations, 1U);
  const auto c4 = cover_criterion_agreement(UncrossingPoset::generate(4), CoverCriterion::ExactlyOne);
  EXPECT_EQ(c4.cases, 105U);
  EXPECT_EQ(c4.violations, 21U);
  EXPECT_EQ(c4.info.at("covers_accepted_only_by_criterion"), 0);
}

TEST(CoverCriterion, NotBothCrossingAgreesEverywhere) {
  for (int n = 2; n <= 5; ++n) {
    const auto c = cover_criterion_agreement(UncrossingPoset::generate(n), CoverCriterion::NotBothCrossing);
    EXPECT_TRUE(c.passed()) << c.to_json().dump();
    EXPECT_EQ(c.cases, oracle::double_factorial_odd(n));
  }
}
