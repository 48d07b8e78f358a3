#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "uncrossing/tuffley.hpp"

using namespace uncrossing;

namespace {

std::uint64_t trivalent_count(int n) {
  std::uint64_t r = 1;
  for (int k = 2 * n - 5; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

Forest tree(int n, const std::vector<std::pair<int, int>>& edges, const std::map<int, std::vector<int>>& labels) {
  return Forest(n, {Forest::component_from_tree(edges, labels)});
}

Forest tripod() { return tree(3, {{0, 1}, {0, 2}, {0, 3}}, {{1, {1}}, {2, {2}}, {3, {3}}}); }

}  // namespace

TEST(Tuffley, TrivalentTreeCounts) {
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(trivalent_trees(n).size(), trivalent_count(n)) << n;
  for (const auto& t : trivalent_trees(5)) EXPECT_EQ(t.edge_count(), 7U);
}

TEST(Tuffley, MaximalAndEdgeFreeLayers) {
  for (int n = 3; n <= 4; ++n) {
    const auto t = generate_tuffley(n);
    EXPECT_EQ(t.maximal().size(), trivalent_count(n));
    EXPECT_EQ(t.edge_free().size(), oracle::bell(n));
    for (std::size_t x : t.edge_free()) {
      ASSERT_EQ(t.poset().down_covers(x).size(), 1U);
      EXPECT_EQ(t.poset().cover(t.poset().down_covers(x)[0]).lower, 0U);
    }
  }
  EXPECT_EQ(generate_tuffley(3).poset().name(generate_tuffley(3).maximal()[0]), tripod().str());
}

TEST(Tuffley, TripodMoves) {
  std::set<Forest> expected;
  for (int leaf = 1; leaf <= 3; ++leaf) {
    std::vector<int> rest;
    for (int k = 1; k <= 3; ++k)
      if (k != leaf) rest.push_back(k);
    // delete the edge to `leaf`: the other two leaves stay joined by one edge
    expected.insert(Forest(3, {Forest::component_from_tree({}, {{0, {leaf}}}),
                               Forest::component_from_tree({{0, 1}}, {{0, {rest[0]}}, {1, {rest[1]}}})}));
    // contract it: `leaf` sits on the centre
    expected.insert(tree(3, {{0, 1}, {0, 2}}, {{0, {leaf}}, {1, {rest[0]}}, {2, {rest[1]}}}));
  }
  const auto got = forest_covers_down(tripod());
  EXPECT_EQ(std::set<Forest>(got.begin(), got.end()), expected);
  EXPECT_EQ(got.size(), 6U);
}

TEST(Tuffley, TwoEdgePath) {
  // 1 - 2 - 3 with label 2 on the middle vertex
  const Forest path = tree(3, {{0, 1}, {1, 2}}, {{0, {1}}, {1, {2}}, {2, {3}}});
  EXPECT_EQ(path.deletions().size() + path.contractions().size(), 4U);
  const auto got = forest_covers_down(path);
  EXPECT_EQ(got.size(), 4U);
  const std::set<Forest> expected{
      Forest(3, {Forest::component_from_tree({}, {{0, {1}}}), Forest::component_from_tree({{0, 1}}, {{0, {2}}, {1, {3}}})}),
      Forest(3, {Forest::component_from_tree({{0, 1}}, {{0, {1}}, {1, {2}}}), Forest::component_from_tree({}, {{0, {3}}})}),
      tree(3, {{0, 1}}, {{0, {1, 2}}, {1, {3}}}),
      tree(3, {{0, 1}}, {{0, {1}}, {1, {2, 3}}})};
  EXPECT_EQ(std::set<Forest>(got.begin(), got.end()), expected);
}

TEST(Tuffley, EdgeFreeHasNoMoves) {
  const Forest f(3, {Component{0b011U, {}}, Component{0b100U, {}}});
  EXPECT_TRUE(forest_covers_down(f).empty());
}

TEST(Tuffley, CanonicalFormIsIdempotent) {
  const auto t = generate_tuffley(4);
  for (std::size_t x = 1; x < t.size(); ++x) {
    const Forest& f = t.forest(x);
    EXPECT_EQ(Forest(f.n(), f.components()), f);
    for (auto c : f.components()) {
      const auto before = c;
      c.canonicalize();
      EXPECT_EQ(c, before);
    }
  }
}

TEST(Tuffley, SplitSideIsNormalized) {
  // the same tree described from either side of each edge
  const Forest a = tree(4, {{0, 1}, {0, 2}, {0, 5}, {5, 3}, {5, 4}}, {{1, {1}}, {2, {2}}, {3, {3}}, {4, {4}}});
  const Forest b = tree(4, {{9, 3}, {9, 4}, {9, 7}, {7, 1}, {7, 2}}, {{1, {1}}, {2, {2}}, {3, {3}}, {4, {4}}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edge_count(), 5U);
}

TEST(Tuffley, JsonRoundTrip) {
  const auto t = generate_tuffley(4);
  for (std::size_t x = 1; x < t.size(); ++x) {
    const Forest& f = t.forest(x);
    const auto j = f.to_json();
    ASSERT_TRUE(j.contains("components"));
    EXPECT_EQ(Forest::from_json(j), f) << j.dump();
  }
}

TEST(Tuffley, RejectsInvalidForests) {
  EXPECT_THROW(Forest(3, {Component{0b011U, {}}, Component{0b110U, {}}}), Error);
  EXPECT_THROW(Forest(3, {Component{0b011U, {}}}), Error);
  EXPECT_THROW(Forest(4, {Component{0b1111U, {0b0110U, 0b0011U}}}), Error);
  EXPECT_THROW(Forest::component_from_tree({{0, 1}, {1, 2}}, {{0, {1}}, {1, {2}}}), Error);
}

TEST(Tuffley, Rank1IntervalsMatchP2Covers) {
  const auto t = generate_tuffley(3);
  const auto& p = t.poset();
  for (const auto& c : p.covers()) {
    const auto m = match_interval(p.interval(c.lower, c.upper).poset, 2);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->m, 2);
  }
}

TEST(Tuffley, Rank2IntervalsOfT4Match) {
  const auto t = generate_tuffley(4);
  const auto& p = t.poset();
  const UncrossingIntervalIndex index(4);
  std::size_t checked = 0;
  for (std::size_t u = 0; u < p.size(); ++u) {
    p.up_set(u).for_each([&](std::size_t v) {
      if (p.rank(v) - p.rank(u) != 2) return;
      const auto m = index.match(p.interval(u, v).poset);
      ASSERT_TRUE(m.has_value()) << p.name(u) << " " << p.name(v);
      EXPECT_LE(m->m, 4);
      ++checked;
    });
  }
  EXPECT_GT(checked, 0U);
}

TEST(Tuffley, FullIntervalOfT3) {
  const auto t = generate_tuffley(3);
  const auto& p = t.poset();
  const auto sub = p.interval(0, t.maximal()[0]).poset;
  const auto m = match_interval(sub, 3);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->m, 3);
  EXPECT_TRUE(verify_ec(m->labeled_dual, LabelOrder{}).passed());
  // pulled-back labels really are the labels of the matched interval
  const auto& target = UncrossingPoset::generate(3).as_finite_poset(false);
  for (const auto& c : m->labeled_dual.covers()) {
    const auto k = target.cover_index(m->image[c.upper], m->image[c.lower]);
    ASSERT_TRUE(k.has_value());
    EXPECT_EQ(target.cover(*k).label, c.label);
  }
}

TEST(Tuffley, VerifyAllIntervals) {
  for (int n = 3; n <= 4; ++n) {
    const auto r = verify_tuffley(n, 4, 4);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_EQ(r.find("tuffley-match")->info.at("maximal"), trivalent_count(n));
  }
}
