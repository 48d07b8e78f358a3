#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "uncrossing/ec_shelling.hpp"
#include "uncrossing/finite_poset.hpp"
#include "uncrossing/label.hpp"
#include "uncrossing/report.hpp"
#include "uncrossing/uncrossing_poset.hpp"

// Executable property suites for the structure of the dual labeling. All
// checks read P_n* as produced by UncrossingPoset::as_finite_poset(true),
// whose top is element 0.

namespace uncrossing {

struct Sample {
  double fraction = 1.0;
  std::uint64_t seed = 0;
};

/// Which elements serve as interval sources. Deterministic in (size, seed).
inline std::vector<char> sample_mask(std::size_t size, const Sample& sample) {
  std::vector<char> mask(size, 1);
  if (sample.fraction >= 1.0) return mask;
  std::mt19937_64 rng(sample.seed);
  for (auto& m : mask) m = static_cast<double>(rng() >> 11) * 0x1.0p-53 < sample.fraction ? 1 : 0;
  return mask;
}

namespace detail {

inline std::set<std::pair<std::string, std::string>> cover_keys(const std::vector<DualCover>& covers) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& c : covers) out.emplace(element_name(c.upper), c.label.str());
  return out;
}

inline nlohmann::json cover_keys_json(const std::set<std::pair<std::string, std::string>>& keys) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [word, label] : keys) out.push_back(word + " " + label);
  return out;
}

inline std::vector<int> touched_positions(const WireWord& w, const Label& label) {
  const auto [a0, a1] = w.endpoints(label.first());
  const auto [b0, b1] = w.endpoints(label.second());
  std::vector<int> out{a0, a1, b0, b1};
  std::sort(out.begin(), out.end());
  return out;
}

/*
 * Wire identities across one dual cover x -> y. Names are renormalized
 * after a MoveToStart step, so a wire can change its name. A wire keeps the
 * endpoint it starts at, except that in MoveToStart the later-starting wire
 * keeps its second endpoint. `identity` maps names in x to identities; the
 * result maps names in y.
 */
inline std::vector<int> carry_identities(const WireWord& x, const WireWord& y, const Label& label,
                                         const std::vector<int>& identity) {
  const int a = std::min(label.first(), label.second());
  const int b = std::max(label.first(), label.second());
  std::vector<int> out(identity.size(), 0);
  for (int c = 1; c <= x.n(); ++c) {
    const auto [start, end] = x.endpoints(c);
    const int anchor = (c == b && label.is_descending()) ? end : start;
    out[static_cast<std::size_t>(y.at(anchor))] = identity[static_cast<std::size_t>(c)];
  }
  return out;
}

inline Label in_identities(const Label& label, const std::vector<int>& identity) {
  return Label::pair(identity[static_cast<std::size_t>(label.first())], identity[static_cast<std::size_t>(label.second())]);
}

}  // namespace detail

/// The noncrossing-pair criterion against the crossing-count oracle, one
/// case per word.
inline Check cover_criterion_agreement(const UncrossingPoset& up, CoverCriterion criterion = CoverCriterion::ExactlyOne) {
  Check out(criterion == CoverCriterion::ExactlyOne ? "cover-criterion" : "cover-criterion-not-both-crossing");
  std::size_t missing = 0;
  std::size_t extra = 0;
  for (std::size_t x = 1; x < up.size(); ++x) {
    const auto direct = detail::cover_keys(dual_covers(up.word(x)));
    const auto lemma = detail::cover_keys(dual_covers_by_criterion(up.word(x), criterion));
    if (direct == lemma) {
      out.pass();
      continue;
    }
    for (const auto& k : direct) missing += lemma.count(k) ? 0 : 1;
    for (const auto& k : lemma) extra += direct.count(k) ? 0 : 1;
    out.fail({{"word", up.word(x).str()},
              {"direct", detail::cover_keys_json(direct)},
              {"criterion", detail::cover_keys_json(lemma)}});
  }
  out.info["covers_rejected_by_criterion"] = missing;
  out.info["covers_accepted_only_by_criterion"] = extra;
  return out;
}

/// In P_n*, a label descent x<y<z with z below the top is never a
/// topological ascent.
inline Check check_descents_are_topological(const FinitePoset<Label>& dual, const AscentTable<Label>& ascents,
                                            const std::vector<char>& mask) {
  Check out("descent-is-topological-descent");
  for (std::size_t x = 0; x < dual.size(); ++x) {
    if (!mask[x]) continue;
    for (std::size_t e1 : dual.up_covers(x)) {
      const std::size_t y = dual.cover(e1).upper;
      for (std::size_t e2 : dual.up_covers(y)) {
        const std::size_t z = dual.cover(e2).upper;
        if (z == 0) continue;
        const auto& l1 = dual.cover(e1).label;
        const auto& l2 = dual.cover(e2).label;
        if (compare_labels(l1, l2) <= 0) continue;
        out.expect(!ascents.ascent(e1, e2), {{"chain", {dual.name(x), dual.name(y), dual.name(z)}},
                                             {"labels", {l1.str(), l2.str()}}});
      }
    }
  }
  return out;
}

/// For u < v strictly below the top, exactly one saturated chain u -> v has
/// no topological descent.
inline Check check_unique_ascent_chain_below_top(const FinitePoset<Label>& dual, const AscentTable<Label>& ascents,
                                                 const std::vector<char>& mask) {
  Check out("unique-ascent-chain-below-top");
  for (std::size_t u = 1; u < dual.size(); ++u) {
    if (!mask[u]) continue;
    const auto counts =
        count_chains_from(dual, u, [&](std::size_t e1, std::size_t e2) { return ascents.ascent(e1, e2); });
    dual.up_set(u).for_each([&](std::size_t v) {
      if (v == u || v == 0) return;
      out.expect(counts[v] == 1, {{"lower", dual.name(u)}, {"upper", dual.name(v)}, {"ascent_chains", counts[v]}});
    });
  }
  return out;
}

/// The lexicographically first chain from any word to the top is weakly
/// ascending.
inline Check check_lex_first_to_top_weakly_ascending(const FinitePoset<Label>& dual, const std::vector<char>& mask) {
  Check out("lex-first-to-top-weakly-ascending");
  for (std::size_t u = 1; u < dual.size(); ++u) {
    if (!mask[u]) continue;
    const auto chain = lex_first_chain(dual, u, 0, LabelOrder{});
    bool weak = true;
    for (std::size_t k = 1; k < chain.labels.size(); ++k) weak = weak && compare_labels(chain.labels[k - 1], chain.labels[k]) <= 0;
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : chain.labels) labels.push_back(l.str());
    out.expect(weak && !chain.labels.empty() && chain.labels.back().is_top(), {{"lower", dual.name(u)}, {"labels", labels}});
  }
  return out;
}

/// A chain to the top that uses a descending pair has a label descent: the
/// weakly ascending chains to the top use ascending pairs and L only.
inline Check check_descending_labels_force_descent(const FinitePoset<Label>& dual, const std::vector<char>& mask) {
  Check out("descending-labels-force-descent");
  const auto weak = weakly_ascending(dual, LabelOrder{});
  for (std::size_t u = 1; u < dual.size(); ++u) {
    if (!mask[u]) continue;
    const auto all = count_chains_from(dual, u, weak);
    const auto plain = count_chains_from(dual, u, weak, [&](std::size_t e) { return !dual.cover(e).label.is_descending(); });
    out.expect(all[0] == plain[0], {{"lower", dual.name(u)}, {"weak_chains_with_descending_pair", all[0] - plain[0]}});
  }
  return out;
}

/// Every chain from a word to the top other than the lexicographically
/// first one contains a topological descent.
inline Check check_non_lex_first_to_top_has_topological_descent(const FinitePoset<Label>& dual,
                                                                const AscentTable<Label>& ascents,
                                                                const std::vector<char>& mask) {
  Check out("non-lex-first-to-top-has-topological-descent");
  for (std::size_t u = 1; u < dual.size(); ++u) {
    if (!mask[u]) continue;
    const auto counts =
        count_chains_from(dual, u, [&](std::size_t e1, std::size_t e2) { return ascents.ascent(e1, e2); });
    const auto first = lex_first_from(dual, u, LabelOrder{});
    const auto& path = first.path[0];
    bool first_ascends = true;
    for (std::size_t k = 1; k < path.size(); ++k) first_ascends = first_ascends && ascents.ascent(path[k - 1], path[k]);
    out.expect(counts[0] == 1 && first_ascends,
               {{"lower", dual.name(u)}, {"ascent_chains", counts[0]}, {"lex_first_all_ascents", first_ascends}});
  }
  return out;
}

/*
 * u < v < w labeled (k,i) then (j,i), i<j<k, with only three wires moved.
 * The two uncrossings touch four endpoint positions each; they share a wire
 * exactly when they share two positions. The other middle element v' must
 * carry ((j,i),(j,k)), in which case u<v<w is a topological ascent, or
 * ((j,k),(j,i)), in which case it is a topological descent.
 *
 * i and k name wires of u; j names a wire of v and is traced back to u
 * with carry_identities, since a MoveToStart renormalization can rename
 * wires. For the same reason the second step of the other chain is compared
 * by kind (ascending or descending pair) and by the two wires it uncrosses.
 * Chains where some name differs from the stated label are counted in
 * info.renamed_labels.
 */
inline Check check_three_wire_diamonds(const UncrossingPoset& up, const FinitePoset<Label>& dual,
                                       const AscentTable<Label>& ascents, const std::vector<char>& mask) {
  Check out("three-wire-diamond");
  std::size_t renamed = 0;
  for (std::size_t u = 1; u < dual.size(); ++u) {
    if (!mask[u]) continue;
    const WireWord& wu = up.word(u);
    std::vector<int> identity(static_cast<std::size_t>(wu.n()) + 1);
    for (int c = 0; c <= wu.n(); ++c) identity[static_cast<std::size_t>(c)] = c;
    auto carried = [&](std::size_t e1) {
      return detail::carry_identities(wu, up.word(dual.cover(e1).upper), dual.cover(e1).label, identity);
    };
    for (std::size_t e1 : dual.up_covers(u)) {
      const Label l1 = dual.cover(e1).label;
      if (!l1.is_descending()) continue;
      const std::size_t v = dual.cover(e1).upper;
      const int k = l1.first();
      const int i = l1.second();
      for (std::size_t e2 : dual.up_covers(v)) {
        if (dual.cover(e2).upper == 0) continue;
        const Label l2 = dual.cover(e2).label;
        if (!l2.is_descending() || l2.second() != i || !(i < l2.first() && l2.first() < k)) continue;
        // the wire called j in v, as a wire of u
        const auto ids = carried(e1);
        const int j = ids[static_cast<std::size_t>(l2.first())];
        bool literal = j == l2.first() && ids[static_cast<std::size_t>(i)] == i;
        const std::size_t w = dual.cover(e2).upper;
        const auto p1 = detail::touched_positions(wu, l1);
        const auto p2 = detail::touched_positions(up.word(v), l2);
        std::vector<int> shared;
        std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(shared));
        if (shared.size() != 2) continue;

        struct Step {
          Label first;
          Label second;
          std::pair<int, int> wires;
        };
        std::vector<Step> others;
        for (std::size_t f1 : dual.up_covers(u)) {
          const std::size_t mid = dual.cover(f1).upper;
          if (mid == v) continue;
          if (const auto f2 = dual.cover_index(mid, w)) {
            const Label tracked = detail::in_identities(dual.cover(*f2).label, carried(f1));
            others.push_back({dual.cover(f1).label, dual.cover(*f2).label,
                              std::minmax(tracked.first(), tracked.second())});
          }
        }
        const Label ji = Label::pair(j, i);
        const Label jk = Label::pair(j, k);
        const bool one = others.size() == 1;
        const bool former = one && others[0].first == ji && others[0].second.is_ascending() &&
                            others[0].wires == std::make_pair(j, k);
        const bool latter = one && others[0].first == jk && others[0].second.is_descending() &&
                            others[0].wires == std::make_pair(i, j);
        literal = literal && !((former && !(others[0].second == jk)) || (latter && !(others[0].second == ji)));
        renamed += literal ? 0 : 1;
        const bool ascent = ascents.ascent(e1, e2);
        nlohmann::json other_labels = nlohmann::json::array();
        for (const auto& o : others) other_labels.push_back({o.first.str(), o.second.str()});
        out.expect((former && ascent) || (latter && !ascent), {{"chain", {dual.name(u), dual.name(v), dual.name(w)}},
                                                                {"labels", {l1.str(), l2.str()}},
                                                                {"other_chains", other_labels},
                                                                {"topological_ascent", ascent}});
      }
    }
  }
  out.info["renamed_labels"] = renamed;
  return out;
}

/// D1 < D2 in P_n* implies S(D1) <= S(D2) lexicographically.
inline Check check_start_set_order(const UncrossingPoset& up, const FinitePoset<Label>& dual) {
  Check out("start-set-order");
  for (std::size_t a = 1; a < dual.size(); ++a) {
    const StartSet sa = up.word(a).start_set();
    dual.up_set(a).for_each([&](std::size_t b) {
      if (b == a || b == 0) return;
      const StartSet sb = up.word(b).start_set();
      out.expect(sa <= sb, {{"lower", up.word(a).str()}, {"upper", up.word(b).str()}, {"lower_start", sa.str()},
                            {"upper_start", sb.str()}});
    });
  }
  return out;
}

/// Inside an interval whose endpoints share a start set every cover is a
/// SwapV step, i.e. carries an ascending pair.
inline Check check_start_set_intervals_swap_only(const UncrossingPoset& up, const FinitePoset<Label>& dual,
                                                 const std::vector<char>& mask) {
  Check out("start-set-intervals-swap-only");
  for (std::size_t a = 1; a < dual.size(); ++a) {
    if (!mask[a]) continue;
    const StartSet sa = up.word(a).start_set();
    dual.up_set(a).for_each([&](std::size_t b) {
      if (b == a || b == 0 || up.word(b).start_set() != sa) return;
      const Bitset inside = dual.up_set(a) & dual.down_set(b);
      std::size_t bad = 0;
      nlohmann::json witness;
      inside.for_each([&](std::size_t z) {
        for (std::size_t e : dual.up_covers(z)) {
          const auto& c = dual.cover(e);
          if (!inside.test(c.upper) || c.label.is_ascending()) continue;
          if (bad++ == 0) witness = {{"cover", {dual.name(c.lower), dual.name(c.upper)}}, {"label", c.label.str()}};
        }
      });
      witness["interval"] = {dual.name(a), dual.name(b)};
      out.expect(bad == 0, witness);
    });
  }
  return out;
}

/// A rank-two interval with two weakly ascending chains. Such an interval
/// shows the labeling is EC but not EL.
inline Check find_ec_not_el_witness(const FinitePoset<Label>& dual) {
  Check out("ec-not-el-witness");
  nlohmann::json found;
  for (std::size_t x = 0; x < dual.size() && found.is_null(); ++x) {
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> by_top;
    for (std::size_t e1 : dual.up_covers(x))
      for (std::size_t e2 : dual.up_covers(dual.cover(e1).upper)) by_top[dual.cover(e2).upper].emplace_back(e1, e2);
    for (const auto& [z, chains] : by_top) {
      nlohmann::json weak = nlohmann::json::array();
      for (const auto& [e1, e2] : chains) {
        const auto& l1 = dual.cover(e1).label;
        const auto& l2 = dual.cover(e2).label;
        if (compare_labels(l1, l2) <= 0)
          weak.push_back({{"middle", dual.name(dual.cover(e1).upper)}, {"labels", {l1.str(), l2.str()}}});
      }
      if (weak.size() >= 2) {
        found = {{"lower", dual.name(x)}, {"upper", dual.name(z)}, {"weakly_ascending_chains", weak}};
        break;
      }
    }
  }
  if (found.is_null()) {
    out.fail({{"reason", "no rank-2 interval with two weakly ascending chains"}});
  } else {
    out.pass();
    out.info["witness"] = found;
  }
  return out;
}

/// The structural suites above, sources restricted by `sample`.
inline Report lemma_suite(const UncrossingPoset& up, const Sample& sample = {}) {
  const auto dual = up.as_finite_poset(true);
  const AscentTable<Label> ascents(dual, LabelOrder{});
  const auto mask = sample_mask(dual.size(), sample);
  Report r;
  r.poset = "P_" + std::to_string(up.n()) + "*";
  r.add(check_descents_are_topological(dual, ascents, mask));
  r.add(check_unique_ascent_chain_below_top(dual, ascents, mask));
  r.add(check_lex_first_to_top_weakly_ascending(dual, mask));
  r.add(check_descending_labels_force_descent(dual, mask));
  r.add(check_non_lex_first_to_top_has_topological_descent(dual, ascents, mask));
  r.add(check_three_wire_diamonds(up, dual, ascents, mask));
  r.add(check_start_set_order(up, dual));
  r.add(check_start_set_intervals_swap_only(up, dual, mask));
  for (auto& c : r.checks) {
    if (sample.fraction < 1.0) {
      c.info["sample_fraction"] = sample.fraction;
      c.info["seed"] = sample.seed;
    }
  }
  return r;
}

}  // namespace uncrossing
