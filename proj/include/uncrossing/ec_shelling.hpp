#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uncrossing/bitset.hpp"
#include "uncrossing/errors.hpp"
#include "uncrossing/finite_poset.hpp"
#include "uncrossing/parallel.hpp"
#include "uncrossing/report.hpp"

namespace uncrossing {

/// Labels along a saturated chain, with the chain's elements
/// (elements.size() == labels.size() + 1).
template <class L>
struct ChainLabelSequence {
  std::vector<L> labels;
  std::vector<std::size_t> elements;
};

namespace detail {

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

template <class L, class Cmp>
std::strong_ordering compare_cover_paths(const FinitePoset<L>& p, const std::vector<std::size_t>& a,
                                         const std::vector<std::size_t>& b, Cmp& cmp) {
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    const auto c = cmp(p.cover(a[k]).label, p.cover(b[k]).label);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

template <class L>
nlohmann::json labels_json(const FinitePoset<L>& p, const std::vector<std::size_t>& path) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k : path) out.push_back(p.cover(k).label.str());
  return out;
}

}  // namespace detail

/// Topological ascent flags for every length-two saturated chain x < y < z.
///
/// A chain is a topological ascent when its label pair is strictly
/// lexicographically smaller than that of every other length-two chain
/// between the same endpoints; every other chain is a topological descent.
template <class L>
class AscentTable {
 public:
  template <class Cmp>
  AscentTable(const FinitePoset<L>& poset, Cmp cmp) : poset_(&poset), slot_(poset.covers().size()) {
    const auto covers = poset.covers();
    for (std::size_t x = 0; x < poset.size(); ++x) {
      const auto ups = poset.up_covers(x);
      for (std::size_t s = 0; s < ups.size(); ++s) slot_[ups[s]] = s;
    }
    flags_.resize(covers.size());
    for (std::size_t e = 0; e < covers.size(); ++e) flags_[e].assign(poset.up_covers(covers[e].upper).size(), 0);

    for (std::size_t x = 0; x < poset.size(); ++x) {
      std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> by_top;
      for (std::size_t e1 : poset.up_covers(x))
        for (std::size_t e2 : poset.up_covers(covers[e1].upper)) by_top[covers[e2].upper].emplace_back(e1, e2);
      for (const auto& [z, chains] : by_top) {
        std::size_t best = 0;
        bool strict = true;
        for (std::size_t k = 1; k < chains.size(); ++k) {
          const auto c = compare_pair(chains[k], chains[best], cmp);
          if (c < 0) {
            best = k;
            strict = true;
          } else if (c == 0) {
            strict = false;
          }
        }
        if (strict) flags_[chains[best].first][slot_[chains[best].second]] = 1;
      }
    }
  }

  /// Covers e1 then e2 must be consecutive (upper of e1 == lower of e2).
  bool ascent(std::size_t e1, std::size_t e2) const { return flags_[e1][slot_[e2]] != 0; }

 private:
  template <class Cmp>
  std::strong_ordering compare_pair(std::pair<std::size_t, std::size_t> a, std::pair<std::size_t, std::size_t> b,
                                    Cmp& cmp) const {
    const auto& p = *poset_;
    const auto c1 = cmp(p.cover(a.first).label, p.cover(b.first).label);
    if (c1 != 0) return c1 < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const auto c2 = cmp(p.cover(a.second).label, p.cover(b.second).label);
    if (c2 != 0) return c2 < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const FinitePoset<L>* poset_;
  std::vector<std::size_t> slot_;
  std::vector<std::vector<char>> flags_;
};

/// Whether u < v < w, each a cover, is a topological ascent.
template <class L, class Cmp>
bool is_topological_ascent(const FinitePoset<L>& poset, std::size_t u, std::size_t v, std::size_t w, Cmp cmp) {
  const auto first = poset.cover_index(u, v);
  const auto second = poset.cover_index(v, w);
  if (!first || !second) throw Error(Errc::NotAChain, poset.name(u) + " < " + poset.name(v) + " < " + poset.name(w));
  const auto& mine_a = poset.cover(*first).label;
  const auto& mine_b = poset.cover(*second).label;
  for (std::size_t e1 : poset.up_covers(u)) {
    const std::size_t mid = poset.cover(e1).upper;
    if (mid == v) continue;
    for (std::size_t e2 : poset.up_covers(mid)) {
      if (poset.cover(e2).upper != w) continue;
      const auto c1 = cmp(poset.cover(e1).label, mine_a);
      if (c1 < 0) return false;
      if (c1 == 0 && !(cmp(mine_b, poset.cover(e2).label) < 0)) return false;
    }
  }
  return true;
}

/// Counts saturated chains from u to every element, keeping only chains whose
/// covers satisfy edge_ok and whose consecutive covers satisfy pair_ok.
/// counts[u] == 1 (the empty chain); elements not above u get 0.
template <class L, class PairOk, class EdgeOk>
std::vector<std::uint64_t> count_chains_from(const FinitePoset<L>& poset, std::size_t u, PairOk&& pair_ok,
                                             EdgeOk&& edge_ok) {
  std::vector<std::uint64_t> per_cover(poset.covers().size(), 0);
  std::vector<std::uint64_t> counts(poset.size(), 0);
  const Bitset& above = poset.up_set(u);
  counts[u] = 1;
  for (std::size_t x : poset.topological_order()) {
    if (!above.test(x)) continue;
    for (std::size_t e2 : poset.up_covers(x)) {
      if (!edge_ok(e2)) continue;
      std::uint64_t c = 0;
      if (x == u) {
        c = 1;
      } else {
        for (std::size_t e1 : poset.down_covers(x))
          if (per_cover[e1] != 0 && pair_ok(e1, e2)) c = detail::saturating_add(c, per_cover[e1]);
      }
      per_cover[e2] = c;
      counts[poset.cover(e2).upper] = detail::saturating_add(counts[poset.cover(e2).upper], c);
    }
  }
  return counts;
}

template <class L, class PairOk>
std::vector<std::uint64_t> count_chains_from(const FinitePoset<L>& poset, std::size_t u, PairOk&& pair_ok) {
  return count_chains_from(poset, u, pair_ok, [](std::size_t) { return true; });
}

/// Lexicographically least chains from one source: path[x] lists the covers
/// of the least chain from the source to x; tie[x] is set when two distinct
/// chains share that least label sequence. Prefixes of least chains are
/// least chains, so one forward pass suffices in a graded poset.
template <class L>
struct LexFirstFrom {
  std::vector<std::vector<std::size_t>> path;
  std::vector<char> reached;
  std::vector<char> tie;
};

template <class L, class Cmp>
LexFirstFrom<L> lex_first_from(const FinitePoset<L>& poset, std::size_t u, Cmp cmp) {
  LexFirstFrom<L> out;
  out.path.assign(poset.size(), {});
  out.reached.assign(poset.size(), 0);
  out.tie.assign(poset.size(), 0);
  const Bitset& above = poset.up_set(u);
  out.reached[u] = 1;
  std::vector<std::size_t> candidate;
  for (std::size_t y : poset.topological_order()) {
    if (!above.test(y) || y == u) continue;
    bool have = false;
    for (std::size_t e : poset.down_covers(y)) {
      const std::size_t x = poset.cover(e).lower;
      if (!out.reached[x]) continue;
      candidate = out.path[x];
      candidate.push_back(e);
      if (!have) {
        out.path[y] = candidate;
        out.tie[y] = out.tie[x];
        have = true;
        continue;
      }
      const auto c = detail::compare_cover_paths(poset, candidate, out.path[y], cmp);
      if (c < 0) {
        out.path[y] = candidate;
        out.tie[y] = out.tie[x];
      } else if (c == 0) {
        out.tie[y] = 1;
      }
    }
    out.reached[y] = have;
  }
  return out;
}

/// The lexicographically least saturated chain from u to w.
template <class L, class Cmp>
ChainLabelSequence<L> lex_first_chain(const FinitePoset<L>& poset, std::size_t u, std::size_t w, Cmp cmp) {
  if (!poset.leq(u, w)) throw Error(Errc::NotComparable, poset.name(u) + " is not below " + poset.name(w));
  const auto first = lex_first_from(poset, u, cmp);
  ChainLabelSequence<L> out;
  out.elements.push_back(u);
  for (std::size_t e : first.path[w]) {
    out.labels.push_back(poset.cover(e).label);
    out.elements.push_back(poset.cover(e).upper);
  }
  return out;
}

struct EcOptions {
  unsigned workers = 1;
  /// Only intervals of rank <= max_rank are checked (negative: no limit).
  int max_rank = -1;
  /// Optional source filter, e.g. for seeded sampling.
  std::function<bool(std::size_t)> include_source;
};

/*
 * EC-labeling check. For every interval [u,w], u < w:
 *  - exactly one saturated chain consists of topological ascents only, and
 *  - the lexicographically least chain is that chain.
 * Distinct chains carrying the same least label sequence are reported
 * under their own check rather than resolved.
 */
template <class L, class Cmp>
Report verify_ec(const FinitePoset<L>& poset, Cmp cmp, const EcOptions& opts = {}) {
  Report report;
  Check graded("graded");
  graded.expect(poset.graded(), {{"reason", "some cover does not raise the rank by one"}});
  report.add(graded);
  if (!graded.passed()) return report;

  const AscentTable<L> ascents(poset, cmp);
  std::vector<Check> ec(poset.size(), Check("ec"));
  std::vector<Check> ties(poset.size(), Check("distinct-label-sequences"));
  parallel_for(poset.size(), opts.workers, [&](std::size_t u) {
    if (opts.include_source && !opts.include_source(u)) return;
    const auto counts =
        count_chains_from(poset, u, [&](std::size_t e1, std::size_t e2) { return ascents.ascent(e1, e2); });
    const auto first = lex_first_from(poset, u, cmp);
    poset.up_set(u).for_each([&](std::size_t w) {
      if (w == u) return;
      if (opts.max_rank >= 0 && poset.rank(w) - poset.rank(u) > opts.max_rank) return;
      const auto& path = first.path[w];
      bool first_ascends = true;
      for (std::size_t k = 1; k < path.size(); ++k) first_ascends = first_ascends && ascents.ascent(path[k - 1], path[k]);
      ec[u].expect(counts[w] == 1 && first_ascends,
                   {{"lower", poset.name(u)},
                    {"upper", poset.name(w)},
                    {"ascending_chains", counts[w]},
                    {"lex_first", detail::labels_json(poset, path)},
                    {"lex_first_all_ascents", first_ascends}});
      ties[u].expect(!first.tie[w], {{"lower", poset.name(u)},
                                      {"upper", poset.name(w)},
                                      {"labels", detail::labels_json(poset, path)}});
    });
  });
  Check ec_all("ec");
  Check ties_all("distinct-label-sequences");
  for (std::size_t u = 0; u < poset.size(); ++u) {
    ec_all.merge(ec[u]);
    ties_all.merge(ties[u]);
  }
  report.add(std::move(ec_all));
  report.add(std::move(ties_all));
  return report;
}

/// Weakly ascending chain predicate for count_chains_from.
template <class L, class Cmp>
auto weakly_ascending(const FinitePoset<L>& poset, Cmp cmp) {
  return [&poset, cmp](std::size_t e1, std::size_t e2) { return cmp(poset.cover(e1).label, poset.cover(e2).label) <= 0; };
}

/// EL-labeling check: each interval has exactly one weakly ascending chain
/// and it is lexicographically least.
template <class L, class Cmp>
Check verify_el(const FinitePoset<L>& poset, Cmp cmp, unsigned workers = 1) {
  std::vector<Check> partial(poset.size(), Check("el"));
  const auto weak = weakly_ascending(poset, cmp);
  parallel_for(poset.size(), workers, [&](std::size_t u) {
    const auto counts = count_chains_from(poset, u, weak);
    const auto first = lex_first_from(poset, u, cmp);
    poset.up_set(u).for_each([&](std::size_t w) {
      if (w == u) return;
      const auto& path = first.path[w];
      bool first_weak = true;
      for (std::size_t k = 1; k < path.size(); ++k) first_weak = first_weak && weak(path[k - 1], path[k]);
      partial[u].expect(counts[w] == 1 && first_weak, {{"lower", poset.name(u)},
                                                        {"upper", poset.name(w)},
                                                        {"weakly_ascending_chains", counts[w]},
                                                        {"lex_first", detail::labels_json(poset, path)}});
    });
  });
  Check out("el");
  for (const auto& c : partial) out.merge(c);
  return out;
}

/// Maximal chains of a poset with a bottom and a top, each as the list of
/// its covers. Throws TooManyChains beyond `limit`.
template <class L>
std::vector<std::vector<std::size_t>> maximal_chains(const FinitePoset<L>& poset, std::size_t limit) {
  const auto bottom = poset.bottom();
  const auto top = poset.top();
  if (!bottom || !top) throw Error(Errc::NotComparable, "maximal chain enumeration needs a bounded poset");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> walk = [&](std::size_t x) {
    if (x == *top) {
      if (out.size() >= limit) throw Error(Errc::TooManyChains, "more than " + std::to_string(limit) + " maximal chains");
      out.push_back(stack);
      return;
    }
    for (std::size_t e : poset.up_covers(x)) {
      stack.push_back(e);
      walk(poset.cover(e).upper);
      stack.pop_back();
    }
  };
  walk(*bottom);
  return out;
}

/// Facet of the order complex spanned by a maximal chain.
template <class L>
Bitset chain_facet(const FinitePoset<L>& poset, const std::vector<std::size_t>& chain) {
  Bitset f(poset.size());
  if (chain.empty()) return f;
  f.set(poset.cover(chain.front()).lower);
  for (std::size_t e : chain) f.set(poset.cover(e).upper);
  return f;
}

/// Direct shelling test of a facet order: for each j >= 2 the intersection of
/// F_j with the union of earlier facets is pure of codimension one in F_j.
/// That holds iff every F_i ∩ F_j (i < j) lies in some F_k ∩ F_j (k < j)
/// missing exactly one vertex of F_j.
inline Check check_shelling(const std::vector<Bitset>& facets) {
  Check out("shelling");
  for (std::size_t j = 1; j < facets.size(); ++j) {
    const Bitset& fj = facets[j];
    Bitset available(fj.size());
    std::vector<Bitset> missing;
    missing.reserve(j);
    for (std::size_t i = 0; i < j; ++i) {
      Bitset m = fj;
      m.subtract(facets[i]);
      if (m.count() == 1) available |= m;
      missing.push_back(std::move(m));
    }
    bool ok = true;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < j && ok; ++i) {
      if (!missing[i].intersects(available)) {
        ok = false;
        bad = i;
      }
    }
    out.expect(ok, {{"facet", j}, {"earlier_facet", bad}});
  }
  return out;
}

/// Orders the maximal chains lexicographically by label sequence and checks
/// the shelling condition on the resulting facet order directly.
template <class L, class Cmp>
Report verify_shelling_order(const FinitePoset<L>& poset, Cmp cmp, std::size_t limit = 1'000'000) {
  auto chains = maximal_chains(poset, limit);
  std::stable_sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
    return detail::compare_cover_paths(poset, a, b, cmp) < 0;
  });
  std::vector<Bitset> facets;
  facets.reserve(chains.size());
  for (const auto& c : chains) facets.push_back(chain_facet(poset, c));
  Report report;
  Check check = check_shelling(facets);
  check.info["facets"] = facets.size();
  report.add(std::move(check));
  return report;
}

}  // namespace uncrossing
