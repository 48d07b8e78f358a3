#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "uncrossing/bitset.hpp"
#include "uncrossing/ec_shelling.hpp"
#include "uncrossing/errors.hpp"
#include "uncrossing/finite_poset.hpp"
#include "uncrossing/isomorphism.hpp"
#include "uncrossing/label.hpp"
#include "uncrossing/parallel.hpp"
#include "uncrossing/permutation.hpp"
#include "uncrossing/report.hpp"
#include "uncrossing/uncrossing_poset.hpp"

namespace uncrossing {

/// Set of leaf labels, bit l-1 for label l.
using LeafSet = std::uint32_t;

namespace detail {

inline int least_label(LeafSet s) { return std::countr_zero(s) + 1; }

inline std::vector<int> leaf_list(LeafSet s) {
  std::vector<int> out;
  for (int l = 1; s != 0; ++l, s >>= 1)
    if (s & 1U) out.push_back(l);
  return out;
}

inline std::string render_leaves(LeafSet s, int n) { return render_int_sequence(leaf_list(s), n); }

/// The side of the split {side, whole \ side} that avoids the least label of
/// `whole`; 0 when the split is trivial.
inline LeafSet split_side(LeafSet side, LeafSet whole) {
  side &= whole;
  const LeafSet other = whole & ~side;
  if (side == 0 || other == 0) return 0;
  const LeafSet least = whole & (~whole + 1);
  return (side & least) ? other : side;
}

}  // namespace detail

/*
 * One tree of a forest up to combinatorial equivalence: its label set and
 * its splits. Each split is stored as the side avoiding the least label,
 * so the splits double as the clusters of the tree rooted at that label.
 * Unlabeled vertices of degree two disappear in this encoding.
 */
struct Component {
  LeafSet labels = 0;
  std::vector<LeafSet> splits;

  auto operator<=>(const Component&) const = default;

  void canonicalize() {
    for (auto& s : splits) s = detail::split_side(s, labels);
    std::erase(splits, LeafSet{0});
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  }
};

class Forest {
 public:
  Forest() = default;

  /// Validates that the label sets partition {1..n} and that the splits of
  /// every component are pairwise compatible; throws NotPhylogenetic.
  Forest(int n, std::vector<Component> components) : n_(n), components_(std::move(components)) {
    if (n < 1 || n > 31) throw Error(Errc::NotPhylogenetic, "label count must be in 1..31");
    const LeafSet all = n == 31 ? 0x7fffffffU : ((LeafSet{1} << n) - 1);
    LeafSet seen = 0;
    for (auto& c : components_) {
      if (c.labels == 0 || (c.labels & ~all) != 0 || (c.labels & seen) != 0)
        throw Error(Errc::NotPhylogenetic, "component label sets must partition 1.." + std::to_string(n));
      seen |= c.labels;
      c.canonicalize();
      for (std::size_t a = 0; a < c.splits.size(); ++a) {
        for (std::size_t b = a + 1; b < c.splits.size(); ++b) {
          const LeafSet x = c.splits[a];
          const LeafSet y = c.splits[b];
          if ((x & y) != 0 && (x & ~y) != 0 && (y & ~x) != 0)
            throw Error(Errc::NotPhylogenetic, "incompatible splits in one component");
        }
      }
    }
    if (seen != all) throw Error(Errc::NotPhylogenetic, "component label sets must partition 1.." + std::to_string(n));
    std::sort(components_.begin(), components_.end(), [](const Component& a, const Component& b) {
      return detail::least_label(a.labels) < detail::least_label(b.labels);
    });
  }

  /// Builds one component from an explicit tree; vertex ids are arbitrary.
  static Component component_from_tree(const std::vector<std::pair<int, int>>& edges,
                                       const std::map<int, std::vector<int>>& labels) {
    std::map<int, std::vector<int>> adj;
    std::map<int, LeafSet> at;
    for (const auto& [v, ls] : labels) {
      adj[v];
      for (int l : ls) {
        if (l < 1 || l > 31) throw Error(Errc::NotPhylogenetic, "label out of range");
        at[v] |= LeafSet{1} << (l - 1);
      }
    }
    for (const auto& [u, v] : edges) {
      if (u == v) throw Error(Errc::NotPhylogenetic, "loop edge");
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    if (adj.empty()) throw Error(Errc::NotPhylogenetic, "empty component");
    if (edges.size() + 1 != adj.size()) throw Error(Errc::NotPhylogenetic, "component is not a tree");
    std::function<LeafSet(int, int)> below = [&](int v, int from) {
      LeafSet s = at.count(v) ? at.at(v) : 0;
      for (int w : adj[v])
        if (w != from) s |= below(w, v);
      return s;
    };
    Component c;
    std::set<int> reached;
    std::function<void(int, int)> walk = [&](int v, int from) {
      if (!reached.insert(v).second) throw Error(Errc::NotPhylogenetic, "component is not a tree");
      c.labels |= at.count(v) ? at.at(v) : 0;
      for (int w : adj[v])
        if (w != from) walk(w, v);
    };
    walk(adj.begin()->first, adj.begin()->first);
    if (reached.size() != adj.size()) throw Error(Errc::NotPhylogenetic, "component is not connected");
    for (const auto& [u, v] : edges) {
      const LeafSet side = below(v, u);
      if (side == 0 || side == c.labels) throw Error(Errc::NotPhylogenetic, "edge with no labels on one side");
      c.splits.push_back(side);
    }
    c.canonicalize();
    return c;
  }

  int n() const noexcept { return n_; }
  const std::vector<Component>& components() const noexcept { return components_; }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& c : components_) e += c.splits.size();
    return e;
  }

  auto operator<=>(const Forest&) const = default;

  /// "{123:1|23,2|13,3|12}{4}": one brace group per component, its labels,
  /// then its splits.
  std::string str() const {
    std::string out;
    for (const auto& c : components_) {
      out += "{" + detail::render_leaves(c.labels, n_);
      for (std::size_t k = 0; k < c.splits.size(); ++k) {
        out += k == 0 ? ":" : ",";
        out += detail::render_leaves(c.labels & ~c.splits[k], n_) + "|" + detail::render_leaves(c.splits[k], n_);
      }
      out += "}";
    }
    return out;
  }

  /// Forests obtained by deleting one edge.
  std::vector<Forest> deletions() const {
    std::vector<Forest> out;
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
      const Component& c = components_[ci];
      for (LeafSet cut : c.splits) {
        Component a{c.labels & ~cut, {}};
        Component b{cut, {}};
        for (LeafSet s : c.splits) {
          if (s == cut) continue;
          a.splits.push_back(s);
          b.splits.push_back(s);
        }
        a.canonicalize();
        b.canonicalize();
        auto parts = components_;
        parts[ci] = a;
        parts.push_back(b);
        out.emplace_back(n_, std::move(parts));
      }
    }
    return out;
  }

  /// Forests obtained by contracting one edge.
  std::vector<Forest> contractions() const {
    std::vector<Forest> out;
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
      for (std::size_t k = 0; k < components_[ci].splits.size(); ++k) {
        auto parts = components_;
        parts[ci].splits.erase(parts[ci].splits.begin() + static_cast<std::ptrdiff_t>(k));
        out.emplace_back(n_, std::move(parts));
      }
    }
    return out;
  }

  /// {"components":[{"edges":[[u,v]],"labels":{"vertex":[ints]}}]}. Vertex
  /// 0 of each component holds its least label; the others are its clusters.
  nlohmann::json to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : components_) {
      std::vector<LeafSet> clusters = c.splits;
      std::sort(clusters.begin(), clusters.end(), [](LeafSet a, LeafSet b) {
        return std::make_pair(-std::popcount(a), a) < std::make_pair(-std::popcount(b), b);
      });
      std::vector<LeafSet> own(clusters.size() + 1, 0);
      own[0] = c.labels;
      nlohmann::json edges = nlohmann::json::array();
      for (std::size_t k = 0; k < clusters.size(); ++k) {
        std::size_t parent = 0;
        for (std::size_t p = 0; p < k; ++p)
          if ((clusters[k] & ~clusters[p]) == 0) parent = p + 1;
        edges.push_back({parent, k + 1});
        own[k + 1] = clusters[k];
        own[parent] &= ~clusters[k];
      }
      nlohmann::json labels = nlohmann::json::object();
      for (std::size_t v = 0; v < own.size(); ++v)
        if (own[v] != 0) labels[std::to_string(v)] = detail::leaf_list(own[v]);
      comps.push_back({{"edges", std::move(edges)}, {"labels", std::move(labels)}});
    }
    return {{"components", std::move(comps)}};
  }

  static Forest from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("components") || !j.at("components").is_array())
      throw Error(Errc::BadSyntax, "forest JSON needs a components array");
    std::vector<Component> comps;
    LeafSet all = 0;
    for (const auto& cj : j.at("components")) {
      std::vector<std::pair<int, int>> edges;
      std::map<int, std::vector<int>> labels;
      if (cj.contains("edges"))
        for (const auto& e : cj.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      if (cj.contains("labels"))
        for (const auto& [v, ls] : cj.at("labels").items()) labels[std::stoi(v)] = ls.get<std::vector<int>>();
      comps.push_back(component_from_tree(edges, labels));
      all |= comps.back().labels;
    }
    return Forest(std::bit_width(all), std::move(comps));
  }

 private:
  int n_ = 0;
  std::vector<Component> components_;
};

/// Deletions and contractions of every edge, deduplicated.
inline std::vector<Forest> forest_covers_down(const Forest& f) {
  std::vector<Forest> out = f.deletions();
  for (auto& g : f.contractions()) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Leaf-labeled trees on 1..n whose internal vertices all have degree 3,
/// built by inserting leaf k into every edge of the trees on k-1 leaves.
inline std::vector<Forest> trivalent_trees(int n) {
  if (n < 2) throw Error(Errc::BadSyntax, "trivalent trees need n >= 2");
  if (n == 2) return {Forest(2, {Component{0b11U, {0b10U}}})};
  struct Tree {
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::vector<int>> labels;
    int vertices = 0;
  };
  std::vector<Tree> trees{Tree{{{0, 1}, {0, 2}, {0, 3}}, {{1, {1}}, {2, {2}}, {3, {3}}}, 4}};
  for (int k = 4; k <= n; ++k) {
    std::map<Component, Tree> next;
    for (const auto& t : trees) {
      for (std::size_t e = 0; e < t.edges.size(); ++e) {
        Tree g = t;
        const auto [a, b] = g.edges[e];
        const int mid = g.vertices++;
        const int leaf = g.vertices++;
        g.edges[e] = {a, mid};
        g.edges.emplace_back(mid, b);
        g.edges.emplace_back(mid, leaf);
        g.labels[leaf] = {k};
        next.emplace(Forest::component_from_tree(g.edges, g.labels), std::move(g));
      }
    }
    trees.clear();
    for (auto& [c, t] : next) trees.push_back(std::move(t));
  }
  std::vector<Forest> out;
  for (const auto& t : trees) out.emplace_back(n, std::vector<Component>{Forest::component_from_tree(t.edges, t.labels)});
  std::sort(out.begin(), out.end());
  return out;
}

using TuffleyElement = std::variant<Bottom, Forest>;

/*
 * T(n): element 0 is the adjoined bottom, the forests follow ordered by
 * edge count and then canonical form. The order is generated by single
 * deletions and contractions; a deletion can remove several edges at once
 * (suppressed degree-two vertices), so covers are the moves that are not
 * implied by other moves.
 */
class TuffleyPoset {
 public:
  static TuffleyPoset generate(int n, std::size_t limit = 1'000'000) {
    if (n < 2) throw Error(Errc::BadSyntax, "Tuffley posets need n >= 2");
    std::set<Forest> all;
    std::vector<Forest> frontier = trivalent_trees(n);
    for (const auto& t : frontier) all.insert(t);
    while (!frontier.empty()) {
      std::vector<Forest> next;
      for (const auto& f : frontier) {
        for (auto& g : forest_covers_down(f)) {
          if (!all.insert(g).second) continue;
          if (all.size() + 1 > limit) throw Error(Errc::TooLarge, "T(" + std::to_string(n) + ") exceeds the element limit");
          next.push_back(std::move(g));
        }
      }
      frontier = std::move(next);
    }

    TuffleyPoset t;
    t.n_ = n;
    t.elements_.emplace_back(Bottom{});
    std::vector<Forest> sorted(all.begin(), all.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Forest& a, const Forest& b) { return a.edge_count() < b.edge_count(); });
    for (auto& f : sorted) {
      t.index_.emplace(f, t.elements_.size());
      t.elements_.emplace_back(std::move(f));
    }

    const std::size_t size = t.elements_.size();
    std::vector<Bitset> below(size, Bitset(size));
    std::vector<FinitePoset<>::Cover> covers;
    std::vector<std::string> names{"0"};
    below[0].set(0);
    for (std::size_t x = 1; x < size; ++x) {
      const Forest& f = t.forest(x);
      names.push_back(f.str());
      below[x].set(x);
      below[x].set(0);
      if (f.edge_count() == 0) {
        covers.push_back({0, x, {}});
        continue;
      }
      std::vector<std::size_t> moves;
      for (const auto& g : forest_covers_down(f)) moves.push_back(t.index_.at(g));
      for (std::size_t y : moves) below[x] |= below[y];
      for (std::size_t y : moves) {
        bool implied = false;
        for (std::size_t z : moves) implied = implied || (z != y && below[z].test(y));
        if (!implied) covers.push_back({y, x, {}});
      }
    }
    t.poset_ = FinitePoset<>(size, std::move(covers), std::move(names));
    return t;
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const TuffleyElement& element(std::size_t x) const { return elements_.at(x); }
  const Forest& forest(std::size_t x) const { return std::get<Forest>(elements_.at(x)); }
  const FinitePoset<>& poset() const noexcept { return poset_; }

  std::optional<std::size_t> index_of(const Forest& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
      if (poset_.up_covers(x).empty()) out.push_back(x);
    return out;
  }

  std::vector<std::size_t> edge_free() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 1; x < size(); ++x)
      if (forest(x).edge_count() == 0) out.push_back(x);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<TuffleyElement> elements_;
  std::map<Forest, std::size_t> index_;
  FinitePoset<> poset_;
};

inline TuffleyPoset generate_tuffley(int n, std::size_t limit = 1'000'000) { return TuffleyPoset::generate(n, limit); }

/// An interval [lower, upper] of P_m isomorphic to a given poset, the
/// isomorphism, and the dual of that poset carrying the pulled-back labels.
struct IntervalMatch {
  int m = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<std::size_t> image;
  FinitePoset<Label> labeled_dual;
};

namespace detail {

template <class L>
std::vector<std::size_t> rank_profile_of(const FinitePoset<L>& p) {
  std::vector<std::size_t> out(static_cast<std::size_t>(p.max_rank()) + 1, 0);
  for (std::size_t x = 0; x < p.size(); ++x) ++out[static_cast<std::size_t>(p.rank(x))];
  return out;
}

}  // namespace detail

/// Intervals of P_2, ..., P_max_m bucketed by rank profile and cover count.
class UncrossingIntervalIndex {
 public:
  explicit UncrossingIntervalIndex(int max_m) : max_m_(max_m) {
    for (int m = 2; m <= max_m; ++m) {
      posets_.push_back(UncrossingPoset::generate(m).as_finite_poset(false));
      const auto& p = posets_.back();
      for (std::size_t u = 0; u < p.size(); ++u) {
        p.up_set(u).for_each([&](std::size_t v) {
          const auto sub = p.interval(u, v).poset;
          buckets_[key(sub)].push_back({m, u, v});
        });
      }
    }
  }

  int max_m() const noexcept { return max_m_; }
  const FinitePoset<Label>& poset(int m) const { return posets_.at(static_cast<std::size_t>(m - 2)); }

  /// First match in (m, lower, upper) order; nullopt is NoMatchFound.
  template <class L>
  std::optional<IntervalMatch> match(const FinitePoset<L>& target) const {
    if (!target.graded()) return std::nullopt;
    auto it = buckets_.find(key(target));
    if (it == buckets_.end()) return std::nullopt;
    for (const auto& entry : it->second) {
      const auto& p = poset(entry.m);
      const auto sub = p.interval(entry.lower, entry.upper);
      const auto iso = find_isomorphism(target, sub.poset);
      if (!iso) continue;
      IntervalMatch out;
      out.m = entry.m;
      out.lower = entry.lower;
      out.upper = entry.upper;
      for (std::size_t x : *iso) out.image.push_back(sub.to_parent[x]);
      const auto labeled = target.relabeled([&](const auto& c) {
        return sub.poset.cover(*sub.poset.cover_index((*iso)[c.lower], (*iso)[c.upper])).label;
      });
      out.labeled_dual = labeled.dual();
      return out;
    }
    return std::nullopt;
  }

 private:
  struct Entry {
    int m;
    std::size_t lower;
    std::size_t upper;
  };
  using Key = std::pair<std::vector<std::size_t>, std::size_t>;

  template <class L>
  static Key key(const FinitePoset<L>& p) {
    return {detail::rank_profile_of(p), p.covers().size()};
  }

  int max_m_;
  std::vector<FinitePoset<Label>> posets_;
  std::map<Key, std::vector<Entry>> buckets_;
};

template <class L>
std::optional<IntervalMatch> match_interval(const FinitePoset<L>& t_interval, int max_m) {
  return UncrossingIntervalIndex(max_m).match(t_interval);
}

/*
 * Every interval [u,v], u < v, of T(n) is matched to an interval of some
 * P_m, m <= max_m, and the pulled-back labeling of its dual must pass
 * verify_ec. Unmatched intervals are reported, not thrown.
 */
inline Report verify_tuffley(int n, int max_m, unsigned workers = 1) {
  const TuffleyPoset t = generate_tuffley(n);
  const UncrossingIntervalIndex index(max_m);
  const auto& p = t.poset();
  std::vector<Check> graded(p.size(), Check("tuffley-graded"));
  std::vector<Check> matched(p.size(), Check("tuffley-match"));
  std::vector<Check> ec(p.size(), Check("tuffley-ec"));
  std::vector<std::map<int, std::size_t>> by_m(p.size());
  parallel_for(p.size(), workers, [&](std::size_t u) {
    p.up_set(u).for_each([&](std::size_t v) {
      if (v == u) return;
      const auto sub = p.interval(u, v).poset;
      const nlohmann::json where{{"lower", p.name(u)}, {"upper", p.name(v)}, {"size", sub.size()}};
      graded[u].expect(sub.graded(), where);
      const auto m = index.match(sub);
      matched[u].expect(m.has_value(), where);
      if (!m) return;
      ++by_m[u][m->m];
      const Report r = verify_ec(m->labeled_dual, LabelOrder{});
      nlohmann::json w = where;
      w["m"] = m->m;
      w["matched"] = {index.poset(m->m).name(m->lower), index.poset(m->m).name(m->upper)};
      ec[u].expect(r.passed(), w);
    });
  });
  Report r;
  r.poset = "T(" + std::to_string(n) + ")";
  Check g("tuffley-graded");
  Check mt("tuffley-match");
  Check e("tuffley-ec");
  std::map<int, std::size_t> totals;
  for (std::size_t u = 0; u < p.size(); ++u) {
    g.merge(graded[u]);
    mt.merge(matched[u]);
    e.merge(ec[u]);
    for (const auto& [m, c] : by_m[u]) totals[m] += c;
  }
  mt.info["elements"] = t.size();
  mt.info["maximal"] = t.maximal().size();
  mt.info["edge_free"] = t.edge_free().size();
  mt.info["max_m"] = max_m;
  for (const auto& [m, c] : totals) mt.info["matched_in_P_" + std::to_string(m)] = c;
  r.add(std::move(g));
  r.add(std::move(mt));
  r.add(std::move(e));
  return r;
}

}  // namespace uncrossing
