#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "uncrossing/bitset.hpp"
#include "uncrossing/finite_poset.hpp"

namespace uncrossing {

namespace detail {

// Joint colour refinement of two posets, seeded with (rank, up-degree,
// down-degree) and refined by the multisets of neighbour colours. Returns
// false as soon as the colour histograms differ.
template <class LA, class LB>
bool refine_colours(const FinitePoset<LA>& a, const FinitePoset<LB>& b, std::vector<int>& ca, std::vector<int>& cb) {
  using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
  auto initial = [](const auto& p, std::size_t x) {
    return Sig{p.rank(x), {static_cast<int>(p.up_covers(x).size())}, {static_cast<int>(p.down_covers(x).size())}};
  };
  auto refined = [](const auto& p, const std::vector<int>& c, std::size_t x) {
    std::vector<int> up;
    std::vector<int> down;
    for (std::size_t k : p.up_covers(x)) up.push_back(c[p.cover(k).upper]);
    for (std::size_t k : p.down_covers(x)) down.push_back(c[p.cover(k).lower]);
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    return Sig{c[x], std::move(up), std::move(down)};
  };
  auto assign = [&](auto&& sig_a, auto&& sig_b) {
    std::map<Sig, int> ids;
    std::vector<Sig> sa(a.size());
    std::vector<Sig> sb(b.size());
    for (std::size_t x = 0; x < a.size(); ++x) ids.emplace(sa[x] = sig_a(x), 0);
    for (std::size_t x = 0; x < b.size(); ++x) ids.emplace(sb[x] = sig_b(x), 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t x = 0; x < a.size(); ++x) ca[x] = ids[sa[x]];
    for (std::size_t x = 0; x < b.size(); ++x) cb[x] = ids[sb[x]];
    return next;
  };
  ca.assign(a.size(), 0);
  cb.assign(b.size(), 0);
  int classes = assign([&](std::size_t x) { return initial(a, x); }, [&](std::size_t x) { return initial(b, x); });
  for (;;) {
    std::vector<int> ha(classes, 0);
    std::vector<int> hb(classes, 0);
    for (int c : ca) ++ha[c];
    for (int c : cb) ++hb[c];
    if (ha != hb) return false;
    const auto old_a = ca;
    const auto old_b = cb;
    const int next = assign([&](std::size_t x) { return refined(a, old_a, x); },
                            [&](std::size_t x) { return refined(b, old_b, x); });
    if (next == classes) return true;
    classes = next;
  }
}

}  // namespace detail

/// Searches for a bijection phi with x < y a cover in `a` iff phi(x) < phi(y)
/// is a cover in `b`. Labels are ignored. Returns phi as a vector indexed by
/// the elements of `a`.
template <class LA, class LB>
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset<LA>& a, const FinitePoset<LB>& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};
  std::vector<int> ca;
  std::vector<int> cb;
  if (!detail::refine_colours(a, b, ca, cb)) return std::nullopt;

  std::vector<Bitset> b_up(n, Bitset(n));
  std::vector<Bitset> b_down(n, Bitset(n));
  for (const auto& c : b.covers()) {
    b_up[c.lower].set(c.upper);
    b_down[c.upper].set(c.lower);
  }
  std::map<int, std::vector<std::size_t>> candidates;
  for (std::size_t y = 0; y < n; ++y) candidates[cb[y]].push_back(y);

  // Order a's elements so each one has as many earlier neighbours as
  // possible, preferring small colour classes.
  std::vector<std::size_t> order;
  std::vector<int> placed_neighbours(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x]) continue;
      if (best == n) {
        best = x;
        continue;
      }
      const auto key_x = std::make_pair(-placed_neighbours[x], candidates[ca[x]].size());
      const auto key_b = std::make_pair(-placed_neighbours[best], candidates[ca[best]].size());
      if (key_x < key_b) best = x;
    }
    placed[best] = true;
    order.push_back(best);
    for (std::size_t k : a.up_covers(best)) ++placed_neighbours[a.cover(k).upper];
    for (std::size_t k : a.down_covers(best)) ++placed_neighbours[a.cover(k).lower];
  }

  std::vector<std::size_t> phi(n, n);
  Bitset used(n);
  auto consistent = [&](std::size_t x, std::size_t y) {
    std::size_t mapped_up = 0;
    std::size_t mapped_down = 0;
    for (std::size_t k : a.up_covers(x)) {
      const std::size_t z = a.cover(k).upper;
      if (phi[z] == n) continue;
      if (!b_up[y].test(phi[z])) return false;
      ++mapped_up;
    }
    for (std::size_t k : a.down_covers(x)) {
      const std::size_t z = a.cover(k).lower;
      if (phi[z] == n) continue;
      if (!b_down[y].test(phi[z])) return false;
      ++mapped_down;
    }
    return (b_up[y] & used).count() == mapped_up && (b_down[y] & used).count() == mapped_down;
  };

  // Iterative backtracking; choice[d] is the next candidate slot to try at depth d.
  std::vector<std::size_t> choice(n, 0);
  std::size_t depth = 0;
  while (true) {
    const std::size_t x = order[depth];
    const auto& cand = candidates[ca[x]];
    bool advanced = false;
    while (choice[depth] < cand.size()) {
      const std::size_t y = cand[choice[depth]++];
      if (used.test(y) || !consistent(x, y)) continue;
      phi[x] = y;
      used.set(y);
      advanced = true;
      break;
    }
    if (advanced) {
      if (depth + 1 == n) return phi;
      ++depth;
      choice[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
    const std::size_t back = order[depth];
    used.reset(phi[back]);
    phi[back] = n;
  }
}

}  // namespace uncrossing
