#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "uncrossing/bitset.hpp"
#include "uncrossing/errors.hpp"

namespace uncrossing {

struct NoLabel {
  bool operator==(const NoLabel&) const = default;
  std::string str() const { return {}; }
};

/*
 * Finite poset given by its cover relations (Hasse diagram), with an
 * optional label on every cover.
 *
 * Elements are 0..size()-1. Up- and down-sets are cached as bitsets, so
 * order queries are O(1); memory is quadratic in the element count, which is
 * fine for the few thousand elements this library targets.
 */
template <class L = NoLabel>
class FinitePoset {
 public:
  using Label = L;

  struct Cover {
    std::size_t lower = 0;
    std::size_t upper = 0;
    L label{};
  };

  FinitePoset() = default;

  FinitePoset(std::size_t size, std::vector<Cover> covers, std::vector<std::string> names = {})
      : size_(size), covers_(std::move(covers)), names_(std::move(names)) {
    if (!names_.empty() && names_.size() != size_) throw Error(Errc::BadSyntax, "one name per element required");
    build();
  }

  std::size_t size() const noexcept { return size_; }
  std::span<const Cover> covers() const noexcept { return covers_; }
  const Cover& cover(std::size_t k) const { return covers_.at(k); }

  /// Cover indices whose lower end is x.
  std::span<const std::size_t> up_covers(std::size_t x) const { return up_[x]; }
  /// Cover indices whose upper end is x.
  std::span<const std::size_t> down_covers(std::size_t x) const { return down_[x]; }

  std::string name(std::size_t x) const { return names_.empty() ? std::to_string(x) : names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool leq(std::size_t a, std::size_t b) const { return up_set_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Index of the cover a < b, if b covers a.
  std::optional<std::size_t> cover_index(std::size_t a, std::size_t b) const {
    for (std::size_t k : up_[a])
      if (covers_[k].upper == b) return k;
    return std::nullopt;
  }

  const Bitset& up_set(std::size_t a) const { return up_set_[a]; }
  const Bitset& down_set(std::size_t b) const { return down_set_[b]; }

  /// Elements ordered so that every cover goes forward.
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  /// Length of the longest chain from a minimal element to x.
  int rank(std::size_t x) const { return rank_[x]; }
  int max_rank() const { return size_ == 0 ? 0 : *std::max_element(rank_.begin(), rank_.end()); }

  /// Every cover raises the rank by exactly one, so all maximal chains of
  /// every interval have equal length.
  bool graded() const {
    for (const auto& c : covers_)
      if (rank_[c.upper] != rank_[c.lower] + 1) return false;
    return true;
  }

  std::optional<std::size_t> bottom() const {
    for (std::size_t x = 0; x < size_; ++x)
      if (up_set_[x].count() == size_) return x;
    return std::nullopt;
  }
  std::optional<std::size_t> top() const {
    for (std::size_t x = 0; x < size_; ++x)
      if (down_set_[x].count() == size_) return x;
    return std::nullopt;
  }

  FinitePoset dual() const {
    std::vector<Cover> rev;
    rev.reserve(covers_.size());
    for (const auto& c : covers_) rev.push_back({c.upper, c.lower, c.label});
    return FinitePoset(size_, std::move(rev), names_);
  }

  /// Induced subposet on [u,v] plus the map back to this poset's indices.
  struct Interval {
    FinitePoset poset;
    std::vector<std::size_t> to_parent;
  };

  Interval interval(std::size_t u, std::size_t v) const {
    if (!leq(u, v)) throw Error(Errc::NotComparable, name(u) + " is not below " + name(v));
    Interval out;
    std::vector<std::size_t> index(size_, npos);
    (up_set_[u] & down_set_[v]).for_each([&](std::size_t x) {
      index[x] = out.to_parent.size();
      out.to_parent.push_back(x);
    });
    std::vector<Cover> sub;
    std::vector<std::string> sub_names;
    for (std::size_t x : out.to_parent) {
      if (!names_.empty()) sub_names.push_back(names_[x]);
      for (std::size_t k : up_[x]) {
        const auto& c = covers_[k];
        if (index[c.upper] != npos) sub.push_back({index[c.lower], index[c.upper], c.label});
      }
    }
    out.poset = FinitePoset(out.to_parent.size(), std::move(sub), std::move(sub_names));
    return out;
  }

  /// Same poset, labels replaced by f(cover).
  template <class F>
  auto relabeled(F&& f) const {
    using M = std::decay_t<decltype(f(std::declval<const Cover&>()))>;
    std::vector<typename FinitePoset<M>::Cover> out;
    out.reserve(covers_.size());
    for (const auto& c : covers_) out.push_back({c.lower, c.upper, f(c)});
    return FinitePoset<M>(size_, std::move(out), names_);
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  void build() {
    up_.assign(size_, {});
    down_.assign(size_, {});
    for (std::size_t k = 0; k < covers_.size(); ++k) {
      const auto& c = covers_[k];
      if (c.lower >= size_ || c.upper >= size_ || c.lower == c.upper)
        throw Error(Errc::BadSyntax, "cover " + std::to_string(k) + " has an invalid endpoint");
      up_[c.lower].push_back(k);
      down_[c.upper].push_back(k);
    }
    // Kahn's algorithm; the smallest ready index goes first so the order is deterministic.
    std::vector<std::size_t> indeg(size_, 0);
    for (const auto& c : covers_) ++indeg[c.upper];
    std::vector<std::size_t> ready;
    for (std::size_t x = size_; x-- > 0;)
      if (indeg[x] == 0) ready.push_back(x);
    topo_.clear();
    while (!ready.empty()) {
      const std::size_t x = ready.back();
      ready.pop_back();
      topo_.push_back(x);
      for (std::size_t k : up_[x])
        if (--indeg[covers_[k].upper] == 0) ready.push_back(covers_[k].upper);
    }
    if (topo_.size() != size_) throw Error(Errc::BadSyntax, "cover relations contain a cycle");

    rank_.assign(size_, 0);
    for (std::size_t x : topo_)
      for (std::size_t k : up_[x]) rank_[covers_[k].upper] = std::max(rank_[covers_[k].upper], rank_[x] + 1);

    up_set_.assign(size_, Bitset(size_));
    down_set_.assign(size_, Bitset(size_));
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      up_set_[*it].set(*it);
      for (std::size_t k : up_[*it]) up_set_[*it] |= up_set_[covers_[k].upper];
    }
    for (std::size_t x : topo_) {
      down_set_[x].set(x);
      for (std::size_t k : down_[x]) down_set_[x] |= down_set_[covers_[k].lower];
    }

    // A listed cover must not be implied by a longer path.
    for (std::size_t x = 0; x < size_; ++x) {
      for (std::size_t k : up_[x]) {
        const std::size_t target = covers_[k].upper;
        for (std::size_t k2 : up_[x]) {
          if (k2 == k) continue;
          const std::size_t mid = covers_[k2].upper;
          if (mid == target) throw Error(Errc::BadSyntax, "duplicate cover " + name(x) + " < " + name(target));
          if (up_set_[mid].test(target))
            throw Error(Errc::BadSyntax, name(x) + " < " + name(target) + " is not a cover relation");
        }
      }
    }
  }

  std::size_t size_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::size_t> topo_;
  std::vector<int> rank_;
  std::vector<Bitset> up_set_;
  std::vector<Bitset> down_set_;
};

/// Chain 0 < 1 < ... < length, unlabeled.
inline FinitePoset<> chain_poset(std::size_t length) {
  std::vector<FinitePoset<>::Cover> covers;
  for (std::size_t k = 0; k < length; ++k) covers.push_back({k, k + 1, {}});
  return FinitePoset<>(length + 1, std::move(covers));
}

}  // namespace uncrossing
