#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "uncrossing/errors.hpp"
#include "uncrossing/finite_poset.hpp"
#include "uncrossing/label.hpp"
#include "uncrossing/wire_word.hpp"

namespace uncrossing {

/// The adjoined minimum of P_n (the top of the dual order).
struct Bottom {
  bool operator==(const Bottom&) const = default;
};

using PosetElement = std::variant<Bottom, WireWord>;

inline std::string element_name(const PosetElement& e) {
  if (const auto* w = std::get_if<WireWord>(&e)) return w->str();
  return "⊥";
}

/// An upward cover in the dual order P_n*, i.e. a one-crossing uncrossing.
struct DualCover {
  PosetElement upper;
  Label label;
};

/// Dual covers of w found directly: both uncrossings of every crossing
/// pair, kept when the crossing number drops by exactly one. A crossingless
/// word is covered only by the dual top, with label L.
inline std::vector<DualCover> dual_covers(const WireWord& w) {
  const auto crossings = w.crossing_pairs();
  if (crossings.empty()) return {DualCover{Bottom{}, Label::top()}};
  const int target = static_cast<int>(crossings.size()) - 1;
  std::vector<DualCover> out;
  for (const auto& [i, j] : crossings) {
    for (auto mode : {UncrossMode::SwapV, UncrossMode::MoveToStart}) {
      auto [next, label] = w.uncross(i, j, mode);
      if (next.crossing_count() == target) out.push_back({std::move(next), label});
    }
  }
  return out;
}

enum class CoverCriterion {
  // exactly one of the ordered pairs (k,l), (l,m) lies in N1 u N2
  ExactlyOne,
  // l does not cross both k and m
  NotBothCrossing,
};

/// Dual covers of w selected by a noncrossing-pair criterion: a label (k,m)
/// is admissible iff k and m cross and every third wire l in the relevant
/// range satisfies the criterion. The range is k<l<m for k<m, and l<m or l>k
/// for k>m.
///
/// ExactlyOne rejects some genuine covers when k>m: in 121332 the wire 3 is
/// nested in 2 and beside 1, so both (2,3) and (3,1) are noncrossing pairs,
/// yet 121332 -> 112332 removes exactly one crossing. NotBothCrossing is
/// what the four-arc case analysis of an uncrossing actually gives.
inline std::vector<DualCover> dual_covers_by_criterion(const WireWord& w,
                                                       CoverCriterion criterion = CoverCriterion::ExactlyOne) {
  const int n = w.n();
  const NoncrossingSet nc = w.noncrossing_set();
  if (static_cast<int>(nc.n1.size() + nc.n2.size()) == n * (n - 1) / 2) return {DualCover{Bottom{}, Label::top()}};
  auto noncrossing = [&](int a, int b) { return nc.contains(a, b) || nc.contains(b, a); };
  auto exactly_one = [&](int k, int l, int m) {
    if (criterion == CoverCriterion::NotBothCrossing) return noncrossing(k, l) || noncrossing(l, m);
    return nc.contains(k, l) != nc.contains(l, m);
  };
  std::vector<DualCover> out;
  for (int k = 1; k <= n; ++k) {
    for (int m = 1; m <= n; ++m) {
      if (k == m || nc.contains(k, m) || nc.contains(m, k)) continue;
      bool ok = true;
      for (int l = 1; l <= n && ok; ++l) {
        if (l == k || l == m) continue;
        const bool in_range = k < m ? (k < l && l < m) : (l < m || l > k);
        if (in_range) ok = exactly_one(k, l, m);
      }
      if (!ok) continue;
      auto mode = k < m ? UncrossMode::SwapV : UncrossMode::MoveToStart;
      auto [next, label] = w.uncross(k, m, mode);
      out.push_back({std::move(next), label});
    }
  }
  return out;
}

/// (2n-1)!! + 1, saturating.
inline std::uint64_t uncrossing_poset_size(int n) {
  std::uint64_t count = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) {
    if (count > UINT64_MAX / static_cast<std::uint64_t>(k)) return UINT64_MAX;
    count *= static_cast<std::uint64_t>(k);
  }
  return count + 1;
}

/// The uncrossing poset P_n. Element 0 is the adjoined bottom; the others
/// are the normalized words in lexicographic order. Covers are stored in the
/// orientation of P_n (lower = fewer crossings) and carry the dual label,
/// which is read at the upper (more crossed) word.
class UncrossingPoset {
 public:
  static constexpr std::size_t kDefaultLimit = 10'000'000;

  struct Cover {
    std::size_t lower;
    std::size_t upper;
    Label label;
  };

  static UncrossingPoset generate(int n, std::size_t limit = kDefaultLimit) {
    if (n < 2) throw Error(Errc::BadSyntax, "uncrossing posets need n >= 2");
    const std::uint64_t expected = uncrossing_poset_size(n);
    if (expected > limit)
      throw Error(Errc::TooLarge, "P_" + std::to_string(n) + " has " + std::to_string(expected) + " elements, limit " +
                                      std::to_string(limit));
    UncrossingPoset p;
    p.n_ = n;
    p.elements_.emplace_back(Bottom{});
    for (auto& w : enumerate_words(n)) p.elements_.emplace_back(std::move(w));
    p.rank_.assign(p.elements_.size(), 0);
    for (std::size_t x = 1; x < p.elements_.size(); ++x) {
      const auto& w = std::get<WireWord>(p.elements_[x]);
      p.index_.emplace(w.key(), x);
      p.rank_[x] = w.crossing_count() + 1;
    }
    for (std::size_t x = 1; x < p.elements_.size(); ++x) {
      for (auto& dc : dual_covers(std::get<WireWord>(p.elements_[x]))) {
        const std::size_t lower = std::holds_alternative<Bottom>(dc.upper) ? 0 : p.index_.at(std::get<WireWord>(dc.upper).key());
        p.covers_.push_back({lower, x, dc.label});
      }
    }
    return p;
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const PosetElement& element(std::size_t x) const { return elements_.at(x); }
  const WireWord& word(std::size_t x) const { return std::get<WireWord>(elements_.at(x)); }
  bool is_bottom(std::size_t x) const { return x == 0; }
  std::string name(std::size_t x) const { return element_name(elements_.at(x)); }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const { return index_.at(WireWord::fully_crossed(n_).key()); }

  std::optional<std::size_t> index_of(const WireWord& w) const {
    auto it = index_.find(w.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int rank(std::size_t x) const { return rank_.at(x); }
  const std::vector<Cover>& covers() const noexcept { return covers_; }

  std::vector<std::size_t> atoms() const {
    std::vector<std::size_t> out;
    for (const auto& c : covers_)
      if (c.lower == 0) out.push_back(c.upper);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Number of elements of each rank 0..C(n,2)+1.
  std::vector<std::size_t> rank_profile() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(n_ * (n_ - 1) / 2 + 2), 0);
    for (int r : rank_) ++out[static_cast<std::size_t>(r)];
    return out;
  }

  /// Generic view in P_n orientation, or P_n* when dual is set.
  FinitePoset<Label> as_finite_poset(bool dual) const {
    std::vector<FinitePoset<Label>::Cover> covers;
    covers.reserve(covers_.size());
    for (const auto& c : covers_) {
      if (dual) covers.push_back({c.upper, c.lower, c.label});
      else covers.push_back({c.lower, c.upper, c.label});
    }
    std::vector<std::string> names;
    names.reserve(elements_.size());
    for (std::size_t x = 0; x < elements_.size(); ++x) names.push_back(name(x));
    return FinitePoset<Label>(elements_.size(), std::move(covers), std::move(names));
  }

  /// {"n":..., "elements":[word|null], "covers":[[lo,hi,"label"]]}; in the
  /// dual orientation lo/hi refer to P_n*.
  nlohmann::json to_json(bool dual = false) const {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& e : elements_) {
      if (const auto* w = std::get_if<WireWord>(&e)) elements.push_back(w->str());
      else elements.push_back(nullptr);
    }
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& c : covers_) {
      if (dual) covers.push_back({c.upper, c.lower, c.label.str()});
      else covers.push_back({c.lower, c.upper, c.label.str()});
    }
    return {{"n", n_}, {"dual", dual}, {"elements", std::move(elements)}, {"covers", std::move(covers)}};
  }

 private:
  int n_ = 0;
  std::vector<PosetElement> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<int> rank_;
  std::vector<Cover> covers_;
};

inline UncrossingPoset generate(int n, std::size_t limit = UncrossingPoset::kDefaultLimit) {
  return UncrossingPoset::generate(n, limit);
}

}  // namespace uncrossing
