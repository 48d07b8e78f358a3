#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "uncrossing/errors.hpp"
#include "uncrossing/label.hpp"
#include "uncrossing/permutation.hpp"

namespace uncrossing {

using WirePair = std::pair<int, int>;

/// Positions (1-based) of the first endpoints of the wires, increasing.
struct StartSet {
  std::vector<int> positions;

  auto operator<=>(const StartSet&) const = default;
  std::string str() const {
    std::string out = "{";
    for (std::size_t k = 0; k < positions.size(); ++k) out += (k ? "," : "") + std::to_string(positions[k]);
    return out + "}";
  }
};

/// Noncrossing pairs of a diagram. n1 holds (i,j), i<j, for the nested
/// pattern i,j,j,i; n2 holds (j,i), j>i, for the side-by-side pattern
/// i,i,j,j. Both lists are sorted.
struct NoncrossingSet {
  std::vector<WirePair> n1;
  std::vector<WirePair> n2;

  bool contains(int a, int b) const {
    const WirePair p{a, b};
    return std::binary_search(n1.begin(), n1.end(), p) || std::binary_search(n2.begin(), n2.end(), p);
  }
  bool operator==(const NoncrossingSet&) const = default;
};

enum class UncrossMode {
  SwapV,        ///< exchange the second endpoints: i,j,i,j -> i,j,j,i
  MoveToStart,  ///< exchange i's second endpoint with j's first: i,j,i,j -> i,i,j,j
};

/// Normalized word of a wire diagram: 2n letters over {1..n}, each name
/// twice, first occurrences in increasing name order. The first occurrence
/// of a name is its start endpoint and the second its end endpoint.
class WireWord {
 public:
  WireWord() = default;

  /// Validates and wraps a letter sequence.
  explicit WireWord(std::vector<int> letters) : letters_(std::move(letters)) {
    if (letters_.size() % 2 != 0) throw Error(Errc::BadSyntax, "word length must be even");
    const int n = static_cast<int>(letters_.size() / 2);
    std::vector<int> count(n + 1, 0);
    for (int c : letters_) {
      if (c < 1 || c > n) throw Error(Errc::NotTwice, "wire name " + std::to_string(c) + " outside 1.." + std::to_string(n));
      ++count[c];
    }
    for (int c = 1; c <= n; ++c)
      if (count[c] != 2) throw Error(Errc::NotTwice, "wire " + std::to_string(c) + " occurs " + std::to_string(count[c]) + " times");
    int next = 1;
    std::vector<bool> seen(n + 1, false);
    for (int c : letters_) {
      if (seen[c]) continue;
      if (c != next) throw Error(Errc::NotNormalized, "wire " + std::to_string(c) + " starts before wire " + std::to_string(next));
      seen[c] = true;
      ++next;
    }
  }

  static WireWord parse(std::string_view text) { return WireWord(detail::parse_int_sequence(text)); }

  /// Relabels an arbitrary pairing word so first occurrences ascend.
  static WireWord normalize(const std::vector<int>& letters) {
    std::vector<int> rename(letters.size() + 1, 0);
    std::vector<int> out(letters.size());
    int next = 0;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      int& r = rename.at(letters[k]);
      if (r == 0) r = ++next;
      out[k] = r;
    }
    return WireWord(std::move(out));
  }

  /// The fully crossed diagram 12..n12..n.
  static WireWord fully_crossed(int n) {
    std::vector<int> v(2 * n);
    for (int k = 0; k < 2 * n; ++k) v[k] = k % n + 1;
    return WireWord(std::move(v));
  }

  int n() const noexcept { return static_cast<int>(letters_.size() / 2); }
  const std::vector<int>& letters() const noexcept { return letters_; }
  /// Letter at 1-based position.
  int at(int position) const { return letters_.at(position - 1); }

  std::string str() const { return detail::render_int_sequence(letters_, n()); }

  /// 1-based positions of wire `name`'s start and end endpoints.
  std::pair<int, int> endpoints(int name) const {
    int first = 0;
    for (int k = 0; k < static_cast<int>(letters_.size()); ++k) {
      if (letters_[k] != name) continue;
      if (first == 0) first = k + 1;
      else return {first, k + 1};
    }
    throw Error(Errc::BadSyntax, "no wire named " + std::to_string(name));
  }

  bool crosses(int a, int b) const {
    auto [a1, a2] = endpoints(a);
    auto [b1, b2] = endpoints(b);
    if (a1 > b1) {
      std::swap(a1, b1);
      std::swap(a2, b2);
    }
    return a1 < b1 && b1 < a2 && a2 < b2;
  }

  /// Unordered crossing pairs {i,j}, stored as (i,j) with i<j, sorted.
  std::vector<WirePair> crossing_pairs() const {
    const auto ends = all_endpoints();
    std::vector<WirePair> out;
    for (int i = 1; i <= n(); ++i)
      for (int j = i + 1; j <= n(); ++j)
        if (ends[j].first < ends[i].second && ends[i].second < ends[j].second) out.emplace_back(i, j);
    return out;
  }

  int crossing_count() const { return static_cast<int>(crossing_pairs().size()); }

  NoncrossingSet noncrossing_set() const {
    const auto ends = all_endpoints();
    NoncrossingSet out;
    for (int i = 1; i <= n(); ++i) {
      for (int j = i + 1; j <= n(); ++j) {
        // i starts before j by normalization.
        if (ends[j].second < ends[i].second) out.n1.emplace_back(i, j);
        else if (ends[i].second < ends[j].first) out.n2.emplace_back(j, i);
      }
    }
    std::sort(out.n2.begin(), out.n2.end());
    return out;
  }

  StartSet start_set() const {
    StartSet s;
    std::vector<bool> seen(n() + 1, false);
    for (int k = 0; k < static_cast<int>(letters_.size()); ++k) {
      if (!seen[letters_[k]]) {
        seen[letters_[k]] = true;
        s.positions.push_back(k + 1);
      }
    }
    return s;
  }

  /// Wire names at the end endpoints, read left to right.
  Permutation pi() const {
    std::vector<int> out;
    std::vector<bool> seen(n() + 1, false);
    for (int c : letters_) {
      if (seen[c]) out.push_back(c);
      seen[c] = true;
    }
    return Permutation(std::move(out));
  }

  /// Uncrosses wires a and b (any order). Returns the normalized result and
  /// the cover label, with wire names read in this word.
  std::pair<WireWord, Label> uncross(int a, int b, UncrossMode mode) const {
    const int i = std::min(a, b);
    const int j = std::max(a, b);
    if (i < 1 || j > n() || i == j || !crosses(i, j))
      throw Error(Errc::NotCrossing, "wires " + std::to_string(a) + "," + std::to_string(b) + " do not cross in " + str());
    const int i_end = endpoints(i).second;
    const auto [j_start, j_end] = endpoints(j);
    std::vector<int> v = letters_;
    if (mode == UncrossMode::SwapV) {
      std::swap(v[i_end - 1], v[j_end - 1]);
      return {WireWord(std::move(v)), Label::pair(i, j)};
    }
    std::swap(v[i_end - 1], v[j_start - 1]);
    return {normalize(v), Label::pair(j, i)};
  }

  std::string key() const { return std::string(letters_.begin(), letters_.end()); }

  auto operator<=>(const WireWord&) const = default;

  nlohmann::json to_json() const { return {{"n", n()}, {"word", letters_}}; }
  static WireWord from_json(const nlohmann::json& j) {
    WireWord w(j.at("word").get<std::vector<int>>());
    if (j.contains("n") && j.at("n").get<int>() != w.n()) throw Error(Errc::BadSyntax, "n does not match word length");
    return w;
  }

 private:
  // ends[name] = (start, end), 1-based; index 0 unused.
  std::vector<std::pair<int, int>> all_endpoints() const {
    std::vector<std::pair<int, int>> ends(n() + 1, {0, 0});
    for (int k = 0; k < static_cast<int>(letters_.size()); ++k) {
      auto& e = ends[letters_[k]];
      (e.first == 0 ? e.first : e.second) = k + 1;
    }
    return ends;
  }

  std::vector<int> letters_;
};

inline WireWord parse_word(std::string_view text) { return WireWord::parse(text); }

/// Every normalized word on n wires, in lexicographic order. There are
/// (2n-1)!! of them.
inline std::vector<WireWord> enumerate_words(int n) {
  std::vector<WireWord> out;
  std::vector<int> letters(2 * n, 0);
  std::vector<int> open;  // names started and not yet closed
  std::function<void(int, int)> rec = [&](int pos, int next_name) {
    if (pos == 2 * n) {
      out.emplace_back(letters);
      return;
    }
    // Closing letters are smaller than the next new name, so try them first.
    for (std::size_t k = 0; k < open.size(); ++k) {
      const int name = open[k];
      letters[pos] = name;
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
      rec(pos + 1, next_name);
      open.insert(open.begin() + static_cast<std::ptrdiff_t>(k), name);
    }
    if (next_name <= n) {
      letters[pos] = next_name;
      open.push_back(next_name);
      rec(pos + 1, next_name + 1);
      open.pop_back();
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace uncrossing
