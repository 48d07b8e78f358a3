#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uncrossing/errors.hpp"

namespace uncrossing {

namespace detail {

// Splits "1,2,10" or a bare digit string "312" into integers.
inline std::vector<int> parse_int_sequence(std::string_view text) {
  std::vector<int> out;
  const bool has_separators = text.find_first_of(", ") != std::string_view::npos;
  if (!has_separators) {
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(Errc::BadSyntax, "unexpected character in '" + std::string(text) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  int current = -1;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      current = (current < 0 ? 0 : current * 10) + (c - '0');
    } else if (c == ',' || c == ' ') {
      if (current >= 0) out.push_back(current);
      current = -1;
    } else {
      throw Error(Errc::BadSyntax, "unexpected character in '" + std::string(text) + "'");
    }
  }
  if (current >= 0) out.push_back(current);
  return out;
}

inline std::string render_int_sequence(const std::vector<int>& values, int alphabet) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (alphabet > 9 && k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

}  // namespace detail

/// A reflection (i,j) of the symmetric group, always stored with i < j.
struct Transposition {
  int i = 0;
  int j = 0;

  constexpr Transposition() = default;
  constexpr Transposition(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {}

  constexpr bool operator==(const Transposition&) const = default;
  std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

/// Lexicographic reflection order (1,2) < (1,3) < ... < (1,m) < (2,3) < ...
constexpr std::strong_ordering reflection_compare(const Transposition& s, const Transposition& t) {
  if (auto c = s.i <=> t.i; c != 0) return c;
  return s.j <=> t.j;
}

struct ReflectionOrder {
  constexpr std::strong_ordering operator()(const Transposition& s, const Transposition& t) const {
    return reflection_compare(s, t);
  }
};

/// Permutation of {1..m} in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
        throw Error(Errc::BadSyntax, "not a permutation of 1.." + std::to_string(values_.size()));
      seen[v] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> v(m);
    for (int k = 0; k < m; ++k) v[k] = k + 1;
    return Permutation(std::move(v));
  }

  static Permutation parse(std::string_view text) { return Permutation(detail::parse_int_sequence(text)); }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// Value at 1-based position.
  int operator()(int position) const { return values_[position - 1]; }
  const std::vector<int>& one_line() const noexcept { return values_; }

  /// Pairs of positions (i,j), i<j, with π(i) > π(j).
  std::vector<std::pair<int, int>> inversions() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        if (values_[a] > values_[b]) out.emplace_back(a + 1, b + 1);
    return out;
  }

  int length() const {
    int count = 0;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b) count += values_[a] > values_[b];
    return count;
  }

  Permutation swap_positions(int a, int b) const {
    Permutation out = *this;
    std::swap(out.values_[a - 1], out.values_[b - 1]);
    return out;
  }

  Permutation swap_values(int x, int y) const {
    Permutation out = *this;
    for (int& v : out.values_) {
      if (v == x) v = y;
      else if (v == y) v = x;
    }
    return out;
  }

  std::string str() const { return detail::render_int_sequence(values_, size()); }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// All of S_m in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(m);
  for (int k = 0; k < m; ++k) v[k] = k + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace uncrossing
