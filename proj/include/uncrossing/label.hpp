#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "uncrossing/errors.hpp"

namespace uncrossing {

/// Cover label of the dual uncrossing order: an ordered pair of wire names,
/// or the sentinel L carried by the covers into the top element.
///
/// An ascending pair (a,b), a<b, records an uncrossing that swaps the second
/// endpoints of wires a and b. A descending pair (b,a), b>a, records the other
/// uncrossing of the same two wires.
class Label {
 public:
  constexpr Label() = default;

  static constexpr Label pair(int a, int b) {
    if (a == b || a < 1 || b < 1) throw Error(Errc::BadSyntax, "label pair needs two distinct wires");
    return Label(a, b);
  }
  static constexpr Label top() { return Label(0, 0); }

  constexpr bool is_top() const noexcept { return first_ == 0; }
  constexpr bool is_ascending() const noexcept { return first_ != 0 && first_ < second_; }
  constexpr bool is_descending() const noexcept { return first_ != 0 && first_ > second_; }
  constexpr int first() const noexcept { return first_; }
  constexpr int second() const noexcept { return second_; }

  constexpr bool operator==(const Label&) const = default;

  std::string str() const {
    if (is_top()) return "L";
    return "(" + std::to_string(first_) + "," + std::to_string(second_) + ")";
  }

 private:
  constexpr Label(int a, int b) : first_(a), second_(b) {}

  int first_ = 0;
  int second_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Label& label) { return os << label.str(); }

/// The label order: ascending pairs lexicographically, then L, then the
/// descending pairs by decreasing second coordinate, ties broken by
/// decreasing first coordinate, so (n,n-1) is the least of them and (2,1)
/// the greatest.
constexpr std::strong_ordering compare_labels(const Label& x, const Label& y) {
  auto klass = [](const Label& l) { return l.is_ascending() ? 0 : (l.is_top() ? 1 : 2); };
  const int kx = klass(x);
  const int ky = klass(y);
  if (kx != ky) return kx <=> ky;
  if (kx == 0) return std::make_pair(x.first(), x.second()) <=> std::make_pair(y.first(), y.second());
  if (kx == 2) return std::make_pair(-x.second(), -x.first()) <=> std::make_pair(-y.second(), -y.first());
  return std::strong_ordering::equal;
}

struct LabelOrder {
  constexpr std::strong_ordering operator()(const Label& x, const Label& y) const { return compare_labels(x, y); }
};

}  // namespace uncrossing
