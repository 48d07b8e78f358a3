#pragma once

#include <ostream>
#include <string>

#include "uncrossing/finite_poset.hpp"

namespace uncrossing {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Hasse diagram in Graphviz format: one node per element, one edge per
/// cover pointing upward, annotated with the cover label when it has one.
template <class L>
void write_dot(std::ostream& out, const FinitePoset<L>& poset, const std::string& graph_name = "poset") {
  out << "digraph \"" << detail::dot_escape(graph_name) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t x = 0; x < poset.size(); ++x)
    out << "  n" << x << " [label=\"" << detail::dot_escape(poset.name(x)) << "\"];\n";
  for (const auto& c : poset.covers()) {
    out << "  n" << c.lower << " -> n" << c.upper;
    const std::string label = c.label.str();
    if (!label.empty()) out << " [label=\"" << detail::dot_escape(label) << "\"]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace uncrossing
