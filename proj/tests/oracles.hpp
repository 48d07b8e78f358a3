#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the poset containers they inspect.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "uncrossing/finite_poset.hpp"

namespace oracle {

// All words of length 2n in which each of 1..n appears twice and first
// occurrences are 1, 2, ..., n in order.
inline std::vector<std::vector<int>> normalized_words(int n) {
  std::vector<int> letters;
  for (int k = 1; k <= n; ++k) letters.insert(letters.end(), {k, k});
  std::vector<std::vector<int>> out;
  do {
    int next = 1;
    bool ok = true;
    for (int c : letters) {
      if (c == next) ++next;
      else if (c > next) ok = false;
    }
    if (ok) out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

// Wires a and b cross iff exactly one endpoint of b lies strictly between
// the endpoints of a.
inline int crossings(const std::vector<int>& w) {
  std::map<int, std::vector<int>> at;
  for (int p = 0; p < static_cast<int>(w.size()); ++p) at[w[p]].push_back(p);
  int count = 0;
  for (auto a = at.begin(); a != at.end(); ++a) {
    for (auto b = std::next(a); b != at.end(); ++b) {
      int inside = 0;
      for (int q : b->second) inside += a->second[0] < q && q < a->second[1] ? 1 : 0;
      count += inside == 1 ? 1 : 0;
    }
  }
  return count;
}

inline std::uint64_t double_factorial_odd(int n) {
  std::uint64_t r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

inline std::uint64_t bell(int n) {
  std::vector<std::vector<std::uint64_t>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> row{tri.back().back()};
    for (std::uint64_t x : tri.back()) row.push_back(row.back() + x);
    tri.push_back(row);
  }
  return tri[static_cast<std::size_t>(n)][0];
}

// Philip Hall: mu(u,v) = sum over strict chains u = x0 < ... < xk = v of
// (-1)^k, using only the order relation.
template <class L>
std::int64_t mobius_by_chains(const uncrossing::FinitePoset<L>& p, std::size_t u, std::size_t v) {
  if (u == v) return 1;
  std::map<std::size_t, std::int64_t> memo;
  std::function<std::int64_t(std::size_t)> signed_chains_from = [&](std::size_t x) -> std::int64_t {
    if (x == v) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::int64_t sum = 0;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(x, y) && p.leq(y, v)) sum -= signed_chains_from(y);
    return memo[x] = sum;
  };
  return signed_chains_from(u);
}

// f-vector of the order complex of a poset (faces = nonempty chains).
template <class L>
std::vector<std::uint64_t> chain_face_counts(const uncrossing::FinitePoset<L>& p) {
  std::vector<std::uint64_t> f;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t x, std::size_t size) {
    if (f.size() < size) f.resize(size, 0);
    ++f[size - 1];
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(x, y)) grow(y, size + 1);
  };
  for (std::size_t x = 0; x < p.size(); ++x) grow(x, 1);
  return f;
}

// All saturated chains from u to w as element sequences.
template <class L>
std::vector<std::vector<std::size_t>> saturated_chains(const uncrossing::FinitePoset<L>& p, std::size_t u, std::size_t w) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack{u};
  std::function<void(std::size_t)> walk = [&](std::size_t x) {
    if (x == w) {
      out.push_back(stack);
      return;
    }
    for (std::size_t k : p.up_covers(x)) {
      const std::size_t y = p.cover(k).upper;
      if (!p.leq(y, w)) continue;
      stack.push_back(y);
      walk(y);
      stack.pop_back();
    }
  };
  walk(u);
  return out;
}

// Bruhat order by the rank-matrix criterion: u <= v iff for all i, j the
// number of a <= i with u(a) >= j is at most the same count for v.
inline bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& v) {
  const int m = static_cast<int>(u.size());
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      int cu = 0;
      int cv = 0;
      for (int a = 0; a < i; ++a) {
        cu += u[a] >= j ? 1 : 0;
        cv += v[a] >= j ? 1 : 0;
      }
      if (cu > cv) return false;
    }
  }
  return true;
}

}  // namespace oracle
