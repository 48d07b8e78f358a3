#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "uncrossing/errors.hpp"
#include "uncrossing/finite_poset.hpp"
#include "uncrossing/parallel.hpp"
#include "uncrossing/report.hpp"

namespace uncrossing {

/// Memoized Möbius function. Rows mu(u, .) are computed on first use; reads
/// may run concurrently, insertions are serialized.
template <class L>
class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset<L>& poset) : poset_(&poset), rows_(poset.size()) {}

  std::int64_t operator()(std::size_t u, std::size_t v) const {
    if (!poset_->leq(u, v)) throw Error(Errc::NotComparable, poset_->name(u) + " is not below " + poset_->name(v));
    return row(u)[v];
  }

  /// mu(u, x) for every x; zero where u is not below x.
  const std::vector<std::int64_t>& row(std::size_t u) const {
    {
      std::lock_guard lock(mutex_);
      if (rows_[u]) return *rows_[u];
    }
    auto fresh = std::make_unique<std::vector<std::int64_t>>(compute_row(u));
    std::lock_guard lock(mutex_);
    if (!rows_[u]) rows_[u] = std::move(fresh);
    return *rows_[u];
  }

 private:
  std::vector<std::int64_t> compute_row(std::size_t u) const {
    const auto& p = *poset_;
    std::vector<std::int64_t> mu(p.size(), 0);
    const Bitset& above = p.up_set(u);
    for (std::size_t v : p.topological_order()) {
      if (!above.test(v)) continue;
      if (v == u) {
        mu[v] = 1;
        continue;
      }
      std::int64_t sum = 0;
      (above & p.down_set(v)).for_each([&](std::size_t z) {
        if (z != v) sum += mu[z];
      });
      mu[v] = -sum;
    }
    return mu;
  }

  const FinitePoset<L>* poset_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::vector<std::int64_t>>> rows_;
};

template <class L>
std::int64_t mobius(const FinitePoset<L>& poset, std::size_t u, std::size_t v) {
  return MobiusTable<L>(poset)(u, v);
}

inline int sign_of_rank(int r) { return r % 2 == 0 ? 1 : -1; }

/// mu(u,v) = (-1)^(rank v - rank u) for every u <= v.
template <class L>
Check is_eulerian(const FinitePoset<L>& poset, unsigned workers = 1) {
  if (!poset.graded()) throw Error(Errc::NotGraded, "Eulerian check needs a graded poset");
  MobiusTable<L> table(poset);
  std::vector<Check> partial(poset.size(), Check("eulerian"));
  parallel_for(poset.size(), workers, [&](std::size_t u) {
    const auto& mu = table.row(u);
    poset.up_set(u).for_each([&](std::size_t v) {
      const int r = poset.rank(v) - poset.rank(u);
      partial[u].expect(mu[v] == sign_of_rank(r),
                        {{"lower", poset.name(u)}, {"upper", poset.name(v)}, {"mobius", mu[v]}, {"rank", r}});
    });
  });
  Check out("eulerian");
  for (const auto& c : partial) out.merge(c);
  return out;
}

/// Every closed interval of rank 2 has exactly four elements.
template <class L>
Check is_thin(const FinitePoset<L>& poset) {
  if (!poset.graded()) throw Error(Errc::NotGraded, "thinness needs a graded poset");
  Check out("thin");
  for (std::size_t u = 0; u < poset.size(); ++u) {
    poset.up_set(u).for_each([&](std::size_t v) {
      if (poset.rank(v) - poset.rank(u) != 2) return;
      const std::size_t size = (poset.up_set(u) & poset.down_set(v)).count();
      out.expect(size == 4, {{"lower", poset.name(u)}, {"upper", poset.name(v)}, {"size", size}});
    });
  }
  return out;
}

}  // namespace uncrossing
