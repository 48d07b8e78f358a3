#pragma once

#include <string>

#include "uncrossing/ec_shelling.hpp"
#include "uncrossing/finite_poset.hpp"
#include "uncrossing/mobius.hpp"
#include "uncrossing/report.hpp"

namespace uncrossing {

/// Which orientation the cover labels are meant for.
enum class LabelSide { Same, Dual };

/// Order on unlabeled covers: all equal.
struct NoOrder {
  constexpr std::strong_ordering operator()(const NoLabel&, const NoLabel&) const { return std::strong_ordering::equal; }
};

/*
 * CW-poset verdict through thinness and shellability: P needs a bottom and
 * at least two elements, must be graded and thin, and the labeling must pass
 * verify_ec on P (LabelSide::Same) or on P* (LabelSide::Dual). The order
 * complex of P and P* coincide, so either gives the shelling.
 */
template <class L, class Cmp>
Report cw_poset_report(const FinitePoset<L>& poset, Cmp cmp, LabelSide side = LabelSide::Same, const EcOptions& opts = {}) {
  Report r;
  Check bounded("bottom");
  bounded.expect(poset.size() >= 2 && poset.bottom().has_value(), {{"reason", "needs a bottom and at least two elements"}});
  r.add(bounded);
  Check graded("graded");
  graded.expect(poset.graded(), {{"reason", "not graded"}});
  r.add(graded);
  if (!bounded.passed() || !graded.passed()) return r;
  r.add(is_thin(poset));
  const Report ec = side == LabelSide::Dual ? verify_ec(poset.dual(), cmp, opts) : verify_ec(poset, cmp, opts);
  for (const auto& c : ec.checks)
    if (c.name != "graded") r.add(c);
  return r;
}

template <class L, class Cmp>
bool is_cw_poset(const FinitePoset<L>& poset, Cmp cmp, LabelSide side = LabelSide::Same) {
  return cw_poset_report(poset, cmp, side).passed();
}

}  // namespace uncrossing
