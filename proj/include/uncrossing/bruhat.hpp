#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "uncrossing/ec_shelling.hpp"
#include "uncrossing/errors.hpp"
#include "uncrossing/finite_poset.hpp"
#include "uncrossing/permutation.hpp"
#include "uncrossing/report.hpp"
#include "uncrossing/uncrossing_poset.hpp"

namespace uncrossing {

/// pi < upper in Bruhat order. `positions` are the swapped places in one-line
/// notation; `values` is the reflection upper * pi^{-1}, i.e. the swapped
/// entries, which is the label of the reflection-order EL-labeling.
struct BruhatCover {
  Permutation upper;
  Transposition positions;
  Transposition values;
};

/// Upward covers of pi: positions i<k with pi(i) < pi(k) and no position
/// strictly between holding a value strictly between pi(i) and pi(k).
inline std::vector<BruhatCover> bruhat_covers_up(const Permutation& pi) {
  std::vector<BruhatCover> out;
  const int m = pi.size();
  for (int i = 1; i <= m; ++i) {
    for (int k = i + 1; k <= m; ++k) {
      if (pi(i) > pi(k)) continue;
      bool blocked = false;
      for (int j = i + 1; j < k && !blocked; ++j) blocked = pi(i) < pi(j) && pi(j) < pi(k);
      if (blocked) continue;
      out.push_back({pi.swap_positions(i, k), Transposition(i, k), Transposition(pi(i), pi(k))});
    }
  }
  return out;
}

/// Definition-based covers: every transposition of positions that raises
/// the inversion count by exactly one.
inline std::vector<BruhatCover> bruhat_covers_up_oracle(const Permutation& pi) {
  std::vector<BruhatCover> out;
  const int m = pi.size();
  const int len = pi.length();
  for (int i = 1; i <= m; ++i) {
    for (int k = i + 1; k <= m; ++k) {
      Permutation up = pi.swap_positions(i, k);
      if (up.length() == len + 1) out.push_back({std::move(up), Transposition(i, k), Transposition(pi(i), pi(k))});
    }
  }
  return out;
}

/// Bruhat order on S_m, labeled by the value transpositions.
class BruhatOrder {
 public:
  static BruhatOrder generate(int m) {
    if (m < 1 || m > 8) throw Error(Errc::TooLarge, "Bruhat order supported for 1 <= m <= 8");
    BruhatOrder b;
    b.m_ = m;
    b.perms_ = all_permutations(m);
    for (std::size_t x = 0; x < b.perms_.size(); ++x) b.index_.emplace(b.perms_[x], x);
    std::vector<FinitePoset<Transposition>::Cover> covers;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < b.perms_.size(); ++x) {
      names.push_back(b.perms_[x].str());
      for (const auto& c : bruhat_covers_up(b.perms_[x])) covers.push_back({x, b.index_.at(c.upper), c.values});
    }
    b.poset_ = FinitePoset<Transposition>(b.perms_.size(), std::move(covers), std::move(names));
    return b;
  }

  int m() const noexcept { return m_; }
  const FinitePoset<Transposition>& poset() const noexcept { return poset_; }
  const Permutation& permutation(std::size_t x) const { return perms_.at(x); }
  std::size_t index_of(const Permutation& p) const { return index_.at(p); }

 private:
  int m_ = 0;
  std::vector<Permutation> perms_;
  std::map<Permutation, std::size_t> index_;
  FinitePoset<Transposition> poset_;
};

/// The characterization of covers agrees with the inversion-count oracle on
/// all of S_m.
inline Check bruhat_cover_oracle_check(int m) {
  Check out("bruhat-cover-oracle");
  auto key = [](const std::vector<BruhatCover>& covers) {
    std::vector<std::string> k;
    for (const auto& c : covers) k.push_back(c.upper.str() + c.positions.str());
    std::sort(k.begin(), k.end());
    return k;
  };
  for (const auto& pi : all_permutations(m)) {
    const auto a = key(bruhat_covers_up(pi));
    const auto b = key(bruhat_covers_up_oracle(pi));
    out.expect(a == b, {{"permutation", pi.str()}, {"characterization", a}, {"oracle", b}});
  }
  return out;
}

/// EL check of the reflection-order labeling on every interval of S_m.
template <class Cmp = ReflectionOrder>
Report verify_dyer_el(int m, Cmp cmp = {}) {
  const BruhatOrder b = BruhatOrder::generate(m);
  Report r;
  r.poset = "S_" + std::to_string(m);
  r.add(verify_el(b.poset(), cmp));
  return r;
}

/*
 * For D1 <= D2 in P_n* with equal start sets, checks that D -> pi(D) maps
 * [D1,D2] isomorphically onto the Bruhat interval [pi(D1), pi(D2)] and that
 * every dual label (a,b) equals the value transposition of the image cover.
 */
inline Report verify_bruhat_map(const UncrossingPoset& up, const FinitePoset<Label>& dual, const BruhatOrder& bruhat,
                                 const WireWord& d1, const WireWord& d2) {
  if (d1.start_set() != d2.start_set())
    throw Error(Errc::StartSetMismatch, d1.str() + " has start set " + d1.start_set().str() + ", " + d2.str() + " has " +
                                            d2.start_set().str());
  const auto i1 = up.index_of(d1);
  const auto i2 = up.index_of(d2);
  if (!i1 || !i2) throw Error(Errc::BadSyntax, "word not in P_" + std::to_string(up.n()));
  if (!dual.leq(*i1, *i2)) throw Error(Errc::NotComparable, d1.str() + " is not below " + d2.str() + " in the dual order");

  const auto interval = dual.interval(*i1, *i2);
  const auto& sub = interval.poset;
  const std::size_t b1 = bruhat.index_of(d1.pi());
  const std::size_t b2 = bruhat.index_of(d2.pi());
  const auto& bp = bruhat.poset();

  Report r;
  r.poset = "[" + d1.str() + "," + d2.str() + "]";
  Check iso("bruhat-isomorphism");
  Check labels("label-coherence");

  std::vector<std::size_t> image(sub.size());
  std::vector<bool> hit(bp.size(), false);
  bool injective = true;
  for (std::size_t x = 0; x < sub.size(); ++x) {
    image[x] = bruhat.index_of(up.word(interval.to_parent[x]).pi());
    injective = injective && !hit[image[x]] && bp.leq(b1, image[x]) && bp.leq(image[x], b2);
    hit[image[x]] = true;
  }
  const std::size_t target_size = (bp.up_set(b1) & bp.down_set(b2)).count();
  iso.expect(injective && target_size == sub.size(),
             {{"reason", "pi is not a bijection onto the Bruhat interval"}, {"interval_size", sub.size()},
              {"bruhat_size", target_size}});

  std::size_t bruhat_covers = 0;
  for (std::size_t x = 0; x < bp.size(); ++x) {
    if (!hit[x]) continue;
    for (std::size_t k : bp.up_covers(x)) bruhat_covers += hit[bp.cover(k).upper] ? 1 : 0;
  }
  iso.expect(bruhat_covers == sub.covers().size(),
             {{"reason", "cover counts differ"}, {"interval", sub.covers().size()}, {"bruhat", bruhat_covers}});

  for (const auto& c : sub.covers()) {
    const auto bc = bp.cover_index(image[c.lower], image[c.upper]);
    iso.expect(bc.has_value(), {{"reason", "cover not preserved"}, {"lower", sub.name(c.lower)}, {"upper", sub.name(c.upper)}});
    if (!bc) continue;
    const Transposition t = bp.cover(*bc).label;
    labels.expect(c.label.is_ascending() && c.label.first() == t.i && c.label.second() == t.j,
                  {{"lower", sub.name(c.lower)}, {"upper", sub.name(c.upper)}, {"label", c.label.str()}, {"reflection", t.str()}});
  }
  r.add(std::move(iso));
  r.add(std::move(labels));
  return r;
}

/// Runs verify_bruhat_map on every start-set-preserving interval of P_n*.
inline Report verify_all_bruhat_maps(const UncrossingPoset& up) {
  const auto dual = up.as_finite_poset(true);
  const auto bruhat = BruhatOrder::generate(up.n());
  Report r;
  r.poset = "P_" + std::to_string(up.n()) + "*";
  Check iso("bruhat-isomorphism");
  Check labels("label-coherence");
  for (std::size_t a = 1; a < up.size(); ++a) {
    const StartSet s = up.word(a).start_set();
    dual.up_set(a).for_each([&](std::size_t b) {
      if (b == 0 || up.word(b).start_set() != s) return;
      const Report one = verify_bruhat_map(up, dual, bruhat, up.word(a), up.word(b));
      iso.merge(*one.find("bruhat-isomorphism"));
      labels.merge(*one.find("label-coherence"));
    });
  }
  r.add(std::move(iso));
  r.add(std::move(labels));
  return r;
}

}  // namespace uncrossing
