#ifndef FUZZYROUGH_APPROXIMATION_HPP
#define FUZZYROUGH_APPROXIMATION_HPP

#include <optional>

#include "fuzzyrough/core.hpp"
#include "fuzzyrough/relation.hpp"

namespace fuzzyrough {

/// Crisp rough set (lower, upper).
struct RoughPair {
  CrispSet lower;
  CrispSet upper;

  bool exact() const { return lower == upper; }
  bool leq(const RoughPair& o) const { return lower.is_subset_of(o.lower) && upper.is_subset_of(o.upper); }
  friend bool operator==(const RoughPair&, const RoughPair&) = default;
};

/// Lower and upper membership functions of a crisp reference set.
struct FuzzyRoughPair {
  FuzzySet lower;
  FuzzySet upper;

  bool exact() const { return lower == upper; }
  bool leq(const FuzzyRoughPair& o) const { return lower.leq(o.lower) && upper.leq(o.upper); }
  friend bool operator==(const FuzzyRoughPair&, const FuzzyRoughPair&) = default;
};

/// Lower = union of blocks inside A, upper = union of blocks meeting A.
inline RoughPair crisp_approx(const CrispSet& a, const Partition& p) {
  require_same_universe(a.universe(), p.universe());
  auto lower = CrispSet::empty(a.universe());
  auto upper = CrispSet::empty(a.universe());
  for (const auto& b : p.blocks()) {
    if (b.is_subset_of(a)) lower = lower | b;
    if (b.intersects(a)) upper = upper | b;
  }
  return {std::move(lower), std::move(upper)};
}

/// x -> 1 - max{mu(x,y) | y not in A}; all ones when A is the universe.
inline FuzzySet fuzzy_lower(const CrispSet& a, const FuzzyRelation& r) {
  require_same_universe(a.universe(), r.universe());
  const auto n = r.size();
  std::vector<Degree> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::optional<Degree> worst;
    for (std::size_t y = 0; y < n; ++y)
      if (!a.contains(y) && (!worst || *worst < r(x, y))) worst = r(x, y);
    out[x] = worst ? worst->complement() : Degree::one();
  }
  return FuzzySet(r.universe(), std::move(out));
}

/// x -> max{mu(x,y) | y in A}; all zeros when A is empty.
inline FuzzySet fuzzy_upper(const CrispSet& a, const FuzzyRelation& r) {
  require_same_universe(a.universe(), r.universe());
  const auto n = r.size();
  std::vector<Degree> out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a.contains(y)) out[x] = max(out[x], r(x, y));
  return FuzzySet(r.universe(), std::move(out));
}

inline FuzzyRoughPair fuzzy_rough_pair(const CrispSet& a, const FuzzyRelation& r) {
  return {fuzzy_lower(a, r), fuzzy_upper(a, r)};
}

/// Crisp approximations w.r.t. the core E and support S of a fuzzy
/// relation, each obtained both from the crisp partitions and from the
/// core/support of the fuzzy approximations.
struct Lemma2Bridge {
  RoughPair by_e;                     // (A_E, A^E) from the E-partition
  std::optional<RoughPair> by_s;      // (A_S, A^S); absent when S was skipped
  bool upper_e_is_core = false;       // A^E = core(upper)
  bool lower_e_is_support = false;    // A_E = support(lower)
  bool upper_s_is_support = false;    // A^S = support(upper)
  bool lower_s_is_core = false;       // A_S = core(lower)
  bool s_side_checked = false;
  bool verified = false;
};

/// The S-side checks only run for a positive t-norm (S is then an
/// equivalence); otherwise `by_s` is empty and only the E side counts.
inline Lemma2Bridge lemma2_bridge(const CrispSet& a, const FuzzyRelation& r, TNorm t = TNorm::minimum) {
  require_same_universe(a.universe(), r.universe());
  const auto fr = fuzzy_rough_pair(a, r);
  Lemma2Bridge b{crisp_approx(a, classes(relation_core(r))), std::nullopt};
  b.upper_e_is_core = b.by_e.upper == core_of(fr.upper);
  b.lower_e_is_support = b.by_e.lower == support_of(fr.lower);
  b.verified = b.upper_e_is_core && b.lower_e_is_support;
  if (is_positive(t)) {
    b.by_s = crisp_approx(a, classes(relation_support(r, t).relation));
    b.upper_s_is_support = b.by_s->upper == support_of(fr.upper);
    b.lower_s_is_core = b.by_s->lower == core_of(fr.lower);
    b.s_side_checked = true;
    b.verified = b.verified && b.upper_s_is_support && b.lower_s_is_core;
  }
  return b;
}

/// True iff upper(A) = upper(A^E) and lower(A) = lower(A_E) exactly.
inline bool prop1_check(const CrispSet& a, const FuzzyRelation& r) {
  require_same_universe(a.universe(), r.universe());
  const auto e = crisp_approx(a, classes(relation_core(r)));
  return fuzzy_upper(a, r) == fuzzy_upper(e.upper, r) && fuzzy_lower(a, r) == fuzzy_lower(e.lower, r);
}

} // namespace fuzzyrough

#endif // FUZZYROUGH_APPROXIMATION_HPP
