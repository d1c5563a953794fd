#ifndef FUZZYROUGH_EXACTNESS_HPP
#define FUZZYROUGH_EXACTNESS_HPP

#include <cstdint>
#include <vector>

#include "fuzzyrough/approximation.hpp"
#include "fuzzyrough/core.hpp"
#include "fuzzyrough/relation.hpp"

namespace fuzzyrough {

struct ExactnessRecord {
  CrispSet set;
  bool fuzzy_exact = false; // lower_R(A) = upper_R(A) pointwise
  bool s_exact = false;     // A_S = A^S
  bool agree = false;
  /// For a fuzzy-exact set: the common membership function is the
  /// indicator of A. Vacuously true otherwise.
  bool indicator_valued = true;
};

/// One record per reference set, in bitmask order. Needs a T-equivalence
/// for a positive t-norm so that the support S is an equivalence.
inline std::vector<ExactnessRecord> exactness_scan(const FuzzyRelation& r, TNorm t = TNorm::minimum,
                                                   std::size_t max_universe = 16) {
  if (!is_positive(t))
    throw PreconditionViolated("exactness scan needs a positive t-norm, got " + std::string(name_of(t)));
  if (!validate(r, t).is_t_equivalence())
    throw InvalidRelation("relation is not a " + std::string(name_of(t)) + "-equivalence");
  const auto n = r.size();
  if (n > max_universe || n > 63) throw UniverseTooLarge("exactness scan walks all 2^n reference sets");
  const auto s_classes = classes(relation_support(r, t).relation);

  std::vector<ExactnessRecord> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto a = CrispSet::from_mask(r.universe(), mask);
    const auto fp = fuzzy_rough_pair(a, r);
    ExactnessRecord rec{a};
    rec.fuzzy_exact = fp.exact();
    rec.s_exact = crisp_approx(a, s_classes).exact();
    rec.agree = rec.fuzzy_exact == rec.s_exact;
    if (rec.fuzzy_exact) rec.indicator_valued = fp.lower == FuzzySet::indicator(a);
    out.push_back(std::move(rec));
  }
  return out;
}

struct ThreeValuedApprox {
  /// From the case formulas over the crisp approximations by the certain
  /// relation E and the possible relation S.
  FuzzyRoughPair by_cases;
  /// From the general operators on the induced {0, 1/2, 1} relation.
  FuzzyRoughPair by_operators;
  FuzzyRelation induced;
  bool agree = false;
  /// Whether the induced relation passes min-transitivity (reported, not assumed).
  bool induced_is_min_equivalence = false;
};

/// mu = 1 on `certain`, 1/2 on `possible` minus `certain`, 0 elsewhere.
inline FuzzyRelation three_valued_relation(const CrispRelation& certain, const CrispRelation& possible) {
  require_same_universe(certain.universe(), possible.universe());
  const auto n = certain.size();
  const auto half = Degree::ratio(1, 2);
  std::vector<Degree> mu(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mu[x * n + y] = certain(x, y) ? Degree::one() : possible(x, y) ? half : Degree::zero();
  return FuzzyRelation(certain.universe(), std::move(mu));
}

inline ThreeValuedApprox three_valued_approx(const CrispRelation& certain, const CrispRelation& possible,
                                             const CrispSet& a) {
  require_same_universe(certain.universe(), possible.universe());
  require_same_universe(certain.universe(), a.universe());
  if (!certain.is_equivalence()) throw PreconditionViolated("the certain relation is not an equivalence");
  if (!possible.is_equivalence()) throw PreconditionViolated("the possible relation is not an equivalence");
  if (!certain.is_subset_of(possible)) throw PreconditionViolated("the certain relation is not contained in the possible one");

  const auto e = crisp_approx(a, classes(certain));
  const auto s = crisp_approx(a, classes(possible));
  const auto n = a.width();
  const auto half = Degree::ratio(1, 2);
  std::vector<Degree> lower(n), upper(n);
  for (std::size_t x = 0; x < n; ++x) {
    lower[x] = s.lower.contains(x) ? Degree::one() : e.lower.contains(x) ? half : Degree::zero();
    upper[x] = e.upper.contains(x) ? Degree::one() : s.upper.contains(x) ? half : Degree::zero();
  }

  auto induced = three_valued_relation(certain, possible);
  ThreeValuedApprox out{{FuzzySet(a.universe(), std::move(lower)), FuzzySet(a.universe(), std::move(upper))},
                        fuzzy_rough_pair(a, induced), induced};
  out.agree = out.by_cases == out.by_operators;
  out.induced_is_min_equivalence = validate(induced, TNorm::minimum).is_t_equivalence();
  return out;
}

struct AlphaIdentities {
  RoughPair by_cut;            // approximations w.r.t. the classes of R_alpha
  CrispSet upper_threshold;    // {x | upper_R(A)(x) >= alpha}
  CrispSet lower_threshold;    // {x | lower_R(A)(x) > 1 - alpha}
  bool upper_holds = false;
  bool lower_holds = false;
};

/// Compares the crisp approximation by the alpha-cut with the threshold
/// sets of the fuzzy approximations. Needs 0 < alpha <= 1, else InvalidAlpha;
/// the cut must be an equivalence (NotAnEquivalence otherwise).
inline AlphaIdentities alpha_identities(const FuzzyRelation& r, const CrispSet& a, const Degree& alpha) {
  if (alpha.is_zero()) throw InvalidAlpha("alpha must be strictly positive");
  require_same_universe(a.universe(), r.universe());
  const auto fp = fuzzy_rough_pair(a, r);
  const auto floor = alpha.complement();
  CrispSet::Bits up(a.width()), low(a.width());
  for (std::size_t x = 0; x < a.width(); ++x) {
    up[x] = fp.upper[x] >= alpha;
    low[x] = fp.lower[x] > floor;
  }
  AlphaIdentities out{crisp_approx(a, classes(alpha_cut(r, alpha))), CrispSet(a.universe(), std::move(up)),
                      CrispSet(a.universe(), std::move(low))};
  out.upper_holds = out.by_cut.upper == out.upper_threshold;
  out.lower_holds = out.by_cut.lower == out.lower_threshold;
  return out;
}

/// The nonzero spectrum values plus the midpoint below each of them (the
/// first measured from 0). Threshold sets only change at spectrum values,
/// so this covers every distinct behaviour in (0,1].
inline std::vector<Degree> alpha_sweep(const FuzzyRelation& r) {
  std::vector<Degree> out;
  mpq_class prev = 0;
  for (const auto& s : spectrum(r)) {
    if (s.is_zero()) continue;
    out.push_back(Degree::from_rational((prev + s.rational()) / 2));
    out.push_back(s);
    prev = s.rational();
  }
  return out;
}

} // namespace fuzzyrough

#endif // FUZZYROUGH_EXACTNESS_HPP
