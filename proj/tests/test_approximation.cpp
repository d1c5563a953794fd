#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fuzzyrough/approximation.hpp"
#include "reference_tables.hpp"

using namespace fuzzyrough;
using fixtures::d;
using fixtures::set_of;
using fixtures::vec;

namespace {

const Partition& fig1_partition() {
  static const Partition p = classes(relation_core(fixtures::table1()));
  return p;
}

} // namespace

TEST(CrispApprox, Examples) {
  const auto u = fixtures::table1().universe();
  const auto& p = fig1_partition();
  auto rp = crisp_approx(set_of(u, "a"), p);
  EXPECT_EQ(rp.lower, CrispSet::empty(u));
  EXPECT_EQ(rp.upper, set_of(u, "ab"));
  rp = crisp_approx(set_of(u, "cde"), p);
  EXPECT_EQ(rp.lower, set_of(u, "cde"));
  EXPECT_EQ(rp.upper, set_of(u, "cde"));
  rp = crisp_approx(CrispSet::full(u), p);
  EXPECT_EQ(rp.lower, CrispSet::full(u));
  EXPECT_EQ(rp.upper, CrispSet::full(u));
}

TEST(CrispApprox, UniverseMismatch) {
  const auto other = Universe::make({"p", "q", "r", "s", "t"});
  EXPECT_THROW(crisp_approx(CrispSet::empty(other), fig1_partition()), UniverseMismatch);
}

TEST(FuzzyApprox, LowerExamples) {
  const auto r = fixtures::table1();
  const auto& u = r.universe();
  EXPECT_EQ(fuzzy_lower(set_of(u, "ab"), r), vec(u, {"0.5", "0.5", "0", "0", "0"}));
  EXPECT_EQ(fuzzy_lower(set_of(u, "abc"), r), vec(u, {"1", "1", "1", "0", "0"}));
  EXPECT_EQ(fuzzy_lower(CrispSet::empty(u), r), FuzzySet::constant(u, Degree::zero()));
  EXPECT_EQ(fuzzy_lower(CrispSet::full(u), r), FuzzySet::constant(u, Degree::one()));
}

TEST(FuzzyApprox, UpperExamples) {
  const auto r = fixtures::table1();
  const auto& u = r.universe();
  EXPECT_EQ(fuzzy_upper(set_of(u, "a"), r), vec(u, {"1", "1", "0.5", "0", "0"}));
  EXPECT_EQ(fuzzy_upper(set_of(u, "cd"), r), vec(u, {"0.5", "0.5", "1", "1", "1"}));
  EXPECT_EQ(fuzzy_upper(CrispSet::full(u), r), FuzzySet::constant(u, Degree::one()));
  EXPECT_EQ(fuzzy_upper(CrispSet::empty(u), r), FuzzySet::constant(u, Degree::zero()));
}

TEST(FuzzyApprox, PairExamples) {
  const auto r = fixtures::table1();
  const auto& u = r.universe();
  auto fp = fuzzy_rough_pair(set_of(u, "de"), r);
  EXPECT_EQ(fp.lower, vec(u, {"0", "0", "0", "1", "1"}));
  EXPECT_EQ(fp.upper, vec(u, {"0", "0", "0", "1", "1"}));
  fp = fuzzy_rough_pair(set_of(u, "acd"), r);
  EXPECT_EQ(fp.lower, vec(u, {"0", "0", "0.5", "0", "0"}));
  EXPECT_EQ(fp.upper, vec(u, {"1", "1", "1", "1", "1"}));
  EXPECT_THROW(fuzzy_rough_pair(CrispSet::empty(Universe::letters(3)), r), UniverseMismatch);
}

TEST(FuzzyApprox, MatchesDefinitionOracle) {
  std::mt19937 rng(41);
  for (int i = 0; i < 40; ++i) {
    const auto r = random_min_equivalence(Universe::letters(2 + i % 5), rng);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << r.size()); ++a) {
      const auto s = CrispSet::from_mask(r.universe(), a);
      EXPECT_EQ(fixtures::rationals(fuzzy_lower(s, r)), fixtures::oracle_lower(r, a));
      EXPECT_EQ(fixtures::rationals(fuzzy_upper(s, r)), fixtures::oracle_upper(r, a));
    }
  }
}

TEST(FuzzyApprox, Table2Replay) {
  const auto r = fixtures::table1();
  const auto& u = r.universe();
  const auto& p = fig1_partition();
  for (const auto& row : reference::approximations()) {
    SCOPED_TRACE(row.set);
    const auto a = set_of(u, row.set);
    const auto rp = crisp_approx(a, p);
    EXPECT_EQ(rp.lower, set_of(u, row.lower_e));
    EXPECT_EQ(rp.upper, set_of(u, row.upper_e));
    const auto fp = fuzzy_rough_pair(a, r);
    EXPECT_EQ(fp.lower, vec(u, {row.lower.begin(), row.lower.end()}));
    EXPECT_EQ(fp.upper, vec(u, {row.upper.begin(), row.upper.end()}));
  }
}

TEST(FuzzyApprox, ContainmentChainAndMonotonicity) {
  std::mt19937 rng(43);
  for (int i = 0; i < 40; ++i) {
    const auto r = random_min_equivalence(Universe::letters(2 + i % 5), rng);
    const std::uint64_t subsets = std::uint64_t{1} << r.size();
    for (std::uint64_t a = 0; a < subsets; ++a) {
      const auto s = CrispSet::from_mask(r.universe(), a);
      const auto fp = fuzzy_rough_pair(s, r);
      EXPECT_TRUE(core_of(fp.lower).is_subset_of(support_of(fp.lower)));
      EXPECT_TRUE(support_of(fp.lower).is_subset_of(s));
      EXPECT_TRUE(s.is_subset_of(core_of(fp.upper)));
      EXPECT_TRUE(core_of(fp.upper).is_subset_of(support_of(fp.upper)));
      EXPECT_TRUE(fp.lower.leq(fp.upper));
      // supersets obtained by adding one element
      for (std::size_t k = 0; k < r.size(); ++k) {
        const auto b = CrispSet::from_mask(r.universe(), a | (std::uint64_t{1} << k));
        const auto fb = fuzzy_rough_pair(b, r);
        EXPECT_TRUE(fp.lower.leq(fb.lower));
        EXPECT_TRUE(fp.upper.leq(fb.upper));
      }
    }
  }
}

TEST(Lemma2, Examples) {
  const auto r1 = fixtures::table1();
  const auto u1 = r1.universe();
  auto b = lemma2_bridge(set_of(u1, "ad"), r1);
  EXPECT_TRUE(b.verified);
  EXPECT_EQ(b.by_e.lower, CrispSet::empty(u1));
  EXPECT_EQ(b.by_e.upper, set_of(u1, "abde"));

  const auto r3 = fixtures::table3();
  const auto u3 = r3.universe();
  b = lemma2_bridge(set_of(u3, "d"), r3);
  EXPECT_TRUE(b.verified);
  ASSERT_TRUE(b.by_s);
  EXPECT_EQ(b.by_s->lower, set_of(u3, "d"));
  EXPECT_EQ(b.by_s->upper, set_of(u3, "d"));

  b = lemma2_bridge(CrispSet::full(u1), r1);
  EXPECT_TRUE(b.verified);
  EXPECT_EQ(b.by_e.lower, CrispSet::full(u1));
  EXPECT_EQ(b.by_e.upper, CrispSet::full(u1));
  EXPECT_EQ(b.by_s->lower, CrispSet::full(u1));
  EXPECT_EQ(b.by_s->upper, CrispSet::full(u1));
}

TEST(Lemma2, SkipsSupportSideForNonPositiveTNorm) {
  const auto r = fixtures::table1();
  const auto b = lemma2_bridge(set_of(r.universe(), "ac"), r, TNorm::lukasiewicz);
  EXPECT_FALSE(b.s_side_checked);
  EXPECT_FALSE(b.by_s);
  EXPECT_TRUE(b.verified);
}

TEST(Lemma2, ExhaustiveOnRandomEquivalences) {
  std::mt19937 rng(47);
  for (int i = 0; i < 60; ++i) {
    const auto r = random_min_equivalence(Universe::letters(2 + i % 5), rng);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << r.size()); ++a) {
      const auto s = CrispSet::from_mask(r.universe(), a);
      const auto b = lemma2_bridge(s, r);
      EXPECT_TRUE(b.verified);
      // crisp sides against the definition oracle
      const auto e = fixtures::oracle_crisp(r, a, [](const mpq_class& v) { return v == 1; });
      const auto sp = fixtures::oracle_crisp(r, a, [](const mpq_class& v) { return v > 0; });
      EXPECT_EQ(b.by_e.lower.mask(), e.first);
      EXPECT_EQ(b.by_e.upper.mask(), e.second);
      EXPECT_EQ(b.by_s->lower.mask(), sp.first);
      EXPECT_EQ(b.by_s->upper.mask(), sp.second);
    }
  }
}

TEST(Prop1, Examples) {
  const auto r = fixtures::table1();
  const auto& u = r.universe();
  EXPECT_TRUE(prop1_check(set_of(u, "a"), r));
  EXPECT_EQ(fuzzy_upper(set_of(u, "a"), r), fuzzy_upper(set_of(u, "ab"), r));
  EXPECT_TRUE(prop1_check(set_of(u, "cd"), r));
  EXPECT_EQ(fuzzy_lower(set_of(u, "cd"), r), fuzzy_lower(set_of(u, "c"), r));
  EXPECT_EQ(fuzzy_lower(set_of(u, "c"), r), vec(u, {"0", "0", "0.5", "0", "0"}));
  EXPECT_TRUE(prop1_check(CrispSet::empty(u), r));
  EXPECT_THROW(prop1_check(CrispSet::empty(Universe::letters(2)), r), UniverseMismatch);
}

TEST(Prop1, ExhaustiveOnRandomEquivalences) {
  std::mt19937 rng(53);
  for (int i = 0; i < 60; ++i) {
    const auto r = random_min_equivalence(Universe::letters(2 + i % 5), rng);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << r.size()); ++a)
      EXPECT_TRUE(prop1_check(CrispSet::from_mask(r.universe(), a), r));
  }
}
