#ifndef FUZZYROUGH_TESTS_FIXTURES_HPP
#define FUZZYROUGH_TESTS_FIXTURES_HPP

// Shared test data and brute-force oracles. The oracles evaluate the
// definitions directly (sup/inf over explicit index loops on raw rationals)
// and never call the library's approximation or lattice code.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fuzzyrough/approximation.hpp"
#include "fuzzyrough/core.hpp"
#include "fuzzyrough/relation.hpp"

namespace fixtures {

using namespace fuzzyrough;

inline Degree d(const char* s) { return Degree::parse(s); }

inline FuzzyRelation from_strings(const UniversePtr& u, const std::vector<std::vector<const char*>>& rows) {
  std::vector<std::vector<Degree>> m;
  for (const auto& r : rows) {
    std::vector<Degree> row;
    for (const auto* s : r) row.push_back(d(s));
    m.push_back(std::move(row));
  }
  return FuzzyRelation(u, m);
}

/// Five-element example with spectrum {0, 1/2, 1}.
inline FuzzyRelation table1() {
  static const auto u = Universe::letters(5);
  return from_strings(u, {{"1", "1", "0.5", "0", "0"},
                          {"1", "1", "0.5", "0", "0"},
                          {"0.5", "0.5", "1", "0", "0"},
                          {"0", "0", "0", "1", "1"},
                          {"0", "0", "0", "1", "1"}});
}

/// Four-element example with spectrum {0, 3/10, 1}.
inline FuzzyRelation table3() {
  static const auto u = Universe::letters(4);
  return from_strings(u, {{"1", "1", "0.3", "0"}, {"1", "1", "0.3", "0"}, {"0.3", "0.3", "1", "0"}, {"0", "0", "0", "1"}});
}

/// Labels like "abd" or "" -> set.
inline CrispSet set_of(const UniversePtr& u, const std::string& letters) {
  std::vector<std::string> l;
  for (char c : letters) l.emplace_back(1, c);
  return CrispSet::from_labels(u, l);
}

inline FuzzySet vec(const UniversePtr& u, const std::vector<const char*>& v) {
  std::vector<Degree> out;
  for (const auto* s : v) out.push_back(d(s));
  return FuzzySet(u, std::move(out));
}

// --- oracles ---------------------------------------------------------------

/// inf{1 - mu(x,y) | y not in A}, inf of nothing = 1, on raw rationals.
inline std::vector<mpq_class> oracle_lower(const FuzzyRelation& r, std::uint64_t a) {
  const auto n = r.size();
  std::vector<mpq_class> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    mpq_class inf = 1;
    for (std::size_t y = 0; y < n; ++y)
      if (!(a >> y & 1U)) {
        mpq_class v = 1 - r(x, y).rational();
        if (v < inf) inf = v;
      }
    out[x] = inf;
  }
  return out;
}

/// sup{mu(x,y) | y in A}, sup of nothing = 0.
inline std::vector<mpq_class> oracle_upper(const FuzzyRelation& r, std::uint64_t a) {
  const auto n = r.size();
  std::vector<mpq_class> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    mpq_class sup = 0;
    for (std::size_t y = 0; y < n; ++y)
      if ((a >> y & 1U) && r(x, y).rational() > sup) sup = r(x, y).rational();
    out[x] = sup;
  }
  return out;
}

inline std::vector<mpq_class> rationals(const FuzzySet& f) {
  std::vector<mpq_class> v;
  for (const auto& x : f.degrees()) v.push_back(x.rational());
  return v;
}

/// Class of x under {(x,y) | pred(mu(x,y))} as a bitmask.
template <class Pred>
std::uint64_t oracle_class(const FuzzyRelation& r, std::size_t x, Pred pred) {
  std::uint64_t m = 0;
  for (std::size_t y = 0; y < r.size(); ++y)
    if (pred(r(x, y).rational())) m |= std::uint64_t{1} << y;
  return m;
}

/// Crisp lower/upper approximations straight from the class definitions.
template <class Pred>
std::pair<std::uint64_t, std::uint64_t> oracle_crisp(const FuzzyRelation& r, std::uint64_t a, Pred pred) {
  std::uint64_t lo = 0, up = 0;
  for (std::size_t x = 0; x < r.size(); ++x) {
    const auto c = oracle_class(r, x, pred);
    if ((c & ~a) == 0) lo |= std::uint64_t{1} << x;
    if (c & a) up |= std::uint64_t{1} << x;
  }
  return {lo, up};
}

/// Number of rough sets of a partition: a block of one element contributes
/// two states (in / out), a larger block three (inside, boundary, outside).
inline std::size_t oracle_rough_set_count(const std::vector<std::size_t>& block_sizes) {
  std::size_t c = 1;
  for (auto k : block_sizes) c *= k == 1 ? 2 : 3;
  return c;
}

/// All unions of the given blocks (bitmasks).
inline std::set<std::uint64_t> oracle_saturated(const std::vector<std::uint64_t>& blocks) {
  std::set<std::uint64_t> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << blocks.size()); ++pick) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k)
      if (pick >> k & 1U) m |= blocks[k];
    out.insert(m);
  }
  return out;
}

// --- generators ------------------------------------------------------------

/// Random partition of n elements as a block index per element.
template <class URBG>
std::vector<std::size_t> random_labels(std::size_t n, URBG& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> l(n);
  for (auto& x : l) x = pick(rng);
  return l;
}

/// Pair certain ⊆ possible of crisp equivalences: possible is a random
/// partition, certain a random refinement of it.
template <class URBG>
std::pair<CrispRelation, CrispRelation> random_nested_equivalences(const UniversePtr& u, URBG& rng) {
  const auto n = u->size();
  const auto coarse = random_labels(n, rng);
  const auto fine_extra = random_labels(n, rng);
  auto build = [&](auto same) {
    std::vector<CrispRelation::Bits> rows(n, CrispRelation::Bits(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) rows[x][y] = same(x, y);
    return CrispRelation(u, std::move(rows));
  };
  auto possible = build([&](std::size_t x, std::size_t y) { return coarse[x] == coarse[y]; });
  auto certain = build([&](std::size_t x, std::size_t y) {
    return coarse[x] == coarse[y] && fine_extra[x] == fine_extra[y];
  });
  return {std::move(certain), std::move(possible)};
}

} // namespace fixtures

#endif // FUZZYROUGH_TESTS_FIXTURES_HPP
