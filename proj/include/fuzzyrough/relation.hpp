#ifndef FUZZYROUGH_RELATION_HPP
#define FUZZYROUGH_RELATION_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "fuzzyrough/core.hpp"

namespace fuzzyrough {

/// Square matrix of degrees over a universe, stored row-major.
class FuzzyRelation {
public:
  FuzzyRelation(UniversePtr u, std::vector<Degree> row_major) : universe_(std::move(u)), mu_(std::move(row_major)) {
    const auto n = universe_->size();
    if (mu_.size() != n * n)
      throw DimensionMismatch("relation needs " + std::to_string(n * n) + " entries, got " + std::to_string(mu_.size()));
  }

  FuzzyRelation(UniversePtr u, const std::vector<std::vector<Degree>>& rows) : universe_(std::move(u)) {
    const auto n = universe_->size();
    if (rows.size() != n) throw DimensionMismatch("relation has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    mu_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        throw DimensionMismatch("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
      mu_.insert(mu_.end(), rows[i].begin(), rows[i].end());
    }
  }

  /// Crisp equality: 1 on the diagonal, 0 elsewhere.
  static FuzzyRelation identity(UniversePtr u) {
    const auto n = u->size();
    std::vector<Degree> m(n * n);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = Degree::one();
    return FuzzyRelation(std::move(u), std::move(m));
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_->size(); }
  const Degree& operator()(std::size_t x, std::size_t y) const { return mu_[x * size() + y]; }
  const std::vector<Degree>& entries() const noexcept { return mu_; }

  /// Copy with mu(x,y) replaced.
  FuzzyRelation with(std::size_t x, std::size_t y, const Degree& d) const {
    auto m = mu_;
    m.at(x * size() + y) = d;
    return FuzzyRelation(universe_, std::move(m));
  }

  friend bool operator==(const FuzzyRelation& a, const FuzzyRelation& b) {
    return same_universe(a.universe_, b.universe_) && a.mu_ == b.mu_;
  }

private:
  UniversePtr universe_;
  std::vector<Degree> mu_;
};

/// Boolean matrix over a universe; row x is the set {y | (x,y) in C}.
class CrispRelation {
public:
  using Bits = CrispSet::Bits;

  CrispRelation(UniversePtr u, std::vector<Bits> rows) : universe_(std::move(u)), rows_(std::move(rows)) {
    const auto n = universe_->size();
    if (rows_.size() != n) throw DimensionMismatch("crisp relation row count differs from universe size");
    for (const auto& r : rows_)
      if (r.size() != n) throw DimensionMismatch("crisp relation row width differs from universe size");
  }

  static CrispRelation identity(UniversePtr u) {
    const auto n = u->size();
    std::vector<Bits> rows(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
    return CrispRelation(std::move(u), std::move(rows));
  }
  static CrispRelation complete(UniversePtr u) {
    const auto n = u->size();
    std::vector<Bits> rows(n, Bits(n));
    for (auto& r : rows) r.set();
    return CrispRelation(std::move(u), std::move(rows));
  }
  /// The equivalence whose classes are the given blocks.
  static CrispRelation from_blocks(UniversePtr u, const std::vector<std::vector<std::size_t>>& blocks) {
    const auto n = u->size();
    std::vector<Bits> rows(n, Bits(n));
    for (const auto& b : blocks)
      for (auto x : b)
        for (auto y : b) rows.at(x).set(y);
    return CrispRelation(std::move(u), std::move(rows));
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool operator()(std::size_t x, std::size_t y) const { return rows_[x].test(y); }
  const Bits& row(std::size_t x) const { return rows_[x]; }
  CrispSet image(std::size_t x) const { return CrispSet(universe_, rows_[x]); }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (!rows_[i].test(i)) return false;
    return true;
  }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (rows_[i].test(j) != rows_[j].test(i)) return false;
    return true;
  }
  bool is_transitive() const {
    for (std::size_t x = 0; x < size(); ++x)
      for (auto y = rows_[x].find_first(); y != Bits::npos; y = rows_[x].find_next(y))
        if (!rows_[y].is_subset_of(rows_[x])) return false;
    return true;
  }
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

  bool is_subset_of(const CrispRelation& o) const {
    require_same_universe(universe_, o.universe_);
    for (std::size_t i = 0; i < size(); ++i)
      if (!rows_[i].is_subset_of(o.rows_[i])) return false;
    return true;
  }

  friend bool operator==(const CrispRelation& a, const CrispRelation& b) {
    return same_universe(a.universe_, b.universe_) && a.rows_ == b.rows_;
  }

private:
  UniversePtr universe_;
  std::vector<Bits> rows_;
};

/// Disjoint nonempty blocks covering the universe, ordered by least member.
class Partition {
public:
  Partition(UniversePtr u, std::vector<CrispSet> blocks) : universe_(std::move(u)), blocks_(std::move(blocks)) {
    CrispSet::Bits seen(universe_->size());
    for (const auto& b : blocks_) {
      require_same_universe(universe_, b.universe());
      if (b.empty()) throw PreconditionViolated("partition block is empty");
      if (seen.intersects(b.bits())) throw PreconditionViolated("partition blocks overlap");
      seen |= b.bits();
    }
    if (!seen.all()) throw PreconditionViolated("partition blocks do not cover the universe");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const CrispSet& a, const CrispSet& b) { return a.bits().find_first() < b.bits().find_first(); });
    block_of_.assign(universe_->size(), 0);
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      for (auto x : blocks_[k].members()) block_of_[x] = k;
  }

  static Partition singletons(UniversePtr u) {
    std::vector<CrispSet> b;
    for (std::size_t i = 0; i < u->size(); ++i) b.push_back(CrispSet::from_indices(u, {i}));
    return Partition(std::move(u), std::move(b));
  }
  static Partition whole(UniversePtr u) {
    auto full = CrispSet::full(u);
    return Partition(std::move(u), {std::move(full)});
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<CrispSet>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  /// [x]
  const CrispSet& block_containing(std::size_t x) const { return blocks_.at(block_of_.at(x)); }

  /// "{a,b}{c}{d,e}"
  std::string str() const {
    std::string s;
    for (const auto& b : blocks_) s += b.str();
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return same_universe(a.universe_, b.universe_) && a.blocks_ == b.blocks_;
  }

private:
  UniversePtr universe_;
  std::vector<CrispSet> blocks_;
  std::vector<std::size_t> block_of_;
};

struct Violation {
  enum class Kind { reflexivity, symmetry, transitivity };
  Kind kind;
  std::size_t x = 0, y = 0, z = 0;
  /// reflexivity: mu(x,x) vs 1; symmetry: mu(x,y) vs mu(y,x);
  /// transitivity: T(mu(x,y), mu(y,z)) vs mu(x,z).
  Degree lhs, rhs;

  std::string describe(const Universe& u) const {
    switch (kind) {
    case Kind::reflexivity:
      return "mu(" + u.label(x) + "," + u.label(x) + ") = " + lhs.str() + " != 1";
    case Kind::symmetry:
      return "mu(" + u.label(x) + "," + u.label(y) + ") = " + lhs.str() + " != " + rhs.str() + " = mu(" + u.label(y) + "," +
             u.label(x) + ")";
    case Kind::transitivity:
      return "T(mu(" + u.label(x) + "," + u.label(y) + "), mu(" + u.label(y) + "," + u.label(z) + ")) = " + lhs.str() +
             " > " + rhs.str() + " = mu(" + u.label(x) + "," + u.label(z) + ")";
    }
    return {};
  }
};

struct ValidationReport {
  static constexpr std::size_t max_witnesses = 16;

  bool reflexive = true;
  bool symmetric = true;
  bool t_transitive = true;
  /// A finite spectrum always has a maximum in every nonempty subset.
  bool spectrum_dually_well_ordered = true;
  std::size_t violation_count = 0;
  std::vector<Violation> witnesses;

  bool is_t_equivalence() const { return reflexive && symmetric && t_transitive; }
};

/// Full scan for reflexivity, symmetry and T-transitivity. Keeps the first
/// `max_witnesses` violations; the flags always reflect the whole scan.
inline ValidationReport validate(const FuzzyRelation& r, TNorm t) {
  ValidationReport rep;
  const auto n = r.size();
  auto note = [&](Violation v) {
    ++rep.violation_count;
    if (rep.witnesses.size() < ValidationReport::max_witnesses) rep.witnesses.push_back(std::move(v));
  };
  for (std::size_t x = 0; x < n; ++x)
    if (!r(x, x).is_one()) {
      rep.reflexive = false;
      note({Violation::Kind::reflexivity, x, x, x, r(x, x), Degree::one()});
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (r(x, y) != r(y, x)) {
        rep.symmetric = false;
        note({Violation::Kind::symmetry, x, y, y, r(x, y), r(y, x)});
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto lhs = tnorm_eval(t, r(x, y), r(y, z));
        if (r(x, z) < lhs) {
          rep.t_transitive = false;
          note({Violation::Kind::transitivity, x, y, z, std::move(lhs), r(x, z)});
        }
      }
  return rep;
}

/// Sorted distinct degrees occurring in the relation.
inline std::vector<Degree> spectrum(const FuzzyRelation& r) {
  std::vector<Degree> s = r.entries();
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// {(x,y) | mu(x,y) >= alpha}
inline CrispRelation alpha_cut(const FuzzyRelation& r, const Degree& alpha) {
  const auto n = r.size();
  std::vector<CrispRelation::Bits> rows(n, CrispRelation::Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = r(x, y) >= alpha;
  return CrispRelation(r.universe(), std::move(rows));
}

/// E: pairs related with degree 1.
inline CrispRelation relation_core(const FuzzyRelation& r) { return alpha_cut(r, Degree::one()); }

struct SupportRelation {
  CrispRelation relation;
  /// Set when the t-norm is not positive: S need not be transitive then.
  bool non_positive_tnorm = false;
};

/// S: pairs related with a nonzero degree.
inline SupportRelation relation_support(const FuzzyRelation& r, TNorm t = TNorm::minimum) {
  const auto n = r.size();
  std::vector<CrispRelation::Bits> rows(n, CrispRelation::Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = !r(x, y).is_zero();
  return {CrispRelation(r.universe(), std::move(rows)), !is_positive(t)};
}

/// Quotient partition. Throws NotAnEquivalence naming the failed property.
inline Partition classes(const CrispRelation& c) {
  if (!c.is_reflexive()) throw NotAnEquivalence("relation is not reflexive");
  if (!c.is_symmetric()) throw NotAnEquivalence("relation is not symmetric");
  if (!c.is_transitive()) throw NotAnEquivalence("relation is not transitive");
  std::vector<CrispSet> blocks;
  CrispSet::Bits seen(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (seen.test(x)) continue;
    seen |= c.row(x);
    blocks.push_back(c.image(x));
  }
  return Partition(c.universe(), std::move(blocks));
}

/// Least min-transitive relation above a reflexive symmetric one, by
/// repeated max-min composition until nothing changes.
inline FuzzyRelation min_transitive_closure(const FuzzyRelation& r0) {
  const auto pre = validate(r0, TNorm::minimum);
  if (!pre.reflexive || !pre.symmetric)
    throw PreconditionViolated("closure input must be reflexive and symmetric");
  const auto n = r0.size();
  std::vector<Degree> mu = r0.entries();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t z = 0; z < n; ++z) {
        Degree best = mu[x * n + z];
        for (std::size_t y = 0; y < n; ++y) best = max(best, min(mu[x * n + y], mu[y * n + z]));
        if (best != mu[x * n + z]) {
          mu[x * n + z] = std::move(best);
          changed = true;
        }
      }
  }
  return FuzzyRelation(r0.universe(), std::move(mu));
}

/// Random min-equivalence: symmetric entries drawn from {0, 1/4, 1/2, 3/4, 1}
/// with a unit diagonal, then closed under max-min composition.
template <class URBG>
FuzzyRelation random_min_equivalence(UniversePtr u, URBG& rng) {
  static const std::array<Degree, 5> grid{Degree::zero(), Degree::ratio(1, 4), Degree::ratio(1, 2), Degree::ratio(3, 4),
                                          Degree::one()};
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  const auto n = u->size();
  std::vector<Degree> mu(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    mu[x * n + x] = Degree::one();
    for (std::size_t y = x + 1; y < n; ++y) mu[x * n + y] = mu[y * n + x] = grid[pick(rng)];
  }
  return min_transitive_closure(FuzzyRelation(std::move(u), std::move(mu)));
}

} // namespace fuzzyrough

#endif // FUZZYROUGH_RELATION_HPP
