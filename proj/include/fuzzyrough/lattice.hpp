#ifndef FUZZYROUGH_LATTICE_HPP
#define FUZZYROUGH_LATTICE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "fuzzyrough/approximation.hpp"
#include "fuzzyrough/core.hpp"
#include "fuzzyrough/relation.hpp"

namespace fuzzyrough {

struct LatticeLimits {
  /// Enumeration walks all 2^n reference sets.
  std::size_t max_universe = 16;
  /// The order is kept as an n_L x n_L bit matrix.
  std::size_t max_elements = 4096;
  /// Every subset of elements is checked for a sup and an inf below this.
  std::size_t max_complete_check = 20;
};

enum class LatticeKind { crisp, fuzzy, abstract };

/// A finite poset of approximation pairs (or of named points, for test
/// fixtures), with its order matrix and cover relation.
class RoughLattice {
public:
  using Bits = boost::dynamic_bitset<>;
  using Element = std::variant<RoughPair, FuzzyRoughPair, std::string>;
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Arbitrary order given as a full relation matrix; it is not required to
  /// be a partial order (the checker must cope with broken input).
  static RoughLattice from_matrix(std::vector<std::string> names, std::vector<Bits> leq) {
    std::vector<Element> el(names.begin(), names.end());
    return RoughLattice(LatticeKind::abstract, std::move(el), {}, {}, std::move(leq));
  }

  /// Reflexive-transitive closure of the given (lower, upper) pairs.
  static RoughLattice from_covers(std::vector<std::string> names, const std::vector<Edge>& edges) {
    const auto n = names.size();
    std::vector<Bits> leq(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) leq[i].set(i);
    for (const auto& [lo, hi] : edges) leq.at(lo).set(hi);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i].test(k)) leq[i] |= leq[k];
    return from_matrix(std::move(names), std::move(leq));
  }

  LatticeKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  /// {j | i <= j}
  const Bits& up_set(std::size_t i) const { return up_[i]; }
  /// {j | j <= i}
  const Bits& down_set(std::size_t i) const { return down_[i]; }

  /// Transitive reduction of the order, sorted.
  const std::vector<Edge>& covers() const noexcept { return covers_; }
  /// Longest chain length from a minimal element.
  std::size_t rank(std::size_t i) const { return rank_.at(i); }

  /// First reference set (in bitmask order) producing element i.
  std::optional<CrispSet> representative(std::size_t i) const {
    if (representatives_.empty()) return std::nullopt;
    return representatives_.at(i);
  }
  /// Element index of the approximation pair of the reference set `mask`.
  std::size_t element_of_subset(std::uint64_t mask) const { return subset_index_.at(mask); }
  bool has_subset_index() const noexcept { return !subset_index_.empty(); }

  std::optional<std::size_t> bottom() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (up_[i].all()) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> top() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (down_[i].all()) return i;
    return std::nullopt;
  }

  /// Two-line text: upper row first, lower row second.
  std::string label(std::size_t i) const {
    const auto& e = elements_.at(i);
    if (const auto* fp = std::get_if<FuzzyRoughPair>(&e)) return fp->upper.str() + "\n" + fp->lower.str();
    if (const auto* cp = std::get_if<RoughPair>(&e)) return cp->upper.str() + "\n" + cp->lower.str();
    return std::get<std::string>(e);
  }

  static RoughLattice build(LatticeKind kind, std::vector<Element> el, std::vector<CrispSet> reps,
                            std::vector<std::size_t> subset_index) {
    const auto n = el.size();
    std::vector<Bits> leq(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) leq[i][j] = pair_leq(el[i], el[j]);
    return RoughLattice(kind, std::move(el), std::move(reps), std::move(subset_index), std::move(leq));
  }

private:
  RoughLattice(LatticeKind kind, std::vector<Element> el, std::vector<CrispSet> reps, std::vector<std::size_t> subset_index,
               std::vector<Bits> leq)
      : kind_(kind), elements_(std::move(el)), representatives_(std::move(reps)), subset_index_(std::move(subset_index)),
        up_(std::move(leq)) {
    const auto n = elements_.size();
    if (up_.size() != n) throw DimensionMismatch("order matrix row count differs from element count");
    down_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (up_[i].size() != n) throw DimensionMismatch("order matrix row width differs from element count");
      for (auto j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) down_[j].set(i);
    }
    compute_covers();
    compute_ranks();
  }

  static bool pair_leq(const Element& a, const Element& b) {
    if (const auto* fa = std::get_if<FuzzyRoughPair>(&a)) return fa->leq(std::get<FuzzyRoughPair>(b));
    return std::get<RoughPair>(a).leq(std::get<RoughPair>(b));
  }

  void compute_covers() {
    const auto n = size();
    for (std::size_t i = 0; i < n; ++i) {
      Bits strict = up_[i];
      strict.reset(i);
      Bits reach_via(n);
      for (auto k = strict.find_first(); k != Bits::npos; k = strict.find_next(k)) {
        Bits above_k = up_[k];
        above_k.reset(k);
        reach_via |= above_k;
      }
      const Bits cov = strict - reach_via;
      for (auto j = cov.find_first(); j != Bits::npos; j = cov.find_next(j)) covers_.emplace_back(i, j);
    }
  }

  void compute_ranks() {
    // Sorting by down-set size is a linear extension of any partial order.
    const auto n = size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
    std::vector<std::vector<std::size_t>> below(n);
    for (const auto& [lo, hi] : covers_) below[hi].push_back(lo);
    rank_.assign(n, 0);
    for (auto j : order)
      for (auto i : below[j])
        if (i != j) rank_[j] = std::max(rank_[j], rank_[i] + 1);
  }

  LatticeKind kind_;
  std::vector<Element> elements_;
  std::vector<CrispSet> representatives_;
  std::vector<std::size_t> subset_index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<Edge> covers_;
  std::vector<std::size_t> rank_;
};

namespace detail {

inline void check_universe_cap(std::size_t n, const LatticeLimits& limits) {
  if (n > limits.max_universe || n > 63)
    throw UniverseTooLarge("universe of " + std::to_string(n) + " elements exceeds the enumeration cap of " +
                           std::to_string(std::min<std::size_t>(limits.max_universe, 63)));
}

inline void check_element_cap(std::size_t count, const LatticeLimits& limits) {
  if (count > limits.max_elements)
    throw UniverseTooLarge("lattice has more than " + std::to_string(limits.max_elements) + " elements");
}

/// Deduplicates the pairs produced for every reference set, in bitmask order.
template <class Pair, class Key, class MakePair, class MakeKey>
RoughLattice enumerate(LatticeKind kind, const UniversePtr& u, const LatticeLimits& limits, MakePair make_pair,
                       MakeKey make_key) {
  const auto n = u->size();
  check_universe_cap(n, limits);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::map<Key, std::size_t> seen;
  std::vector<RoughLattice::Element> elements;
  std::vector<CrispSet> reps;
  std::vector<std::size_t> index(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    auto a = CrispSet::from_mask(u, mask);
    Pair p = make_pair(a);
    auto [it, fresh] = seen.try_emplace(make_key(p), elements.size());
    if (fresh) {
      check_element_cap(elements.size() + 1, limits);
      elements.emplace_back(std::move(p));
      reps.push_back(std::move(a));
    }
    index[mask] = it->second;
  }
  return RoughLattice::build(kind, std::move(elements), std::move(reps), std::move(index));
}

} // namespace detail

/// All crisp rough sets of the given partition.
inline RoughLattice enumerate_crisp(const Partition& p, const LatticeLimits& limits = {}) {
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  return detail::enumerate<RoughPair, Key>(
      LatticeKind::crisp, p.universe(), limits, [&](const CrispSet& a) { return crisp_approx(a, p); },
      [](const RoughPair& rp) { return Key{rp.lower.mask(), rp.upper.mask()}; });
}

/// All fuzzy rough sets of crisp reference sets. The relation must be a
/// T-equivalence for `t`, else InvalidRelation.
inline RoughLattice enumerate_fuzzy(const FuzzyRelation& r, TNorm t = TNorm::minimum, const LatticeLimits& limits = {}) {
  detail::check_universe_cap(r.size(), limits);
  if (!validate(r, t).is_t_equivalence())
    throw InvalidRelation("relation is not a " + std::string(name_of(t)) + "-equivalence");
  using Key = std::vector<Degree>;
  return detail::enumerate<FuzzyRoughPair, Key>(
      LatticeKind::fuzzy, r.universe(), limits, [&](const CrispSet& a) { return fuzzy_rough_pair(a, r); },
      [](const FuzzyRoughPair& fp) {
        Key k = fp.lower.degrees();
        k.insert(k.end(), fp.upper.degrees().begin(), fp.upper.degrees().end());
        return k;
      });
}

struct Bounds {
  std::size_t meet;
  std::size_t join;
};

namespace detail {

/// Element m of `candidates` with candidates ⊆ down(m), if any.
inline std::optional<std::size_t> greatest_of(const RoughLattice& l, const RoughLattice::Bits& candidates) {
  for (auto m = candidates.find_first(); m != RoughLattice::Bits::npos; m = candidates.find_next(m))
    if (candidates.is_subset_of(l.down_set(m))) return m;
  return std::nullopt;
}

inline std::optional<std::size_t> least_of(const RoughLattice& l, const RoughLattice::Bits& candidates) {
  for (auto m = candidates.find_first(); m != RoughLattice::Bits::npos; m = candidates.find_next(m))
    if (candidates.is_subset_of(l.up_set(m))) return m;
  return std::nullopt;
}

inline std::optional<std::size_t> meet_of(const RoughLattice& l, std::size_t i, std::size_t j) {
  return greatest_of(l, l.down_set(i) & l.down_set(j));
}

inline std::optional<std::size_t> join_of(const RoughLattice& l, std::size_t i, std::size_t j) {
  return least_of(l, l.up_set(i) & l.up_set(j));
}

} // namespace detail

/// Meet and join by scanning the order. Throws NotALattice when either is
/// missing.
inline Bounds bounds(const RoughLattice& l, std::size_t i, std::size_t j) {
  if (i >= l.size() || j >= l.size()) throw PreconditionViolated("element index out of range");
  const auto m = detail::meet_of(l, i, j);
  const auto s = detail::join_of(l, i, j);
  if (!m) throw NotALattice("elements " + std::to_string(i) + " and " + std::to_string(j) + " have no meet");
  if (!s) throw NotALattice("elements " + std::to_string(i) + " and " + std::to_string(j) + " have no join");
  return {*m, *s};
}

struct IsomorphismWitness {
  /// crisp element index -> fuzzy element index
  std::vector<std::size_t> mapping;
  std::size_t crisp_size = 0;
  std::size_t fuzzy_size = 0;
  bool well_defined = false;
  bool bijective = false;
  bool order_preserving_both_ways = false;
  std::optional<std::string> counterexample;

  bool valid() const { return well_defined && bijective && order_preserving_both_ways; }
};

/// Builds the crisp lattice of the core E and the fuzzy lattice of R, maps
/// (A_E, A^E) to (lower_R(A), upper_R(A)) through shared reference sets,
/// and checks the map is a well-defined order isomorphism.
inline IsomorphismWitness theorem1_verify(const FuzzyRelation& r, TNorm t = TNorm::minimum,
                                          const LatticeLimits& limits = {}) {
  const auto fuzzy = enumerate_fuzzy(r, t, limits);
  const auto crisp = enumerate_crisp(classes(relation_core(r)), limits);
  IsomorphismWitness w;
  w.crisp_size = crisp.size();
  w.fuzzy_size = fuzzy.size();

  constexpr auto unset = static_cast<std::size_t>(-1);
  w.mapping.assign(crisp.size(), unset);
  w.well_defined = true;
  const std::uint64_t subsets = std::uint64_t{1} << r.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto c = crisp.element_of_subset(mask);
    const auto f = fuzzy.element_of_subset(mask);
    if (w.mapping[c] == unset) {
      w.mapping[c] = f;
    } else if (w.mapping[c] != f && w.well_defined) {
      w.well_defined = false;
      w.counterexample = "reference sets " + crisp.representative(c)->str() + " and " +
                         CrispSet::from_mask(r.universe(), mask).str() +
                         " share a crisp rough set but not a fuzzy rough set";
    }
  }

  std::vector<bool> hit(fuzzy.size(), false);
  w.bijective = crisp.size() == fuzzy.size();
  for (auto f : w.mapping) {
    if (f == unset || hit[f]) w.bijective = false;
    else hit[f] = true;
  }
  if (!w.bijective && !w.counterexample)
    w.counterexample = "crisp lattice has " + std::to_string(crisp.size()) + " elements, fuzzy lattice has " +
                       std::to_string(fuzzy.size());

  w.order_preserving_both_ways = w.well_defined;
  for (std::size_t i = 0; i < crisp.size() && w.order_preserving_both_ways; ++i)
    for (std::size_t j = 0; j < crisp.size(); ++j)
      if (crisp.leq(i, j) != fuzzy.leq(w.mapping[i], w.mapping[j])) {
        w.order_preserving_both_ways = false;
        if (!w.counterexample)
          w.counterexample = "order differs between representatives " + crisp.representative(i)->str() + " and " +
                             crisp.representative(j)->str();
        break;
      }
  return w;
}

struct Counterexample {
  std::string property;
  std::vector<std::size_t> elements;
  std::string detail;
};

struct StoneReport {
  bool is_partial_order = false;
  bool is_lattice = false;
  bool is_distributive = false;
  /// Pseudocomplements exist and a* v a** = 1 for every a.
  bool stone_identity = false;
  /// Dual pseudocomplements exist and a+ ^ a++ = 0 for every a.
  bool dual_stone_identity = false;
  /// (a*, a+) determines a.
  bool is_regular = false;
  /// Every subset has a sup and an inf; empty when the lattice is above
  /// LatticeLimits::max_complete_check elements.
  std::optional<bool> is_complete;
  std::vector<Counterexample> counterexamples;

  bool regular_double_stone() const {
    return is_lattice && is_distributive && stone_identity && dual_stone_identity && is_regular;
  }
};

namespace detail {

inline std::optional<Counterexample> partial_order_failure(const RoughLattice& l) {
  const auto n = l.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!l.leq(i, i)) return Counterexample{"partial order", {i}, "not reflexive"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (l.leq(i, j) && l.leq(j, i)) return Counterexample{"partial order", {i, j}, "not antisymmetric"};
  for (std::size_t i = 0; i < n; ++i)
    for (auto j = l.up_set(i).find_first(); j != RoughLattice::Bits::npos; j = l.up_set(i).find_next(j))
      if (!l.up_set(j).is_subset_of(l.up_set(i))) {
        const auto k = (l.up_set(j) - l.up_set(i)).find_first();
        return Counterexample{"partial order", {i, j, k}, "not transitive"};
      }
  return std::nullopt;
}

/// Checks that every subset of elements has a least upper and a greatest
/// lower bound, via up/down bitmasks accumulated over subsets.
inline std::optional<Counterexample> completeness_failure(const RoughLattice& l) {
  const auto n = l.size();
  std::vector<std::uint32_t> up(n), down(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (l.leq(i, j)) up[i] |= std::uint32_t{1} << j;
      if (l.leq(j, i)) down[i] |= std::uint32_t{1} << j;
    }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint32_t> ub(subsets), lb(subsets);
  ub[0] = lb[0] = all;

  auto has_extreme = [&](std::uint32_t candidates, const std::vector<std::uint32_t>& cone) {
    for (std::uint32_t c = candidates; c; c &= c - 1) {
      const auto m = static_cast<std::size_t>(std::countr_zero(c));
      if ((candidates & ~cone[m]) == 0) return true;
    }
    return false;
  };
  auto members = [&](std::size_t s) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1U) v.push_back(i);
    return v;
  };

  for (std::size_t s = 0; s < subsets; ++s) {
    if (s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      ub[s] = ub[s & (s - 1)] & up[low];
      lb[s] = lb[s & (s - 1)] & down[low];
    }
    if (!has_extreme(ub[s], up)) return Counterexample{"complete", members(s), "subset has no least upper bound"};
    if (!has_extreme(lb[s], down)) return Counterexample{"complete", members(s), "subset has no greatest lower bound"};
  }
  return std::nullopt;
}

} // namespace detail

/// Checks lattice, distributivity, Stone and dual Stone identities and
/// regularity on any finite order. Failures are reported with witnesses,
/// never thrown.
inline StoneReport stone_verify(const RoughLattice& l, const LatticeLimits& limits = {}) {
  StoneReport rep;
  const auto n = l.size();
  auto fail_rest = [&](const std::string& why) {
    for (const char* p : {"distributive", "stone", "dual stone", "regular"})
      rep.counterexamples.push_back({p, {}, why});
  };
  if (n == 0) {
    rep.counterexamples.push_back({"lattice", {}, "empty order"});
    fail_rest("empty order");
    return rep;
  }

  if (auto bad = detail::partial_order_failure(l)) {
    rep.counterexamples.push_back(std::move(*bad));
    rep.counterexamples.push_back({"lattice", {}, "order is not a partial order"});
    fail_rest("order is not a partial order");
    return rep;
  }
  rep.is_partial_order = true;

  std::vector<std::size_t> meet(n * n), join(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto m = detail::meet_of(l, i, j);
      const auto s = detail::join_of(l, i, j);
      if (!m || !s) {
        rep.counterexamples.push_back({"lattice", {i, j}, m ? "no join" : "no meet"});
        fail_rest("not a lattice");
        return rep;
      }
      meet[i * n + j] = *m;
      join[i * n + j] = *s;
    }
  rep.is_lattice = true;
  auto M = [&](std::size_t a, std::size_t b) { return meet[a * n + b]; };
  auto J = [&](std::size_t a, std::size_t b) { return join[a * n + b]; };

  if (n <= limits.max_complete_check && n <= 32) {
    auto bad = detail::completeness_failure(l);
    rep.is_complete = !bad;
    if (bad) rep.counterexamples.push_back(std::move(*bad));
  }

  rep.is_distributive = true;
  for (std::size_t x = 0; x < n && rep.is_distributive; ++x)
    for (std::size_t y = 0; y < n && rep.is_distributive; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (M(x, J(y, z)) != J(M(x, y), M(x, z))) {
          rep.is_distributive = false;
          rep.counterexamples.push_back({"distributive", {x, y, z}, "x ^ (y v z) != (x ^ y) v (x ^ z)"});
          break;
        }

  const std::size_t bot = *l.bottom();
  const std::size_t top = *l.top();

  std::vector<std::optional<std::size_t>> star(n), plus(n);
  for (std::size_t a = 0; a < n; ++a) {
    RoughLattice::Bits disjoint(n), covering(n);
    for (std::size_t x = 0; x < n; ++x) {
      disjoint[x] = M(x, a) == bot;
      covering[x] = J(x, a) == top;
    }
    star[a] = detail::greatest_of(l, disjoint);
    plus[a] = detail::least_of(l, covering);
  }

  rep.stone_identity = true;
  for (std::size_t a = 0; a < n && rep.stone_identity; ++a) {
    if (!star[a]) {
      rep.stone_identity = false;
      rep.counterexamples.push_back({"stone", {a}, "no pseudocomplement"});
    } else if (J(*star[a], *star[*star[a]]) != top) {
      rep.stone_identity = false;
      rep.counterexamples.push_back({"stone", {a}, "a* v a** != 1"});
    }
  }
  rep.dual_stone_identity = true;
  for (std::size_t a = 0; a < n && rep.dual_stone_identity; ++a) {
    if (!plus[a]) {
      rep.dual_stone_identity = false;
      rep.counterexamples.push_back({"dual stone", {a}, "no dual pseudocomplement"});
    } else if (M(*plus[a], *plus[*plus[a]]) != bot) {
      rep.dual_stone_identity = false;
      rep.counterexamples.push_back({"dual stone", {a}, "a+ ^ a++ != 0"});
    }
  }

  rep.is_regular = true;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_complements;
  for (std::size_t a = 0; a < n && rep.is_regular; ++a) {
    if (!star[a] || !plus[a]) {
      rep.is_regular = false;
      rep.counterexamples.push_back({"regular", {a}, "complements undefined"});
      break;
    }
    auto [it, fresh] = by_complements.try_emplace({*star[a], *plus[a]}, a);
    if (!fresh) {
      rep.is_regular = false;
      rep.counterexamples.push_back({"regular", {it->second, a}, "a* = b* and a+ = b+ but a != b"});
    }
  }
  return rep;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

} // namespace detail

/// Hasse diagram as Graphviz text. Nodes are numbered by (rank, label) and
/// edges sorted, so equal lattices always give identical bytes.
inline std::string to_dot(const RoughLattice& l, const std::string& name = "lattice") {
  const auto n = l.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = l.label(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::forward_as_tuple(l.rank(a), labels[a], a) < std::forward_as_tuple(l.rank(b), labels[b], b);
  });
  std::vector<std::size_t> id(n);
  for (std::size_t k = 0; k < n; ++k) id[order[k]] = k;

  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape(name) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  os << "  edge [arrowhead=none];\n";
  for (std::size_t k = 0; k < n; ++k)
    os << "  n" << k << " [label=\"" << detail::dot_escape(labels[order[k]]) << "\"];\n";
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : l.covers()) edges.emplace_back(id[lo], id[hi]);
  std::sort(edges.begin(), edges.end());
  for (const auto& [lo, hi] : edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace fuzzyrough

#endif // FUZZYROUGH_LATTICE_HPP
