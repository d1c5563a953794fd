#ifndef FUZZYROUGH_CORE_HPP
#define FUZZYROUGH_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fuzzyrough/degree.hpp"
#include "fuzzyrough/error.hpp"

namespace fuzzyrough {

/// Ordered, duplicate-free list of element labels. Everything downstream
/// works on indices 0..n-1; labels only matter at the I/O boundary.
class Universe {
public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw PreconditionViolated("a universe needs at least one element");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l).second) throw PreconditionViolated("duplicate universe label '" + l + "'");
  }

  static std::shared_ptr<const Universe> make(std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(labels));
  }

  /// Single-letter labels "a", "b", ... for n <= 26, "x0".."x{n-1}" beyond.
  static std::shared_ptr<const Universe> letters(std::size_t n) {
    std::vector<std::string> l;
    l.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      l.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
    return make(std::move(l));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  friend bool operator==(const Universe&, const Universe&) = default;

private:
  std::vector<std::string> labels_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw UniverseMismatch();
}

/// Subset of a universe. Equality is extensional.
class CrispSet {
public:
  using Bits = boost::dynamic_bitset<>;

  CrispSet(UniversePtr u, Bits bits) : universe_(std::move(u)), bits_(std::move(bits)) {
    if (bits_.size() != universe_->size()) throw DimensionMismatch("crisp set width differs from universe size");
  }

  static CrispSet empty(UniversePtr u) {
    const auto n = u->size();
    return CrispSet(std::move(u), Bits(n));
  }
  static CrispSet full(UniversePtr u) {
    Bits b(u->size());
    b.set();
    return CrispSet(std::move(u), std::move(b));
  }
  /// Bit i of `mask` selects element i. Requires n <= 64.
  static CrispSet from_mask(UniversePtr u, std::uint64_t mask) {
    if (u->size() > 64) throw UniverseTooLarge("bitmask construction needs at most 64 elements");
    Bits b(u->size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = (mask >> i) & 1U;
    return CrispSet(std::move(u), std::move(b));
  }
  static CrispSet from_indices(UniversePtr u, std::span<const std::size_t> indices) {
    Bits b(u->size());
    for (auto i : indices) {
      if (i >= b.size()) throw PreconditionViolated("element index " + std::to_string(i) + " out of range");
      b.set(i);
    }
    return CrispSet(std::move(u), std::move(b));
  }
  static CrispSet from_indices(UniversePtr u, std::initializer_list<std::size_t> indices) {
    return from_indices(std::move(u), std::span<const std::size_t>(indices.begin(), indices.size()));
  }
  /// Throws PreconditionViolated on an unknown label.
  static CrispSet from_labels(UniversePtr u, std::span<const std::string> labels) {
    Bits b(u->size());
    for (const auto& l : labels) {
      const auto i = u->index_of(l);
      if (!i) throw PreconditionViolated("unknown element '" + l + "'");
      b.set(*i);
    }
    return CrispSet(std::move(u), std::move(b));
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  const Bits& bits() const noexcept { return bits_; }
  std::size_t width() const noexcept { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t i) const { return bits_.test(i); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> m;
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) m.push_back(i);
    return m;
  }

  std::uint64_t mask() const {
    if (width() > 64) throw UniverseTooLarge("bitmask view needs at most 64 elements");
    std::uint64_t m = 0;
    for (auto i : members()) m |= std::uint64_t{1} << i;
    return m;
  }

  bool is_subset_of(const CrispSet& o) const {
    require_same_universe(universe_, o.universe_);
    return bits_.is_subset_of(o.bits_);
  }
  bool intersects(const CrispSet& o) const {
    require_same_universe(universe_, o.universe_);
    return bits_.intersects(o.bits_);
  }

  friend CrispSet operator|(const CrispSet& a, const CrispSet& b) {
    require_same_universe(a.universe_, b.universe_);
    return CrispSet(a.universe_, a.bits_ | b.bits_);
  }
  friend CrispSet operator&(const CrispSet& a, const CrispSet& b) {
    require_same_universe(a.universe_, b.universe_);
    return CrispSet(a.universe_, a.bits_ & b.bits_);
  }
  CrispSet complement() const { return CrispSet(universe_, ~bits_); }

  friend bool operator==(const CrispSet& a, const CrispSet& b) {
    return same_universe(a.universe_, b.universe_) && a.bits_ == b.bits_;
  }

  /// "{a,b}"; the empty set prints as "{}".
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (auto i : members()) {
      if (!first) s += ',';
      s += universe_->label(i);
      first = false;
    }
    return s + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const CrispSet& s) { return os << s.str(); }

private:
  UniversePtr universe_;
  Bits bits_;
};

/// Membership function over a finite universe.
class FuzzySet {
public:
  FuzzySet(UniversePtr u, std::vector<Degree> degrees) : universe_(std::move(u)), degrees_(std::move(degrees)) {
    if (degrees_.size() != universe_->size()) throw DimensionMismatch("fuzzy set length differs from universe size");
  }

  static FuzzySet constant(UniversePtr u, const Degree& d) {
    std::vector<Degree> v(u->size(), d);
    return FuzzySet(std::move(u), std::move(v));
  }

  static FuzzySet indicator(const CrispSet& s) {
    std::vector<Degree> v(s.width());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (s.contains(i)) v[i] = Degree::one();
    return FuzzySet(s.universe(), std::move(v));
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  const Degree& operator[](std::size_t i) const { return degrees_[i]; }
  const std::vector<Degree>& degrees() const noexcept { return degrees_; }

  /// Pointwise order.
  bool leq(const FuzzySet& o) const {
    require_same_universe(universe_, o.universe_);
    for (std::size_t i = 0; i < degrees_.size(); ++i)
      if (o.degrees_[i] < degrees_[i]) return false;
    return true;
  }

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return same_universe(a.universe_, b.universe_) && a.degrees_ == b.degrees_;
  }

  /// Space-separated canonical degrees, e.g. "1 1 1/2 0 0".
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) s += ' ';
      s += degrees_[i].str();
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const FuzzySet& f) { return os << '(' << f.str() << ')'; }

private:
  UniversePtr universe_;
  std::vector<Degree> degrees_;
};

enum class TNorm { minimum, product, lukasiewicz };

/// T(x,y) > 0 whenever x,y > 0.
constexpr bool is_positive(TNorm t) noexcept { return t != TNorm::lukasiewicz; }

constexpr std::string_view name_of(TNorm t) noexcept {
  switch (t) {
  case TNorm::minimum: return "min";
  case TNorm::product: return "product";
  case TNorm::lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

inline std::optional<TNorm> tnorm_from_name(std::string_view s) {
  if (s == "min" || s == "minimum") return TNorm::minimum;
  if (s == "product" || s == "prod") return TNorm::product;
  if (s == "lukasiewicz" || s == "luk") return TNorm::lukasiewicz;
  return std::nullopt;
}

inline Degree tnorm_eval(TNorm t, const Degree& x, const Degree& y) {
  switch (t) {
  case TNorm::minimum: return min(x, y);
  case TNorm::product: return product(x, y);
  case TNorm::lukasiewicz: return truncated_sum(x, y);
  }
  return Degree::zero();
}

/// {x | F(x) = 1}
inline CrispSet core_of(const FuzzySet& f) {
  CrispSet::Bits b(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) b[i] = f[i].is_one();
  return CrispSet(f.universe(), std::move(b));
}

/// {x | F(x) > 0}
inline CrispSet support_of(const FuzzySet& f) {
  CrispSet::Bits b(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) b[i] = !f[i].is_zero();
  return CrispSet(f.universe(), std::move(b));
}

} // namespace fuzzyrough

#endif // FUZZYROUGH_CORE_HPP
