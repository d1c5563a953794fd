#ifndef FUZZYROUGH_DEGREE_HPP
#define FUZZYROUGH_DEGREE_HPP

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fuzzyrough/error.hpp"

namespace fuzzyrough {

/// A membership degree: an exact rational in the closed unit interval.
///
/// Every operation that can leave [0,1] is either unavailable or clamps by
/// definition (complement, min, max, product, truncated sum all stay inside).
/// Nothing is ever rounded.
class Degree {
public:
  Degree() = default; // zero

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(mpq_class(1)); }

  /// num/den, reduced. Throws DegreeOutOfRange outside [0,1] and
  /// ParseError on a zero denominator.
  static Degree ratio(long num, long den) {
    if (den == 0) throw ParseError("zero denominator");
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return checked(std::move(q), std::to_string(num) + "/" + std::to_string(den));
  }

  static Degree from_rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    const std::string shown = c.get_str();
    return checked(std::move(c), shown);
  }

  /// Accepts "0.5", "1", ".25", "1.000" or "3/10" (surrounding blanks are
  /// ignored). Decimals are converted exactly.
  static Degree parse(std::string_view text);

  /// Canonical reduced form: "0", "1", "1/2", "3/10".
  std::string str() const { return value_.get_str(); }

  const mpq_class& rational() const noexcept { return value_; }
  double approx() const { return value_.get_d(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return cmp(value_, 1) == 0; }

  Degree complement() const { return Degree(mpq_class(1 - value_)); }

  friend Degree min(const Degree& a, const Degree& b) { return b < a ? b : a; }
  friend Degree max(const Degree& a, const Degree& b) { return a < b ? b : a; }
  friend Degree product(const Degree& a, const Degree& b) { return Degree(mpq_class(a.value_ * b.value_)); }
  /// max(0, a + b - 1)
  friend Degree truncated_sum(const Degree& a, const Degree& b) {
    mpq_class s = a.value_ + b.value_ - 1;
    return sgn(s) < 0 ? Degree() : Degree(std::move(s));
  }

  friend bool operator==(const Degree& a, const Degree& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.str(); }

private:
  explicit Degree(mpq_class q) : value_(std::move(q)) {}

  static Degree checked(mpq_class q, const std::string& shown) {
    if (sgn(q) < 0 || cmp(q, 1) > 0) throw DegreeOutOfRange("degree " + shown + " is outside [0,1]");
    return Degree(std::move(q));
  }

  mpq_class value_{0};
};

inline Degree Degree::parse(std::string_view text) {
  std::size_t lo = 0;
  std::size_t hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  const std::string_view t = text.substr(lo, hi - lo);
  if (t.empty()) throw ParseError("empty degree", lo);

  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    const auto num = t.substr(0, slash);
    const auto den = t.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw ParseError("malformed rational degree '" + std::string(t) + "'", lo);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(t) + "'", lo + slash + 1);
    mpq_class q(n, d);
    q.canonicalize();
    return checked(std::move(q), std::string(t));
  }

  const auto dot = t.find('.');
  const auto whole = t.substr(0, dot);
  const auto frac = dot == std::string_view::npos ? std::string_view{} : t.substr(dot + 1);
  const bool ok = dot == std::string_view::npos ? digits(whole)
                                                 : (whole.empty() || digits(whole)) && (frac.empty() || digits(frac)) &&
                                                       !(whole.empty() && frac.empty());
  if (!ok) throw ParseError("malformed degree '" + std::string(t) + "'", lo);

  mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class q(num, den);
  q.canonicalize();
  return checked(std::move(q), std::string(t));
}

} // namespace fuzzyrough

template <>
struct std::hash<fuzzyrough::Degree> {
  std::size_t operator()(const fuzzyrough::Degree& d) const { return std::hash<std::string>{}(d.str()); }
};

#endif // FUZZYROUGH_DEGREE_HPP
