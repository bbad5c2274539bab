#pragma once

// Exact rational scalars and the extended line ℚ ∪ {−∞, +∞}.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace stabkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (surrounding whitespace allowed). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& q);

/// Machine form used in CSV/JSON: always "p/q", including "n/1".
std::string to_pq(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Exact square root when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

/// Element of ℚ ∪ {−∞, +∞}.
class ExtRational {
 public:
  enum class Kind : std::uint8_t { neg_infinity, finite, pos_infinity };

  ExtRational() = default;
  ExtRational(const Rational& v) : kind_(Kind::finite), value_(v) {}  // NOLINT(implicit)
  ExtRational(long v) : kind_(Kind::finite), value_(v) {}             // NOLINT(implicit)

  static ExtRational neg_infinity() { return ExtRational(Kind::neg_infinity); }
  static ExtRational pos_infinity() { return ExtRational(Kind::pos_infinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_infinity() const { return kind_ == Kind::neg_infinity; }
  bool is_pos_infinity() const { return kind_ == Kind::pos_infinity; }

  /// Only meaningful when finite.
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite()) return std::strong_ordering::equal;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit ExtRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  Rational value_;
};

ExtRational max(const ExtRational& a, const ExtRational& b);
ExtRational min(const ExtRational& a, const ExtRational& b);

/// "-inf", "+inf" or "p/q".
std::string to_pq(const ExtRational& q);
std::string to_string(const ExtRational& q);
/// Accepts "-inf"/"+inf"/"inf" besides plain rationals.
ExtRational parse_ext_rational(std::string_view text);

/// Nearest double, for SVG coordinates only.
double to_double(const Rational& q);

std::ostream& operator<<(std::ostream& os, const ExtRational& q);

}  // namespace stabkit
