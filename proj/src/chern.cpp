#include "stabkit/chern.hpp"

#include <limits>
#include <sstream>

#include "stabkit/errors.hpp"

namespace stabkit {

RatVector ChernCharacter::to_vector() const {
  RatVector v;
  v.reserve(ch1.size() + 2);
  v.push_back(ch0);
  v.insert(v.end(), ch1.begin(), ch1.end());
  v.push_back(ch2);
  return v;
}

ChernCharacter ChernCharacter::from_vector(std::span<const Rational> v) {
  if (v.size() < 2) throw InputError("Knum vector needs at least two coordinates");
  return {v.front(), DivisorClass(v.begin() + 1, v.end() - 1), v.back()};
}

ChernCharacter ChernCharacter::point(std::size_t rho) { return {0, DivisorClass(rho), 1}; }

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
  return {a.ch0 + b.ch0, add(a.ch1, b.ch1), a.ch2 + b.ch2};
}

ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
  return {a.ch0 - b.ch0, sub(a.ch1, b.ch1), a.ch2 - b.ch2};
}

ChernCharacter operator*(const Rational& s, const ChernCharacter& a) {
  return {s * a.ch0, scale(s, a.ch1), s * a.ch2};
}

bool is_integral(const SurfaceModel& s, const ChernCharacter& v) {
  if (v.ch1.size() != s.rank()) return false;
  if (v.ch0.get_den() != 1) return false;
  for (const auto& c : v.ch1)
    if (c.get_den() != 1) return false;
  const Rational scaled = v.ch2 * s.chtwo_denominator();
  return scaled.get_den() == 1;
}

ChernCharacter twist(const SurfaceModel& s, const ChernCharacter& v, const DivisorClass& b) {
  require_dimension(s, v.ch1, "twist");
  require_dimension(s, b, "twist");
  ChernCharacter t;
  t.ch0 = v.ch0;
  t.ch1 = sub(v.ch1, scale(v.ch0, b));
  t.ch2 = v.ch2 - intersect(s, b, v.ch1) + Rational(1, 2) * intersect(s, b, b) * v.ch0;
  return t;
}

ExtRational mu_H(const SurfaceModel& s, const DivisorClass& h, const ChernCharacter& v) {
  require_ample(s, h);
  require_dimension(s, v.ch1, "mu_H");
  if (sgn(v.ch0) < 0) throw PreconditionError("mu_H: ch0 < 0 is not a sheaf class");
  if (sgn(v.ch0) == 0) return ExtRational::pos_infinity();
  return Rational(intersect(s, h, v.ch1) / (intersect(s, h, h) * v.ch0));
}

Rational nu_HB(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
               const ChernCharacter& v) {
  require_ample(s, h);
  require_dimension(s, v.ch1, "nu_HB");
  if (sgn(v.ch0) == 0) throw PreconditionError("nu_HB: ch0 = 0");
  return (v.ch2 - intersect(s, b, v.ch1)) / (intersect(s, h, h) * v.ch0);
}

Rational q_bg_value(const SurfaceModel& s, const ChernCharacter& v) {
  return intersect(s, v.ch1, v.ch1) - 2 * v.ch0 * v.ch2;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t span_len(long lo, long hi) {
  return hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo) + 1;
}

}  // namespace

CharacterEnumerator::CharacterEnumerator(const SurfaceModel& s, BoxBounds bounds)
    : surface_(&s), bounds_(std::move(bounds)) {
  if (bounds_.c1_box.size() != s.rank())
    throw InputError("enumeration box: c1_box needs one interval per NS coordinate");
  prefixes_ = bounds_.r_max >= 1 ? static_cast<std::uint64_t>(bounds_.r_max) : 0;
  for (const auto& [lo, hi] : bounds_.c1_box) prefixes_ = saturating_mul(prefixes_, span_len(lo, hi));
  const long d = s.chtwo_denominator();
  const Integer k_lo = ceil(bounds_.ch2_min * d);
  const Integer k_hi = floor(bounds_.ch2_max * d);
  if (k_hi >= k_lo) {
    const Integer n = k_hi - k_lo + 1;
    ch2_steps_ = n.fits_ulong_p() ? n.get_ui() : std::numeric_limits<std::uint64_t>::max();
  }
  candidates_ = saturating_mul(prefixes_, ch2_steps_);
  if (candidates_ > bounds_.cap) {
    throw BudgetError("enumeration box holds " + std::to_string(candidates_) +
                      " candidates, over the cap of " + std::to_string(bounds_.cap));
  }
}

void CharacterEnumerator::for_each_in_prefix_range(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(const ChernCharacter&)>& fn) const {
  if (ch2_steps_ == 0) return;
  if (end > prefixes_) end = prefixes_;
  const std::size_t rho = bounds_.c1_box.size();
  const long d = surface_->chtwo_denominator();
  const Integer k_lo = ceil(bounds_.ch2_min * d);
  const Integer k_hi = floor(bounds_.ch2_max * d);
  ChernCharacter v{0, DivisorClass(rho), 0};
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    // Mixed-radix decode, last c1 coordinate fastest.
    std::uint64_t rest = idx;
    for (std::size_t i = rho; i-- > 0;) {
      const auto [lo, hi] = bounds_.c1_box[i];
      const std::uint64_t len = span_len(lo, hi);
      v.ch1[i] = lo + static_cast<long>(rest % len);
      rest /= len;
    }
    v.ch0 = static_cast<long>(rest) + 1;
    // Q_BG ≥ 0  ⇔  ch2 ≤ ch1²/(2·ch0).
    const Rational top = intersect(*surface_, v.ch1, v.ch1) / (2 * v.ch0);
    Integer k_top = floor(top * d);
    if (k_top > k_hi) k_top = k_hi;
    for (Integer k = k_lo; k <= k_top; ++k) {
      v.ch2 = Rational(k, d);
      v.ch2.canonicalize();
      fn(v);
    }
  }
}

void CharacterEnumerator::for_each(const std::function<void(const ChernCharacter&)>& fn) const {
  for_each_in_prefix_range(0, prefixes_, fn);
}

std::vector<ChernCharacter> CharacterEnumerator::collect() const {
  std::vector<ChernCharacter> out;
  for_each([&](const ChernCharacter& v) { out.push_back(v); });
  return out;
}

std::vector<ChernCharacter> enumerate_integral_characters(const SurfaceModel& s,
                                                          const BoxBounds& bounds) {
  return CharacterEnumerator(s, bounds).collect();
}

std::string format_vector(const RatVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

std::string format_character(const ChernCharacter& v) {
  return "(" + to_string(v.ch0) + ", " + format_vector(v.ch1) + ", " + to_string(v.ch2) + ")";
}

RatVector parse_vector(std::string_view text) {
  RatVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ChernCharacter parse_character(std::string_view text) {
  const auto a = text.find(';');
  const auto b = a == std::string_view::npos ? a : text.find(';', a + 1);
  if (a == std::string_view::npos || b == std::string_view::npos ||
      text.find(';', b + 1) != std::string_view::npos) {
    throw InputError("class must look like \"r;a,b;s\", got '" + std::string(text) + "'");
  }
  return {parse_rational(text.substr(0, a)), parse_vector(text.substr(a + 1, b - a - 1)),
          parse_rational(text.substr(b + 1))};
}

}  // namespace stabkit
