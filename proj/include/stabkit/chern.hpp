#pragma once

// Numerical Chern characters (ch0, ch1, ch2) ∈ ℤ ⊕ NS ⊕ (1/d)ℤ, twists, slopes
// and the Bogomolov–Gieseker form.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stabkit/lattice.hpp"
#include "stabkit/provider.hpp"

namespace stabkit {

struct ChernCharacter {
  Rational ch0;
  DivisorClass ch1;
  Rational ch2;

  /// (ch0, ch1..., ch2): coordinates in Knum ⊗ ℚ.
  RatVector to_vector() const;
  static ChernCharacter from_vector(std::span<const Rational> v);

  /// Class of a skyscraper sheaf on a surface of Picard rank rho.
  static ChernCharacter point(std::size_t rho);

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator*(const Rational& s, const ChernCharacter& a);

/// ch0 ∈ ℤ, ch1 ∈ ℤ^ρ, ch2 ∈ (1/chtwo_denominator)ℤ.
bool is_integral(const SurfaceModel& s, const ChernCharacter& v);

/// ch·e^{−B}.
ChernCharacter twist(const SurfaceModel& s, const ChernCharacter& v, const DivisorClass& b);

/// (H·ch1)/(H²·ch0); +∞ for ch0 = 0. Throws PreconditionError for ch0 < 0 or H not ample.
ExtRational mu_H(const SurfaceModel& s, const DivisorClass& h, const ChernCharacter& v);

/// (ch2 − B·ch1)/(H²·ch0). Throws PreconditionError for ch0 = 0 or H not ample.
Rational nu_HB(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
               const ChernCharacter& v);

/// ch1² − 2·ch0·ch2.
Rational q_bg_value(const SurfaceModel& s, const ChernCharacter& v);

/// Lexicographic, restartable enumeration of integral characters inside a box
/// with ch0 ≥ 1 and Q_BG ≥ 0. The box is addressed by (ch0, ch1) prefixes so
/// disjoint prefix ranges can be consumed by independent workers.
class CharacterEnumerator {
 public:
  /// Throws BudgetError if the raw box holds more than bounds.cap candidates.
  CharacterEnumerator(const SurfaceModel& s, BoxBounds bounds);

  /// Raw (unfiltered) candidate count of the box.
  std::uint64_t candidate_count() const { return candidates_; }
  std::uint64_t prefix_count() const { return prefixes_; }

  void for_each(const std::function<void(const ChernCharacter&)>& fn) const;
  void for_each_in_prefix_range(std::uint64_t begin, std::uint64_t end,
                                const std::function<void(const ChernCharacter&)>& fn) const;
  std::vector<ChernCharacter> collect() const;

 private:
  const SurfaceModel* surface_;
  BoxBounds bounds_;
  std::uint64_t prefixes_ = 0;
  std::uint64_t ch2_steps_ = 0;
  std::uint64_t candidates_ = 0;
};

std::vector<ChernCharacter> enumerate_integral_characters(const SurfaceModel& s,
                                                          const BoxBounds& bounds);

/// "(ch0, [a, b], ch2)" with p/q rationals.
std::string format_character(const ChernCharacter& v);
/// "r;a,b;s" as used by --class.
ChernCharacter parse_character(std::string_view text);
/// "a,b,..." → vector.
RatVector parse_vector(std::string_view text);
std::string format_vector(const RatVector& v);

}  // namespace stabkit
