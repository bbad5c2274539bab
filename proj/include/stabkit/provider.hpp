#pragma once

// Le Potier function providers attached to a surface. A provider answers
// Φ_{X,H,B}(x) for a fixed surface; the evaluation itself lives in lepotier.hpp.

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "stabkit/linalg.hpp"
#include "stabkit/rational.hpp"

namespace stabkit {

class SurfaceModel;

/// Integral box for the character enumerator: 1 ≤ ch0 ≤ r_max, ch1 coordinates
/// in per-coordinate integer intervals, ch2 in [ch2_min, ch2_max] on the
/// (1/chtwo_denominator)ℤ grid.
struct BoxBounds {
  long r_max = 0;
  std::vector<std::pair<long, long>> c1_box;
  Rational ch2_min;
  Rational ch2_max;
  std::uint64_t cap = 10'000'000;
};

/// Semi-homogeneous witnesses r·e^C for C ∈ (1/q)ℤ^ρ, q ≤ max_denominator,
/// every coordinate of C in [coord_min, coord_max]. Abelian surfaces only.
struct WitnessBounds {
  long max_denominator = 1;
  Rational coord_min;
  Rational coord_max;
  std::uint64_t cap = 10'000'000;
};

using EnumerationBounds = std::variant<BoxBounds, WitnessBounds>;

/// Φ(x) = ½[(x − H·B/H²)² − B²/H²].
struct QuadraticClosedForm {};

enum class TabulationRule : std::uint8_t {
  left,            // value of the knot at or left of x
  right,           // value of the knot at or right of x
  upper_envelope,  // max of the two bracketing knots
};

struct Knot {
  Rational x;
  ExtRational value;
};

/// Φ_{X,H,B} tabulated at a fixed (H, B). Queries at λ·H (λ > 0 rational) are
/// answered through Φ_{λH,B}(x) = Φ_{H,B}(λx)/λ²; other polarizations and any
/// x outside the knot range are unknown.
struct Tabulated {
  RatVector H;
  RatVector B;
  std::vector<Knot> knots;  // strictly increasing x
  TabulationRule rule = TabulationRule::upper_envelope;
};

/// Φ_Y(H, B) = Φ_X(P·H, P·B) along a free quotient X → Y.
struct QuotientTransfer {
  std::shared_ptr<const SurfaceModel> cover;
  Integer group_order;
  RatMatrix pullback_ns;  // ρ_X × ρ_Y
};

/// Heuristic: sup of ν over enumerated characters whose slope lies within
/// `bucket` of x. Certified only on abelian surfaces.
struct EmpiricalEnvelope {
  EnumerationBounds bounds;
  Rational bucket;
};

using LePotierProvider =
    std::variant<QuadraticClosedForm, Tabulated, QuotientTransfer, EmpiricalEnvelope>;

const char* provider_kind(const LePotierProvider& p);

}  // namespace stabkit
