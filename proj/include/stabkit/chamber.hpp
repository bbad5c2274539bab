#pragma once

// The geometric chamber α > Φ_{X,H,B}(β), the numerical torsion pair, and the
// empirical wall envelope of the point class.

#include <cstdint>
#include <optional>
#include <vector>

#include "stabkit/charges.hpp"
#include "stabkit/lepotier.hpp"

namespace stabkit {

enum class Blocking : std::uint8_t { none, ample_failure, boundary, below_phi, provider_unknown };
const char* to_string(Blocking b);

struct ChamberVerdict {
  bool inside = false;
  std::optional<ExtRational> margin;  // α − Φ(β); absent when H is not ample or Φ is unknown
  std::optional<ExtRational> phi;     // Φ(β) when known
  Blocking blocking = Blocking::none;
};

/// inside ⇔ H ample ∧ α > Φ(β). An unknown Φ is reported, never guessed.
ChamberVerdict is_geometric(const SurfaceModel& s, const StabilityParams& p);

enum class HeartSide : std::uint8_t { torsion_T, free_T, free_F, not_applicable };
const char* to_string(HeartSide h);

/// ch0 = 0 → torsion_T; ch0 > 0 → free_T if Im Z > 0, else free_F. The zero
/// class is not_applicable. Throws PreconditionError for ch0 < 0.
HeartSide classify_heart_side(const SurfaceModel& s, const DivisorClass& h, const Rational& beta,
                              const ChernCharacter& v);

struct WallSegment {
  ChernCharacter cls;
  Rational beta;       // μ_H(cls)
  Rational alpha_max;  // ν_{H,B}(cls)
};

/// One segment per enumerated class with ch0 ≥ 1 and Q_BG ≥ 0, sorted by β
/// then α_max descending (ties by class).
std::vector<WallSegment> wall_envelope(const SurfaceModel& s, const DivisorClass& h,
                                       const DivisorClass& b, const EnumerationBounds& bounds);

/// Largest α_max among segments whose β lies within `bucket` of `beta`.
std::optional<Rational> envelope_at(std::span<const WallSegment> walls, const Rational& beta,
                                    const Rational& bucket = 0);

struct SweepRow {
  Rational beta;
  std::optional<ExtRational> phi;
  Rational upper_bound;
  std::optional<Rational> envelope;
  Rational nef_margin;
};

/// Rows for β on the grid [beta0, beta1] with the given step. `walls` may be
/// empty, in which case the envelope column is absent. Work is split across
/// `jobs` threads; rows come back in grid order regardless.
std::vector<SweepRow> boundary_sweep(const SurfaceModel& s, const DivisorClass& h,
                                     const DivisorClass& b, const Rational& beta0,
                                     const Rational& beta1, const Rational& step,
                                     std::span<const WallSegment> walls = {},
                                     const Rational& bucket = 0, unsigned jobs = 1);

}  // namespace stabkit
