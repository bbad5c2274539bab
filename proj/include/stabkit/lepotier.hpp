#pragma once

// Twisted Le Potier function Φ_{X,H,B}: provider dispatch, the Bogomolov
// upper bound, witness characters and grid diagnostics.

#include <optional>
#include <vector>

#include "stabkit/chern.hpp"
#include "stabkit/lattice.hpp"

namespace stabkit {

/// ½[(x − H·B/H²)² − B²/H²].
Rational upper_bound(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                     const Rational& x);

/// Φ_{X,H,B}(x), or std::nullopt when the provider cannot certify a value
/// (tabulated gap, polarization not covered by the table).
std::optional<ExtRational> phi(const SurfaceModel& s, const DivisorClass& h,
                               const DivisorClass& b, const Rational& x);

/// r·e^C with the least r > 0 making the class integral. Abelian surfaces only.
ChernCharacter witness_character(const SurfaceModel& s, const DivisorClass& c);

/// All witnesses r·e^C for C on the grid described by `bounds`, ordered by
/// denominator then lexicographically.
std::vector<ChernCharacter> enumerate_witnesses(const SurfaceModel& s, const WitnessBounds& bounds);

/// Characters described by either bounds flavour.
std::vector<ChernCharacter> enumerate_characters(const SurfaceModel& s,
                                                 const EnumerationBounds& bounds);

/// max ν_{H,B}(v) over enumerated v with |μ_H(v) − x| ≤ bucket; −∞ when none.
ExtRational empirical_phi(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                          const Rational& x, const Rational& bucket,
                          const EnumerationBounds& bounds);
/// Same, over a precomputed character list.
ExtRational empirical_phi(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                          const Rational& x, const Rational& bucket,
                          std::span<const ChernCharacter> characters);

/// Piecewise description of a tabulated Φ in query coordinates. On each open
/// piece Φ = min(value, U); at each point Φ = value (already clamped). Outside
/// [points.front().x, points.back().x] only Φ ≤ U is known.
struct PhiPiece {
  Rational lo;
  Rational hi;
  ExtRational value;
};

struct PhiProfile {
  std::vector<Knot> points;
  std::vector<PhiPiece> pieces;
};

/// Available for Tabulated providers (directly or through quotient transfer)
/// at a polarization the table covers.
std::optional<PhiProfile> phi_profile(const SurfaceModel& s, const DivisorClass& h,
                                      const DivisorClass& b);

struct ContinuityEvent {
  Rational x;               // left end of the flagged step / centre of the flagged triple
  ExtRational jump_size;    // |Φ(x+step) − Φ(x)|, +∞ across a −∞ value; 0 if only linear
  bool is_jump = false;
  bool is_linear_segment = false;
};

struct ContinuityOptions {
  /// Jump threshold; default 2·max|ΔU| + step over the scanned grid.
  std::optional<Rational> threshold;
};

/// Grid scan of Φ over [x0, x1]. Throws PreconditionError if Φ is unknown at a grid point.
std::vector<ContinuityEvent> continuity_report(const SurfaceModel& s, const DivisorClass& h,
                                               const DivisorClass& b, const Rational& x0,
                                               const Rational& x1, const Rational& step,
                                               const ContinuityOptions& options = {});

/// Grid x0, x0+step, ..., ≤ x1.
std::vector<Rational> rational_grid(const Rational& x0, const Rational& x1, const Rational& step);

}  // namespace stabkit
