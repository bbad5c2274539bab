#pragma once

// Free finite quotients π: X → Y = X/G at the level of NS and Knum.

#include <memory>
#include <vector>

#include "stabkit/chamber.hpp"
#include "stabkit/charges.hpp"
#include "stabkit/chern.hpp"

namespace stabkit {

struct QuotientDatum {
  Integer group_order;
  RatMatrix pullback_ns;     // P: ρ_X × ρ_Y
  RatMatrix pushforward_ns;  // F: ρ_Y × ρ_X
  std::shared_ptr<const SurfaceModel> cover;
  std::shared_ptr<const SurfaceModel> base;
  std::vector<RatMatrix> action_ns;  // generators of G acting on NS(X)
};

/// Validated quotient data. Construction checks, exactly:
///   F·P = |G|·I,  Pᵀ·G_X·P = |G|·G_Y,  Pᵀ·G_X = G_Y·F (projection formula),
///   every generator preserves G_X, fixes P's columns and permutes the cone
///   data up to positive scaling, and the common fixed space has rank ρ_Y.
class Quotient {
 public:
  explicit Quotient(QuotientDatum d);

  const QuotientDatum& datum() const { return d_; }
  const SurfaceModel& cover() const { return *d_.cover; }
  const SurfaceModel& base() const { return *d_.base; }
  const Integer& group_order() const { return d_.group_order; }

  /// Knum(Y) → Knum(X): diag(1, P, |G|).
  RatMatrix pullback_knum() const;
  /// Knum(X) → Knum(Y): diag(|G|, F, 1).
  RatMatrix pushforward_knum() const;

 private:
  QuotientDatum d_;
};

/// (ch0, P·ch1, |G|·ch2)
ChernCharacter pullback_chern(const Quotient& q, const ChernCharacter& v);
/// (|G|·ch0, F·ch1, ch2)
ChernCharacter pushforward_chern(const Quotient& q, const ChernCharacter& v);

/// Pulled-back stability parameters: (P·H, P·B, α, β). With these Z_X∘π* = |G|·Z_Y.
StabilityParams pullback_params(const Quotient& q, const StabilityParams& p);

/// Every generator g fixes H and B as functionals: gᵀG_X·H = G_X·H, same for B.
bool is_Z_invariant(const Quotient& q, const StabilityParams& p);

/// Z_X∘π* as a 2 × (ρ_Y+2) matrix of (re, im) rows. Rejects non-invariant Z.
RatMatrix induce_central_charge(const Quotient& q, const StabilityParams& p);

/// Z_X∘π*∘π_* for an arbitrary 2 × (ρ_X+2) functional.
RatMatrix double_induction(const Quotient& q, const RatMatrix& z_cover);

/// True when z (2 × (ρ_X+2)) is fixed by every generator.
bool is_invariant_functional(const Quotient& q, const RatMatrix& z_cover);

/// Recover (H, B, α, β) from a normalized (re, im) matrix: the ch2 column must
/// be (−1, 0). Throws InputError otherwise.
StabilityParams params_from_charge(const SurfaceModel& s, const RatMatrix& z);

struct GhatReport {
  bool pass = false;
  RatMatrix action_knum;            // action of a character χ on Knum(Y)
  ChernCharacter character_class;   // ch(L_χ)
  std::size_t verdicts_checked = 0;
  std::size_t verdicts_agreeing = 0;
};

/// Ĝ ⊂ Pic⁰(Y) acts on Knum(Y) through ch(L_χ) = (1, 0, 0), i.e. by the
/// identity. Verifies this model and that chamber verdicts of `samples`
/// parameter sets are unchanged after acting on their central charges.
GhatReport ghat_action_on_knum(const Quotient& q, const std::vector<StabilityParams>& samples);

}  // namespace stabkit
