#pragma once

// Normalized central charges Z_{H,B,α,β}, their kernels in Knum ⊗ ℚ and the
// change of coordinates to tilt parameters (a², B + bH).

#include <vector>

#include "stabkit/chern.hpp"
#include "stabkit/lattice.hpp"

namespace stabkit {

struct StabilityParams {
  DivisorClass H;
  DivisorClass B;
  Rational alpha;
  Rational beta;

  friend bool operator==(const StabilityParams&, const StabilityParams&) = default;
};

struct TiltParams {
  Rational a_squared;
  DivisorClass H;
  DivisorClass B_tilt;

  friend bool operator==(const TiltParams&, const TiltParams&) = default;
};

struct ComplexValue {
  Rational re;
  Rational im;

  friend bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

/// Z(v) = (α − iβ)H²ch0 + (B + iH)·ch1 − ch2, so Z(point) = −1.
ComplexValue central_charge(const SurfaceModel& s, const StabilityParams& p, const ChernCharacter& v);

/// The two linear functionals (re, im) as coefficient rows on (ch0, ch1, ch2).
RatMatrix central_charge_matrix(const SurfaceModel& s, const StabilityParams& p);

struct KernelBasis {
  std::vector<RatVector> vectors;  // in ℚ^{ρ+2}
  bool degenerate = false;         // re and im linearly dependent
};

KernelBasis kernel_basis(const SurfaceModel& s, const StabilityParams& p);

/// b = β − H·B/H², a² = 2α − b² + B²/H², B_tilt = B + bH.
/// Throws PreconditionError when a² ≤ 0.
TiltParams normalized_to_tilt(const SurfaceModel& s, const StabilityParams& p);

/// Inverse of normalized_to_tilt given the base B.
StabilityParams tilt_to_normalized(const SurfaceModel& s, const TiltParams& t,
                                   const DivisorClass& base_b);

/// Kernel of the tilt charge Z_{aH,B}: H·ch1^B = 0 and ch2^B = a²(H²/2)ch0^B,
/// expressed in untwisted coordinates.
KernelBasis tilt_kernel_basis(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                              const Rational& a_squared);

/// Parse "H;B;alpha;beta" with ',' separating vector coordinates.
StabilityParams parse_params(std::string_view text);
std::string format_params(const StabilityParams& p);

}  // namespace stabkit
