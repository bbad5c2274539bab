#pragma once

// Support-property quadratic forms on Knum ⊗ ℚ = ℚ^{ρ+2} (coordinates ch0, ch1, ch2)
// and their exact certification.

#include <cstdint>
#include <vector>

#include "stabkit/charges.hpp"
#include "stabkit/chern.hpp"
#include "stabkit/lattice.hpp"

namespace stabkit {

class QuadForm {
 public:
  /// Throws InputError unless m is symmetric.
  explicit QuadForm(RatMatrix m);

  const RatMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

  Rational operator()(std::span<const Rational> v) const { return bilinear(m_, v, v); }
  Rational operator()(const ChernCharacter& v) const { return (*this)(v.to_vector()); }
  Rational polar(std::span<const Rational> u, std::span<const Rational> w) const {
    return stabkit::bilinear(m_, u, w);
  }

  friend QuadForm operator+(const QuadForm& a, const QuadForm& b) { return QuadForm(a.m_ + b.m_); }
  friend QuadForm operator*(const Rational& s, const QuadForm& a) { return QuadForm(s * a.m_); }
  friend bool operator==(const QuadForm&, const QuadForm&) = default;

 private:
  RatMatrix m_;
};

struct ConeFace {
  std::vector<std::size_t> generators;  // indices into effective_generators
  RatVector maximizer;                  // D with H·D = 1
  Rational ratio;                       // −D²/(H·D)²
};

struct ConeConstant {
  Rational value;
  std::vector<ConeFace> certificate;
  bool certified = true;
};

/// Least C ≥ 0 with C(H·D)² + D² ≥ 0 on the effective cone, by exact face
/// enumeration of {D ∈ Eff : H·D = 1}. Past `face_budget` subsets the value
/// falls back to twice the vertex maximum and is flagged non-certified.
ConeConstant compute_C_H(const SurfaceModel& s, const DivisorClass& h,
                         std::uint64_t face_budget = 1'000'000);

/// ch1² − 2ch0ch2.
QuadForm build_qbg(const SurfaceModel& s);

/// Q_BG + C·(H·ch1^B)².
QuadForm build_delta_form(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                          const Rational& c_h);

/// δ⁻¹(H·ch1 − β₀H²ch0)² − (H²ch0)(ch2 − B·ch1 − (α₀−δ)H²ch0).
QuadForm build_q_delta(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                       const Rational& alpha0, const Rational& beta0, const Rational& delta);

/// Q_δ + ε·Q_BG.
QuadForm build_q_combined(const SurfaceModel& s, const QuadForm& q_delta, const Rational& epsilon);

/// δ > 0 with (x−β₀)²/δ + α₀ − δ ≥ Φ(x) for all x, certified exactly.
/// PreconditionError if α₀ ≤ Φ(β₀); CertificationError if Φ cannot be bounded.
Rational choose_delta(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                      const Rational& alpha0, const Rational& beta0);

/// min(ε₁, ε₂): ε₁ = δ⁻¹/(2·max(C,1)), then halving until Q^{δ,ε} is negative
/// definite on ker Z_{H,B,α₀,β₀}. CertificationError after 64 halvings.
Rational choose_epsilon(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                        const Rational& alpha0, const Rational& beta0, const Rational& delta,
                        const Rational& c_h);

/// BᵀQB for the basis vectors as columns of B.
RatMatrix restrict_form(const QuadForm& q, const std::vector<RatVector>& basis);

/// Exact test through the leading principal minors of BᵀQB.
/// InputError on a linearly dependent basis.
bool is_negative_definite_on(const QuadForm& q, const std::vector<RatVector>& basis);

/// Ψ_α: ch2 += (α−α₀)H²ch0. Requires α ≥ α₀.
RatVector transport_alpha(const SurfaceModel& s, const DivisorClass& h, const Rational& alpha0,
                          const Rational& alpha, std::span<const Rational> v);

/// Ψ_a in B-twisted coordinates: ch2^B += (a²−1)(H²/2)ch0^B; returns untwisted
/// coordinates. Requires a² ≥ 1.
RatVector transport_a(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                      const Rational& a_squared, std::span<const Rational> v);

struct JHReport {
  bool proportional = false;   // u = λw
  bool cross_positive = false; // 2Q(u,w) > 0
  bool q_sum_exceeds = false;  // Q(u+w) > Q(u)
  Rational cross;              // 2Q(u,w)
};

/// The bilinear core of the Jordan–Hölder lemmas. `z` holds the (re, im)
/// functionals as rows. Throws PreconditionError when a hypothesis fails.
JHReport jh_form_inequality(const QuadForm& q, const RatMatrix& z, std::span<const Rational> u,
                            std::span<const Rational> w);

}  // namespace stabkit
