#include "stabkit/quadforms.hpp"

#include <optional>

#include "stabkit/errors.hpp"
#include "stabkit/lepotier.hpp"

namespace stabkit {

QuadForm::QuadForm(RatMatrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw InputError("quadratic form matrix must be symmetric");
}

namespace {

// ℓℓᵀ
RatMatrix outer(std::span<const Rational> l, std::span<const Rational> r) {
  RatMatrix m(l.size(), r.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = l[i] * r[j];
  return m;
}

// (p rᵀ + r pᵀ)/2
RatMatrix sym_outer(std::span<const Rational> p, std::span<const Rational> r) {
  RatMatrix a = outer(p, r);
  RatMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) m(i, j) = (a(i, j) + a(j, i)) / 2;
  return m;
}

// Coordinates (c0, ch1 ↦ ch1ᵀw, c2) as a linear functional on ℚ^{ρ+2}.
RatVector functional(const Rational& c0, std::span<const Rational> w, const Rational& c2) {
  RatVector f;
  f.reserve(w.size() + 2);
  f.push_back(c0);
  f.insert(f.end(), w.begin(), w.end());
  f.push_back(c2);
  return f;
}

struct Quadratic {
  Rational a, b, c;  // a·x² + b·x + c

  Rational operator()(const Rational& x) const { return (a * x + b) * x + c; }
  Quadratic operator-(const Quadratic& o) const { return {a - o.a, b - o.b, c - o.c}; }

  // Minimum over [lo, hi] (either end may be open to infinity); requires a > 0.
  Rational min_on(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    Rational x = -b / (2 * a);
    if (lo && x < *lo) x = *lo;
    if (hi && x > *hi) x = *hi;
    return (*this)(x);
  }
};

// (x − β₀)²/δ + α₀ − δ
Quadratic dominating_parabola(const Rational& alpha0, const Rational& beta0, const Rational& delta) {
  return {1 / delta, -2 * beta0 / delta, beta0 * beta0 / delta + alpha0 - delta};
}

Quadratic bogomolov_parabola(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b) {
  const Rational h2 = intersect(s, h, h);
  const Rational c = intersect(s, h, b) / h2;
  const Rational k = intersect(s, b, b) / (2 * h2);
  return {Rational(1, 2), -c, c * c / 2 - k};
}

// Sufficient, exact check of g ≥ Φ for a tabulated profile.
bool dominates(const Quadratic& g, const Quadratic& u, const PhiProfile& prof) {
  const Quadratic gu = g - u;
  if (sgn(gu.a) <= 0) return false;
  for (const auto& k : prof.points)
    if (ExtRational(g(k.x)) < k.value) return false;
  for (const auto& p : prof.pieces) {
    if (p.value.is_neg_infinity()) continue;
    const bool above_value = p.value.is_finite() && g.min_on(p.lo, p.hi) >= p.value.value();
    if (!above_value && sgn(gu.min_on(p.lo, p.hi)) < 0) return false;
  }
  return sgn(gu.min_on(std::nullopt, prof.points.front().x)) >= 0 &&
         sgn(gu.min_on(prof.points.back().x, std::nullopt)) >= 0;
}

// Smallest root of 2δ² − (2m + 4 + d²)δ + 4m, or a rational lower bound for it.
Rational smallest_admissible_delta(const Rational& m, const Rational& d) {
  const Rational s = 2 * m + 4 + d * d;
  const Rational disc = s * s - 32 * m;
  Rational root;
  if (exact_sqrt(disc, root)) return (s - root) / 4;
  auto h = [&](const Rational& x) -> Rational { return (2 * x - s) * x + 4 * m; };
  Rational lo = 0, hi = 2;  // h(0) = 4m > 0, h(2) = −2d² ≤ 0
  for (int i = 0; i < 200 && (sgn(lo) == 0 || hi - lo > lo / 1000); ++i) {
    const Rational mid = (lo + hi) / 2;
    if (sgn(h(mid)) > 0) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace

ConeConstant compute_C_H(const SurfaceModel& s, const DivisorClass& h, std::uint64_t face_budget) {
  require_ample(s, h);
  const auto& gens = s.effective_generators();
  const std::size_t n = gens.size();
  const std::size_t rho = s.rank();
  std::vector<RatVector> pts;
  for (const auto& g : gens) {
    const Rational hg = intersect(s, h, g);
    if (sgn(hg) <= 0) {
      throw PreconditionError("effective generator " + format_vector(g) +
                              " has H.D <= 0; the cone is not pointed with respect to H");
    }
    pts.push_back(scale(1 / hg, g));
  }

  ConeConstant cc;
  cc.value = 0;
  std::optional<ConeFace> best;
  auto consider = [&](std::vector<std::size_t> face, RatVector d) {
    const Rational ratio = -intersect(s, d, d);
    if (!best || ratio > best->ratio) best = ConeFace{std::move(face), std::move(d), ratio};
  };

  // Number of subsets of size ≤ ρ.
  Integer subsets = 0, binom = 1;
  for (std::size_t k = 1; k <= std::min(rho, n); ++k) {
    binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
    subsets += binom;
  }
  if (n >= 64 || subsets > face_budget) {
    for (std::size_t i = 0; i < n; ++i) consider({i}, pts[i]);
    cc.certified = false;
    cc.value = best->ratio > 0 ? Rational(2 * best->ratio) : Rational(0);
    cc.certificate.push_back(*best);
    return cc;
  }

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) face.push_back(i);
    if (face.size() > rho) continue;
    if (face.size() == 1) {
      consider(face, pts[face[0]]);
      continue;
    }
    const RatVector& p0 = pts[face[0]];
    std::vector<RatVector> cols;
    for (std::size_t j = 1; j < face.size(); ++j) cols.push_back(sub(pts[face[j]], p0));
    const RatMatrix e = RatMatrix::from_columns(cols);
    if (rank(e) != cols.size()) continue;
    // Stationary point of −D² on p0 + span(E): (EᵀGE)t = −EᵀGp0.
    const RatMatrix et = e.transpose();
    const RatMatrix lhs = et * s.gram() * e;
    const RatVector rhs = scale(-1, et * (s.gram() * p0));
    RatVector t;
    if (!solve(lhs, rhs, t)) continue;
    Rational lambda0 = 1;
    bool inside = true;
    for (const auto& x : t) {
      lambda0 -= x;
      if (sgn(x) < 0) inside = false;
    }
    if (!inside || sgn(lambda0) < 0) continue;
    consider(face, add(p0, e * t));
  }
  if (sgn(best->ratio) > 0) cc.value = best->ratio;
  cc.certificate.push_back(*best);
  return cc;
}

QuadForm build_qbg(const SurfaceModel& s) {
  const std::size_t rho = s.rank();
  RatMatrix m(rho + 2, rho + 2);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) m(i + 1, j + 1) = s.gram()(i, j);
  m(0, rho + 1) = -1;
  m(rho + 1, 0) = -1;
  return QuadForm(std::move(m));
}

QuadForm build_delta_form(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                          const Rational& c_h) {
  require_dimension(s, h, "H");
  require_dimension(s, b, "B");
  if (sgn(c_h) < 0) throw PreconditionError("cone constant must be nonnegative");
  const RatVector l = functional(-intersect(s, h, b), s.gram() * h, 0);  // H·ch1^B
  return build_qbg(s) + QuadForm(c_h * outer(l, l));
}

QuadForm build_q_delta(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                       const Rational& alpha0, const Rational& beta0, const Rational& delta) {
  require_dimension(s, h, "H");
  require_dimension(s, b, "B");
  if (sgn(delta) <= 0) throw PreconditionError("delta must be positive");
  const Rational h2 = intersect(s, h, h);
  const std::size_t rho = s.rank();
  const RatVector m = functional(-beta0 * h2, s.gram() * h, 0);               // H·ch1 − β₀H²ch0
  const RatVector p = functional(h2, RatVector(rho), 0);                      // H²ch0
  const RatVector r = functional(-(alpha0 - delta) * h2, scale(-1, s.gram() * b), 1);
  RatMatrix q = (1 / delta) * outer(m, m) + Rational(-1) * sym_outer(p, r);
  return QuadForm(std::move(q));
}

QuadForm build_q_combined(const SurfaceModel& s, const QuadForm& q_delta, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw PreconditionError("epsilon must be positive");
  return q_delta + epsilon * build_qbg(s);
}

Rational choose_delta(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                      const Rational& alpha0, const Rational& beta0) {
  const Rational u0 = upper_bound(s, h, b, beta0);
  const auto phi0 = phi(s, h, b, beta0);
  if (phi0 && ExtRational(alpha0) <= *phi0) {
    throw PreconditionError("alpha0 = " + to_string(alpha0) + " is not above Phi(beta0) = " +
                            to_string(*phi0));
  }
  if (alpha0 > u0) {
    // Φ ≤ U, so dominating U suffices; this reduces to a quadratic in δ.
    const Rational h2 = intersect(s, h, h);
    const Rational d = beta0 - intersect(s, h, b) / h2;
    return Rational(9, 10) * smallest_admissible_delta(alpha0 - u0, d);
  }
  if (!phi0) {
    throw CertificationError("Phi(beta0) is unknown for the " +
                             std::string(provider_kind(s.lp_provider())) + " provider");
  }
  const auto prof = phi_profile(s, h, b);
  if (!prof) {
    throw CertificationError(std::string("cannot certify delta against the ") +
                             provider_kind(s.lp_provider()) + " provider below the Bogomolov bound");
  }
  const Rational gap = phi0->is_finite() ? Rational(alpha0 - phi0->value()) : Rational(1);
  Rational delta = Rational(9, 10) * (gap < 1 ? gap : Rational(1));
  const Quadratic u = bogomolov_parabola(s, h, b);
  for (int i = 0; i <= 64; ++i) {
    if (dominates(dominating_parabola(alpha0, beta0, delta), u, *prof)) return delta;
    delta /= 2;
  }
  throw CertificationError("no certified delta after 64 halvings");
}

Rational choose_epsilon(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                        const Rational& alpha0, const Rational& beta0, const Rational& delta,
                        const Rational& c_h) {
  const QuadForm qd = build_q_delta(s, h, b, alpha0, beta0, delta);
  const auto kernel = kernel_basis(s, {h, b, alpha0, beta0});
  const Rational cap = c_h > 1 ? c_h : Rational(1);
  Rational eps = 1 / (delta * 2 * cap);
  for (int i = 0; i <= 64; ++i) {
    if (is_negative_definite_on(build_q_combined(s, qd, eps), kernel.vectors)) return eps;
    eps /= 2;
  }
  throw CertificationError("no epsilon makes Q negative definite on the kernel within 64 halvings");
}

RatMatrix restrict_form(const QuadForm& q, const std::vector<RatVector>& basis) {
  const RatMatrix b = RatMatrix::from_columns(basis);
  if (basis.empty()) return {};
  return b.transpose() * q.matrix() * b;
}

bool is_negative_definite_on(const QuadForm& q, const std::vector<RatVector>& basis) {
  if (basis.empty()) return true;
  for (const auto& v : basis)
    if (v.size() != q.dim()) throw InputError("basis vector length differs from the form");
  if (rank(RatMatrix::from_columns(basis)) != basis.size())
    throw InputError("basis is linearly dependent");
  const auto minors = leading_principal_minors(restrict_form(q, basis));
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != expected) return false;
  }
  return true;
}

RatVector transport_alpha(const SurfaceModel& s, const DivisorClass& h, const Rational& alpha0,
                          const Rational& alpha, std::span<const Rational> v) {
  if (v.size() != s.rank() + 2) throw InputError("transport_alpha: vector length differs from rho+2");
  if (alpha < alpha0) throw PreconditionError("transport_alpha needs alpha >= alpha0");
  RatVector out(v.begin(), v.end());
  out.back() += (alpha - alpha0) * intersect(s, h, h) * v.front();
  return out;
}

RatVector transport_a(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                      const Rational& a_squared, std::span<const Rational> v) {
  if (v.size() != s.rank() + 2) throw InputError("transport_a: vector length differs from rho+2");
  if (a_squared < 1) throw PreconditionError("transport_a needs a^2 >= 1");
  ChernCharacter t = twist(s, ChernCharacter::from_vector(v), b);
  t.ch2 += (a_squared - 1) * intersect(s, h, h) / 2 * t.ch0;
  return twist(s, t, scale(-1, b)).to_vector();
}

JHReport jh_form_inequality(const QuadForm& q, const RatMatrix& z, std::span<const Rational> u,
                            std::span<const Rational> w) {
  if (z.rows() != 2 || z.cols() != q.dim() || u.size() != q.dim() || w.size() != q.dim())
    throw InputError("jh_form_inequality: dimension mismatch");
  if (sgn(q(u)) < 0 || sgn(q(w)) < 0) throw PreconditionError("jh_form_inequality needs Q(u), Q(w) >= 0");
  const RatVector zu = z * u;
  const RatVector zw = z * w;
  if (is_zero(zw)) throw PreconditionError("jh_form_inequality needs Z(w) != 0");
  // Z(u) = λ Z(w), λ > 0
  const std::size_t piv = sgn(zw[0]) != 0 ? 0 : 1;
  const Rational lambda = zu[piv] / zw[piv];
  if (sgn(lambda) <= 0 || sub(zu, scale(lambda, zw)) != RatVector(2, 0))
    throw PreconditionError("jh_form_inequality needs Z(u) on the open ray of Z(w)");
  if (!is_negative_definite_on(q, nullspace(z)))
    throw PreconditionError("jh_form_inequality needs Q negative definite on ker Z");
  JHReport r;
  r.proportional = is_zero(sub(u, scale(lambda, w)));
  r.cross = 2 * q.polar(u, w);
  r.cross_positive = sgn(r.cross) > 0;
  r.q_sum_exceeds = q(add(u, w)) > q(u);
  return r;
}

}  // namespace stabkit
