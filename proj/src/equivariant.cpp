#include "stabkit/equivariant.hpp"

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

bool is_positive_multiple_of_member(const DivisorClass& v, const std::vector<DivisorClass>& set) {
  for (const auto& m : set) {
    const auto basis = rank(RatMatrix::from_columns({v, m}));
    if (basis != 1) continue;
    // same line; check the direction
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(m[i]) != 0) return sgn(v[i]) == sgn(m[i]);
  }
  return false;
}

RatMatrix block_diag(const Rational& first, const RatMatrix& mid, const Rational& last) {
  RatMatrix m(mid.rows() + 2, mid.cols() + 2);
  m(0, 0) = first;
  for (std::size_t i = 0; i < mid.rows(); ++i)
    for (std::size_t j = 0; j < mid.cols(); ++j) m(i + 1, j + 1) = mid(i, j);
  m(mid.rows() + 1, mid.cols() + 1) = last;
  return m;
}

}  // namespace

Quotient::Quotient(QuotientDatum d) : d_(std::move(d)) {
  if (!d_.cover || !d_.base) throw InputError("quotient: cover and base surfaces are required");
  if (d_.group_order <= 0) throw InputError("quotient: group order must be positive");
  const std::size_t rx = d_.cover->rank();
  const std::size_t ry = d_.base->rank();
  const RatMatrix& p = d_.pullback_ns;
  const RatMatrix& f = d_.pushforward_ns;
  if (p.rows() != rx || p.cols() != ry) throw InputError("quotient: pullback_ns must be rho_X x rho_Y");
  if (f.rows() != ry || f.cols() != rx) throw InputError("quotient: pushforward_ns must be rho_Y x rho_X");
  const Rational g(d_.group_order);
  const RatMatrix& gx = d_.cover->gram();
  const RatMatrix& gy = d_.base->gram();
  if (f * p != g * RatMatrix::identity(ry))
    throw InputError("quotient: pushforward * pullback must equal |G| * identity");
  if (p.transpose() * gx * p != g * gy)
    throw InputError("quotient: pulled-back intersections must equal |G| times those on the base");
  if (p.transpose() * gx != gy * f)
    throw InputError("quotient: projection formula P^T G_X = G_Y F fails");
  std::vector<RatVector> rows;
  for (const auto& a : d_.action_ns) {
    if (a.rows() != rx || a.cols() != rx) throw InputError("quotient: action matrices must be rho_X x rho_X");
    if (a.transpose() * gx * a != gx) throw InputError("quotient: action does not preserve the intersection form");
    if (a * p != p) throw InputError("quotient: action does not fix pulled-back classes");
    for (const auto& c : d_.cover->nef_inequalities())
      if (!is_positive_multiple_of_member(a * c, d_.cover->nef_inequalities()))
        throw InputError("quotient: action does not permute the nef inequalities");
    for (const auto& e : d_.cover->effective_generators())
      if (!is_positive_multiple_of_member(a * e, d_.cover->effective_generators()))
        throw InputError("quotient: action does not permute the effective generators");
    const RatMatrix diff = a + Rational(-1) * RatMatrix::identity(rx);
    for (std::size_t i = 0; i < rx; ++i) rows.push_back(diff.row(i));
  }
  const std::size_t fixed = rows.empty() ? rx : rx - rank(RatMatrix(rows));
  if (fixed != ry) {
    throw InputError("quotient: invariant part of NS(X) has rank " + std::to_string(fixed) +
                     ", expected rho_Y = " + std::to_string(ry));
  }
}

RatMatrix Quotient::pullback_knum() const {
  return block_diag(1, d_.pullback_ns, Rational(d_.group_order));
}

RatMatrix Quotient::pushforward_knum() const {
  return block_diag(Rational(d_.group_order), d_.pushforward_ns, 1);
}

ChernCharacter pullback_chern(const Quotient& q, const ChernCharacter& v) {
  require_dimension(q.base(), v.ch1, "pullback_chern");
  return {v.ch0, q.datum().pullback_ns * v.ch1, Rational(q.group_order()) * v.ch2};
}

ChernCharacter pushforward_chern(const Quotient& q, const ChernCharacter& v) {
  require_dimension(q.cover(), v.ch1, "pushforward_chern");
  return {Rational(q.group_order()) * v.ch0, q.datum().pushforward_ns * v.ch1, v.ch2};
}

StabilityParams pullback_params(const Quotient& q, const StabilityParams& p) {
  require_dimension(q.base(), p.H, "H");
  require_dimension(q.base(), p.B, "B");
  return {q.datum().pullback_ns * p.H, q.datum().pullback_ns * p.B, p.alpha, p.beta};
}

bool is_Z_invariant(const Quotient& q, const StabilityParams& p) {
  require_dimension(q.cover(), p.H, "H");
  require_dimension(q.cover(), p.B, "B");
  const RatMatrix& gx = q.cover().gram();
  const RatVector gh = gx * p.H;
  const RatVector gb = gx * p.B;
  for (const auto& a : q.datum().action_ns) {
    const RatMatrix at = a.transpose();
    if (at * gh != gh || at * gb != gb) return false;
  }
  return true;
}

bool is_invariant_functional(const Quotient& q, const RatMatrix& z_cover) {
  const std::size_t n = q.cover().rank() + 2;
  if (z_cover.cols() != n) throw InputError("functional has the wrong number of columns");
  for (const auto& a : q.datum().action_ns) {
    const RatMatrix ak = block_diag(1, a, 1);
    if (z_cover * ak != z_cover) return false;
  }
  return true;
}

RatMatrix induce_central_charge(const Quotient& q, const StabilityParams& p) {
  if (!is_Z_invariant(q, p)) throw PreconditionError("central charge on the cover is not G-invariant");
  return central_charge_matrix(q.cover(), p) * q.pullback_knum();
}

RatMatrix double_induction(const Quotient& q, const RatMatrix& z_cover) {
  if (z_cover.cols() != q.cover().rank() + 2) throw InputError("functional has the wrong number of columns");
  return z_cover * q.pullback_knum() * q.pushforward_knum();
}

StabilityParams params_from_charge(const SurfaceModel& s, const RatMatrix& z) {
  const std::size_t rho = s.rank();
  if (z.rows() != 2 || z.cols() != rho + 2) throw InputError("central charge matrix must be 2 x (rho+2)");
  if (z(0, rho + 1) != -1 || sgn(z(1, rho + 1)) != 0)
    throw InputError("central charge is not normalized (Z(point) != -1)");
  RatVector gb(rho), gh(rho);
  for (std::size_t i = 0; i < rho; ++i) {
    gb[i] = z(0, i + 1);
    gh[i] = z(1, i + 1);
  }
  StabilityParams p;
  if (!solve(s.gram(), gh, p.H) || !solve(s.gram(), gb, p.B))
    throw InputError("intersection form is singular");
  const Rational h2 = intersect(s, p.H, p.H);
  if (sgn(h2) == 0) throw InputError("recovered H has H^2 = 0");
  p.alpha = z(0, 0) / h2;
  p.beta = -z(1, 0) / h2;
  return p;
}

GhatReport ghat_action_on_knum(const Quotient& q, const std::vector<StabilityParams>& samples) {
  const SurfaceModel& y = q.base();
  const std::size_t rho = y.rank();
  // χ ∈ Ĝ gives L_χ ∈ Pic⁰(Y): c1(L_χ) = 0 numerically, so ch(L_χ) = e^0.
  const DivisorClass c1(rho);
  GhatReport r;
  r.character_class = {1, c1, intersect(y, c1, c1) / 2};
  // v ↦ v·ch(L_χ) = (ch0, ch1 + ch0·c1, ch2 + c1·ch1 + ch0·c1²/2)
  r.action_knum = RatMatrix(rho + 2, rho + 2);
  for (std::size_t j = 0; j < rho + 2; ++j) {
    RatVector e(rho + 2);
    e[j] = 1;
    const auto img = twist(y, ChernCharacter::from_vector(e), scale(-1, c1)).to_vector();
    for (std::size_t i = 0; i < rho + 2; ++i) r.action_knum(i, j) = img[i];
  }
  const bool identity = r.action_knum == RatMatrix::identity(rho + 2) &&
                        r.character_class == ChernCharacter{1, c1, 0};
  for (const auto& p : samples) {
    const auto before = is_geometric(y, p);
    const auto after = is_geometric(y, params_from_charge(y, central_charge_matrix(y, p) * r.action_knum));
    ++r.verdicts_checked;
    if (before.inside == after.inside && before.blocking == after.blocking && before.margin == after.margin)
      ++r.verdicts_agreeing;
  }
  r.pass = identity && r.verdicts_agreeing == r.verdicts_checked;
  return r;
}

}  // namespace stabkit
