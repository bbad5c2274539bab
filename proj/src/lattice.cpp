#include "stabkit/lattice.hpp"

#include <string>

#include "stabkit/errors.hpp"

namespace stabkit {

const char* provider_kind(const LePotierProvider& p) {
  struct Visitor {
    const char* operator()(const QuadraticClosedForm&) const { return "quadratic_closed_form"; }
    const char* operator()(const Tabulated&) const { return "tabulated"; }
    const char* operator()(const QuotientTransfer&) const { return "quotient_transfer"; }
    const char* operator()(const EmpiricalEnvelope&) const { return "empirical_envelope"; }
  };
  return std::visit(Visitor{}, p);
}

const char* to_string(AlbaneseType a) {
  switch (a) {
    case AlbaneseType::unspecified: return "unspecified";
    case AlbaneseType::abelian: return "abelian";
    case AlbaneseType::finite: return "finite";
    case AlbaneseType::free_quotient_of_finite: return "free_quotient_of_finite";
  }
  return "unspecified";
}

AlbaneseType parse_albanese_type(const std::string& s) {
  if (s == "unspecified") return AlbaneseType::unspecified;
  if (s == "abelian") return AlbaneseType::abelian;
  if (s == "finite") return AlbaneseType::finite;
  if (s == "free_quotient_of_finite") return AlbaneseType::free_quotient_of_finite;
  throw InputError("unknown albanese type '" + s + "'");
}

namespace {

void check_vectors(const std::vector<DivisorClass>& vs, std::size_t rank, const char* what) {
  if (vs.empty()) throw InputError(std::string(what) + " must be nonempty");
  for (const auto& v : vs) {
    if (v.size() != rank) throw InputError(std::string(what) + ": vector length differs from rank");
    if (is_zero(v)) throw InputError(std::string(what) + ": zero vector");
  }
}

void check_provider(const SurfaceData& d) {
  if (std::holds_alternative<QuadraticClosedForm>(d.lp_provider) &&
      d.albanese == AlbaneseType::unspecified) {
    throw InputError("quadratic_closed_form provider needs an abelian, finite-Albanese or "
                     "free-quotient-of-finite-Albanese surface");
  }
  if (const auto* t = std::get_if<Tabulated>(&d.lp_provider)) {
    if (t->H.size() != d.rank || t->B.size() != d.rank)
      throw InputError("tabulated provider: H/B length differs from rank");
    if (t->knots.empty()) throw InputError("tabulated provider: no knots");
    for (std::size_t i = 1; i < t->knots.size(); ++i)
      if (!(t->knots[i - 1].x < t->knots[i].x))
        throw InputError("tabulated provider: knots must be strictly increasing in x");
    for (const auto& k : t->knots)
      if (k.value.is_pos_infinity()) throw InputError("tabulated provider: +inf value");
  }
  if (const auto* q = std::get_if<QuotientTransfer>(&d.lp_provider)) {
    if (!q->cover) throw InputError("quotient_transfer provider: missing cover");
    if (q->group_order <= 0) throw InputError("quotient_transfer provider: group order must be positive");
    if (q->pullback_ns.rows() != q->cover->rank() || q->pullback_ns.cols() != d.rank)
      throw InputError("quotient_transfer provider: pullback must be rho_cover x rho");
  }
  if (const auto* e = std::get_if<EmpiricalEnvelope>(&d.lp_provider)) {
    if (sgn(e->bucket) < 0) throw InputError("empirical_envelope provider: negative bucket");
  }
}

}  // namespace

SurfaceModel::SurfaceModel(SurfaceData data) : d_(std::move(data)) {
  if (d_.rank == 0) throw InputError("rank must be positive");
  if (d_.gram.rows() != d_.rank || d_.gram.cols() != d_.rank)
    throw InputError("gram must be rank x rank");
  if (!d_.gram.is_symmetric()) throw InputError("gram must be symmetric");
  const Inertia in = inertia(d_.gram);
  if (in.positive != 1 || in.negative != d_.rank - 1 || in.zero != 0) {
    throw InputError("Hodge index violated: signature must be (1,rho-1), got (" +
                     std::to_string(in.positive) + "," + std::to_string(in.negative) +
                     ") with " + std::to_string(in.zero) + " zero eigenvalues");
  }
  check_vectors(d_.nef_inequalities, d_.rank, "nef_inequalities");
  check_vectors(d_.effective_generators, d_.rank, "effective_generators");
  if (d_.chtwo_denominator <= 0) throw InputError("chtwo_denominator must be positive");
  check_provider(d_);
}

void require_dimension(const SurfaceModel& s, const DivisorClass& d, const char* what) {
  if (d.size() != s.rank()) {
    throw InputError(std::string(what) + ": expected " + std::to_string(s.rank()) +
                     " coordinates, got " + std::to_string(d.size()));
  }
}

Rational intersect(const SurfaceModel& s, const DivisorClass& d1, const DivisorClass& d2) {
  require_dimension(s, d1, "intersect");
  require_dimension(s, d2, "intersect");
  return bilinear(s.gram(), d1, d2);
}

bool is_ample(const SurfaceModel& s, const DivisorClass& h) {
  if (h.size() != s.rank()) return false;
  for (const auto& c : s.nef_inequalities()) {
    if (sgn(intersect(s, h, c)) <= 0) return false;
  }
  return sgn(intersect(s, h, h)) > 0;
}

Rational nef_margin(const SurfaceModel& s, const DivisorClass& h) {
  require_dimension(s, h, "nef_margin");
  Rational m = intersect(s, h, s.nef_inequalities().front());
  for (const auto& c : s.nef_inequalities()) {
    Rational v = intersect(s, h, c);
    if (v < m) m = v;
  }
  return m;
}

void require_ample(const SurfaceModel& s, const DivisorClass& h) {
  require_dimension(s, h, "polarization");
  if (!is_ample(s, h)) throw PreconditionError("H is not ample on " + s.name());
}

Rational hodge_index_defect(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& c) {
  require_ample(s, h);
  const Rational hc = intersect(s, h, c);
  return hc * hc - intersect(s, h, h) * intersect(s, c, c);
}

}  // namespace stabkit
