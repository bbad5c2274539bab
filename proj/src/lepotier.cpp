#include "stabkit/lepotier.hpp"

#include <algorithm>
#include <map>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

ExtRational scaled(const ExtRational& v, const Rational& s) {
  return v.is_finite() ? ExtRational(Rational(v.value() * s)) : v;
}

ExtRational abs_diff(const ExtRational& a, const ExtRational& b) {
  if (a.is_finite() && b.is_finite()) return Rational(abs(a.value() - b.value()));
  if (a == b) return Rational(0);
  return ExtRational::pos_infinity();
}

// λ > 0 with h = λ·base, if any.
std::optional<Rational> proportionality(const DivisorClass& h, const DivisorClass& base) {
  if (h.size() != base.size()) return std::nullopt;
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (sgn(base[i]) == 0) {
      if (sgn(h[i]) != 0) return std::nullopt;
      continue;
    }
    const Rational l = h[i] / base[i];
    if (lambda && *lambda != l) return std::nullopt;
    lambda = l;
  }
  if (!lambda || sgn(*lambda) <= 0) return std::nullopt;
  return lambda;
}

ExtRational interval_value(const Tabulated& t, std::size_t i) {
  const auto& a = t.knots[i].value;
  const auto& b = t.knots[i + 1].value;
  switch (t.rule) {
    case TabulationRule::left: return a;
    case TabulationRule::right: return b;
    case TabulationRule::upper_envelope: return max(a, b);
  }
  return max(a, b);
}

// Upper semicontinuous value at a knot: the knot itself or a neighbouring limit.
ExtRational point_value(const Tabulated& t, std::size_t i) {
  ExtRational v = t.knots[i].value;
  if (i > 0) v = max(v, interval_value(t, i - 1));
  if (i + 1 < t.knots.size()) v = max(v, interval_value(t, i));
  return v;
}

std::optional<ExtRational> tabulated_phi(const SurfaceModel& s, const Tabulated& t,
                                         const DivisorClass& h, const DivisorClass& b,
                                         const Rational& x) {
  if (b != t.B) return std::nullopt;
  const auto lambda = proportionality(h, t.H);
  if (!lambda) return std::nullopt;
  const Rational y = *lambda * x;
  if (y < t.knots.front().x || y > t.knots.back().x) return std::nullopt;
  auto it = std::lower_bound(t.knots.begin(), t.knots.end(), y,
                             [](const Knot& k, const Rational& v) { return k.x < v; });
  const auto i = static_cast<std::size_t>(it - t.knots.begin());
  const ExtRational raw = it->x == y ? point_value(t, i) : interval_value(t, i - 1);
  const ExtRational clamped = min(raw, upper_bound(s, t.H, t.B, y));
  return scaled(clamped, 1 / (*lambda * *lambda));
}

std::optional<PhiProfile> tabulated_profile(const SurfaceModel& s, const Tabulated& t,
                                            const DivisorClass& h, const DivisorClass& b) {
  if (b != t.B) return std::nullopt;
  const auto lambda = proportionality(h, t.H);
  if (!lambda) return std::nullopt;
  const Rational inv = 1 / *lambda;
  const Rational inv2 = inv * inv;
  PhiProfile p;
  for (std::size_t i = 0; i < t.knots.size(); ++i) {
    const Rational y = t.knots[i].x;
    p.points.push_back(
        {y * inv, scaled(min(point_value(t, i), upper_bound(s, t.H, t.B, y)), inv2)});
    if (i + 1 < t.knots.size())
      p.pieces.push_back({y * inv, t.knots[i + 1].x * inv, scaled(interval_value(t, i), inv2)});
  }
  return p;
}

}  // namespace

Rational upper_bound(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                     const Rational& x) {
  require_ample(s, h);
  require_dimension(s, b, "B");
  const Rational h2 = intersect(s, h, h);
  const Rational c = intersect(s, h, b) / h2;
  const Rational d = x - c;
  return (d * d - intersect(s, b, b) / h2) / 2;
}

std::optional<ExtRational> phi(const SurfaceModel& s, const DivisorClass& h,
                               const DivisorClass& b, const Rational& x) {
  const Rational u = upper_bound(s, h, b, x);
  struct Visitor {
    const SurfaceModel& s;
    const DivisorClass& h;
    const DivisorClass& b;
    const Rational& x;
    const Rational& u;
    std::optional<ExtRational> operator()(const QuadraticClosedForm&) const { return u; }
    std::optional<ExtRational> operator()(const Tabulated& t) const {
      return tabulated_phi(s, t, h, b, x);
    }
    std::optional<ExtRational> operator()(const QuotientTransfer& q) const {
      const auto& pb = q.pullback_ns;
      return phi(*q.cover, pb * h, pb * b, x);
    }
    std::optional<ExtRational> operator()(const EmpiricalEnvelope& e) const {
      return min(empirical_phi(s, h, b, x, e.bucket, e.bounds), u);
    }
  };
  return std::visit(Visitor{s, h, b, x, u}, s.lp_provider());
}

std::optional<PhiProfile> phi_profile(const SurfaceModel& s, const DivisorClass& h,
                                      const DivisorClass& b) {
  if (const auto* t = std::get_if<Tabulated>(&s.lp_provider()))
    return tabulated_profile(s, *t, h, b);
  if (const auto* q = std::get_if<QuotientTransfer>(&s.lp_provider()))
    return phi_profile(*q->cover, q->pullback_ns * h, q->pullback_ns * b);
  return std::nullopt;
}

ChernCharacter witness_character(const SurfaceModel& s, const DivisorClass& c) {
  require_dimension(s, c, "witness_character");
  if (s.albanese() != AlbaneseType::abelian)
    throw PreconditionError("witness characters r·e^C are only available on abelian surfaces");
  Integer r = 1;
  for (const auto& x : c) mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), x.get_den_mpz_t());
  const Rational half_c2 = intersect(s, c, c) / 2;
  const Rational need = Rational(r) * half_c2 * s.chtwo_denominator();
  r *= need.get_den();
  const Rational rq(r);
  return {rq, scale(rq, c), rq * half_c2};
}

std::vector<ChernCharacter> enumerate_witnesses(const SurfaceModel& s, const WitnessBounds& bounds) {
  if (bounds.max_denominator < 1) return {};
  const std::size_t rho = s.rank();
  std::uint64_t total = 0;
  for (long q = 1; q <= bounds.max_denominator; ++q) {
    const Integer lo = ceil(bounds.coord_min * q);
    const Integer hi = floor(bounds.coord_max * q);
    if (hi < lo) return {};
    const Integer per = hi - lo + 1;
    Integer n = 1;
    for (std::size_t i = 0; i < rho; ++i) n *= per;
    total += n.fits_ulong_p() ? n.get_ui() : bounds.cap + 1;
    if (total > bounds.cap)
      throw BudgetError("witness grid exceeds the cap of " + std::to_string(bounds.cap));
  }
  std::vector<ChernCharacter> out;
  for (long q = 1; q <= bounds.max_denominator; ++q) {
    const long lo = ceil(bounds.coord_min * q).get_si();
    const long hi = floor(bounds.coord_max * q).get_si();
    std::vector<long> num(rho, lo);
    while (true) {
      DivisorClass c(rho);
      Integer den = 1;
      for (std::size_t i = 0; i < rho; ++i) {
        c[i] = make_rational(num[i], q);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c[i].get_den_mpz_t());
      }
      if (den == q) out.push_back(witness_character(s, c));
      std::size_t i = rho;
      while (i > 0 && num[i - 1] == hi) num[--i] = lo;
      if (i == 0) break;
      ++num[i - 1];
    }
  }
  return out;
}

std::vector<ChernCharacter> enumerate_characters(const SurfaceModel& s,
                                                 const EnumerationBounds& bounds) {
  if (const auto* w = std::get_if<WitnessBounds>(&bounds)) return enumerate_witnesses(s, *w);
  return enumerate_integral_characters(s, std::get<BoxBounds>(bounds));
}

ExtRational empirical_phi(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                          const Rational& x, const Rational& bucket,
                          std::span<const ChernCharacter> characters) {
  require_ample(s, h);
  const Rational h2 = intersect(s, h, h);
  ExtRational best = ExtRational::neg_infinity();
  for (const auto& v : characters) {
    if (sgn(v.ch0) <= 0) continue;
    const Rational mu = intersect(s, h, v.ch1) / (h2 * v.ch0);
    if (abs(mu - x) > bucket) continue;
    best = max(best, Rational((v.ch2 - intersect(s, b, v.ch1)) / (h2 * v.ch0)));
  }
  return best;
}

ExtRational empirical_phi(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                          const Rational& x, const Rational& bucket,
                          const EnumerationBounds& bounds) {
  const auto chars = enumerate_characters(s, bounds);
  return empirical_phi(s, h, b, x, bucket, chars);
}

std::vector<Rational> rational_grid(const Rational& x0, const Rational& x1, const Rational& step) {
  if (sgn(step) <= 0) throw InputError("grid step must be positive");
  std::vector<Rational> g;
  for (Rational x = x0; x <= x1; x += step) g.push_back(x);
  return g;
}

std::vector<ContinuityEvent> continuity_report(const SurfaceModel& s, const DivisorClass& h,
                                               const DivisorClass& b, const Rational& x0,
                                               const Rational& x1, const Rational& step,
                                               const ContinuityOptions& options) {
  const auto grid = rational_grid(x0, x1, step);
  std::vector<ExtRational> values;
  std::vector<Rational> bounds;
  values.reserve(grid.size());
  for (const auto& x : grid) {
    const auto v = phi(s, h, b, x);
    if (!v) throw PreconditionError("Le Potier function unknown at x = " + to_string(x));
    values.push_back(*v);
    bounds.push_back(upper_bound(s, h, b, x));
  }
  Rational threshold;
  if (options.threshold) {
    threshold = *options.threshold;
  } else {
    Rational max_du = 0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
      max_du = std::max<Rational>(max_du, abs(bounds[i + 1] - bounds[i]));
    threshold = 2 * max_du + step;
  }
  std::map<Rational, ContinuityEvent> events;
  auto event_at = [&](const Rational& x) -> ContinuityEvent& {
    auto [it, fresh] = events.try_emplace(x);
    if (fresh) {
      it->second.x = x;
      it->second.jump_size = Rational(0);
    }
    return it->second;
  };
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const ExtRational jump = abs_diff(values[i + 1], values[i]);
    if (jump > ExtRational(threshold)) {
      auto& e = event_at(grid[i]);
      e.is_jump = true;
      e.jump_size = jump;
    }
  }
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const auto& a = values[i - 1];
    const auto& m = values[i];
    const auto& c = values[i + 1];
    if (!a.is_finite() || !m.is_finite() || !c.is_finite()) continue;
    if (sgn(a.value() - 2 * m.value() + c.value()) == 0) event_at(grid[i]).is_linear_segment = true;
  }
  std::vector<ContinuityEvent> out;
  out.reserve(events.size());
  for (auto& [x, e] : events) out.push_back(std::move(e));
  return out;
}

}  // namespace stabkit
