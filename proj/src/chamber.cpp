#include "stabkit/chamber.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "stabkit/errors.hpp"

namespace stabkit {

const char* to_string(Blocking b) {
  switch (b) {
    case Blocking::none: return "none";
    case Blocking::ample_failure: return "ample_failure";
    case Blocking::boundary: return "boundary";
    case Blocking::below_phi: return "below_phi";
    case Blocking::provider_unknown: return "provider_unknown";
  }
  return "none";
}

const char* to_string(HeartSide h) {
  switch (h) {
    case HeartSide::torsion_T: return "torsion_T";
    case HeartSide::free_T: return "free_T";
    case HeartSide::free_F: return "free_F";
    case HeartSide::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

ChamberVerdict is_geometric(const SurfaceModel& s, const StabilityParams& p) {
  require_dimension(s, p.H, "H");
  require_dimension(s, p.B, "B");
  ChamberVerdict v;
  if (!is_ample(s, p.H)) {
    v.blocking = Blocking::ample_failure;
    return v;
  }
  v.phi = phi(s, p.H, p.B, p.beta);
  if (!v.phi) {
    v.blocking = Blocking::provider_unknown;
    return v;
  }
  v.margin = v.phi->is_finite() ? ExtRational(Rational(p.alpha - v.phi->value()))
                                : ExtRational::pos_infinity();
  const int side = v.phi->is_finite() ? sgn(p.alpha - v.phi->value()) : 1;
  v.inside = side > 0;
  v.blocking = side > 0 ? Blocking::none : (side == 0 ? Blocking::boundary : Blocking::below_phi);
  return v;
}

HeartSide classify_heart_side(const SurfaceModel& s, const DivisorClass& h, const Rational& beta,
                              const ChernCharacter& v) {
  require_ample(s, h);
  require_dimension(s, v.ch1, "class");
  if (sgn(v.ch0) < 0) throw PreconditionError("classify_heart_side: ch0 < 0");
  if (sgn(v.ch0) == 0) {
    if (is_zero(v.ch1) && sgn(v.ch2) == 0) return HeartSide::not_applicable;
    return HeartSide::torsion_T;
  }
  const Rational im = intersect(s, h, v.ch1) - beta * intersect(s, h, h) * v.ch0;
  return sgn(im) > 0 ? HeartSide::free_T : HeartSide::free_F;
}

std::vector<WallSegment> wall_envelope(const SurfaceModel& s, const DivisorClass& h,
                                       const DivisorClass& b, const EnumerationBounds& bounds) {
  require_ample(s, h);
  std::vector<WallSegment> out;
  for (auto& v : enumerate_characters(s, bounds)) {
    if (sgn(v.ch0) < 1 || sgn(q_bg_value(s, v)) < 0) continue;
    const Rational beta = mu_H(s, h, v).value();
    const Rational alpha = nu_HB(s, h, b, v);
    out.push_back({std::move(v), beta, alpha});
  }
  std::sort(out.begin(), out.end(), [](const WallSegment& x, const WallSegment& y) {
    if (x.beta != y.beta) return x.beta < y.beta;
    if (x.alpha_max != y.alpha_max) return x.alpha_max > y.alpha_max;
    return x.cls.to_vector() < y.cls.to_vector();
  });
  return out;
}

std::optional<Rational> envelope_at(std::span<const WallSegment> walls, const Rational& beta,
                                    const Rational& bucket) {
  const Rational lo = beta - bucket;
  auto it = std::lower_bound(walls.begin(), walls.end(), lo,
                             [](const WallSegment& w, const Rational& x) { return w.beta < x; });
  std::optional<Rational> best;
  for (; it != walls.end() && it->beta <= beta + bucket; ++it)
    if (!best || it->alpha_max > *best) best = it->alpha_max;
  return best;
}

std::vector<SweepRow> boundary_sweep(const SurfaceModel& s, const DivisorClass& h,
                                     const DivisorClass& b, const Rational& beta0,
                                     const Rational& beta1, const Rational& step,
                                     std::span<const WallSegment> walls, const Rational& bucket,
                                     unsigned jobs) {
  require_ample(s, h);
  const auto grid = rational_grid(beta0, beta1, step);
  const Rational margin = nef_margin(s, h);
  std::vector<SweepRow> rows(grid.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      rows[i] = {grid[i], phi(s, h, b, grid[i]), upper_bound(s, h, b, grid[i]),
                 walls.empty() ? std::nullopt : envelope_at(walls, grid[i], bucket), margin};
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
  if (jobs <= 1) {
    work(0, grid.size());
    return rows;
  }
  const std::size_t chunk = (grid.size() + jobs - 1) / jobs;
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> pool;
    for (std::size_t start = 0, k = 0; start < grid.size(); start += chunk, ++k) {
      pool.emplace_back([&, start, k] {
        try {
          work(start, std::min(grid.size(), start + chunk));
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace stabkit
