#include "stabkit/charges.hpp"

#include "stabkit/errors.hpp"

namespace stabkit {

ComplexValue central_charge(const SurfaceModel& s, const StabilityParams& p, const ChernCharacter& v) {
  require_dimension(s, v.ch1, "central_charge");
  const Rational h2 = intersect(s, p.H, p.H);
  return {p.alpha * h2 * v.ch0 + intersect(s, p.B, v.ch1) - v.ch2,
          intersect(s, p.H, v.ch1) - p.beta * h2 * v.ch0};
}

RatMatrix central_charge_matrix(const SurfaceModel& s, const StabilityParams& p) {
  require_dimension(s, p.H, "H");
  require_dimension(s, p.B, "B");
  const std::size_t rho = s.rank();
  const Rational h2 = intersect(s, p.H, p.H);
  const RatVector gb = s.gram() * p.B;
  const RatVector gh = s.gram() * p.H;
  RatMatrix m(2, rho + 2);
  m(0, 0) = p.alpha * h2;
  m(1, 0) = -p.beta * h2;
  for (std::size_t i = 0; i < rho; ++i) {
    m(0, i + 1) = gb[i];
    m(1, i + 1) = gh[i];
  }
  m(0, rho + 1) = -1;
  return m;
}

KernelBasis kernel_basis(const SurfaceModel& s, const StabilityParams& p) {
  const RatMatrix m = central_charge_matrix(s, p);
  KernelBasis k;
  k.vectors = nullspace(m);
  k.degenerate = rank(m) < 2;
  return k;
}

KernelBasis tilt_kernel_basis(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& b,
                              const Rational& a_squared) {
  require_dimension(s, h, "H");
  require_dimension(s, b, "B");
  const std::size_t rho = s.rank();
  const RatVector gh = s.gram() * h;
  const RatVector gb = s.gram() * b;
  RatMatrix m(2, rho + 2);
  m(0, 0) = -intersect(s, h, b);
  m(1, 0) = intersect(s, b, b) / 2 - a_squared * intersect(s, h, h) / 2;
  for (std::size_t i = 0; i < rho; ++i) {
    m(0, i + 1) = gh[i];
    m(1, i + 1) = -gb[i];
  }
  m(1, rho + 1) = 1;
  KernelBasis k;
  k.vectors = nullspace(m);
  k.degenerate = rank(m) < 2;
  return k;
}

TiltParams normalized_to_tilt(const SurfaceModel& s, const StabilityParams& p) {
  require_ample(s, p.H);
  require_dimension(s, p.B, "B");
  const Rational h2 = intersect(s, p.H, p.H);
  const Rational b = p.beta - intersect(s, p.H, p.B) / h2;
  const Rational a2 = 2 * p.alpha - b * b + intersect(s, p.B, p.B) / h2;
  if (sgn(a2) <= 0) {
    throw PreconditionError("alpha = " + to_string(p.alpha) +
                            " is outside the Bogomolov range: a^2 = " + to_string(a2) + " <= 0");
  }
  return {a2, p.H, add(p.B, scale(b, p.H))};
}

StabilityParams tilt_to_normalized(const SurfaceModel& s, const TiltParams& t,
                                   const DivisorClass& base_b) {
  require_ample(s, t.H);
  require_dimension(s, base_b, "B");
  require_dimension(s, t.B_tilt, "B_tilt");
  if (sgn(t.a_squared) <= 0) throw PreconditionError("a^2 must be positive");
  const RatVector diff = sub(t.B_tilt, base_b);
  // diff = b·H; read b off any nonzero coordinate of H and check the rest.
  std::size_t pivot = 0;
  while (sgn(t.H[pivot]) == 0) ++pivot;
  const Rational b = diff[pivot] / t.H[pivot];
  if (sub(diff, scale(b, t.H)) != RatVector(diff.size()))
    throw InputError("B_tilt - B is not a multiple of H");
  const Rational h2 = intersect(s, t.H, t.H);
  const Rational alpha = (t.a_squared + b * b - intersect(s, base_b, base_b) / h2) / 2;
  const Rational beta = b + intersect(s, t.H, base_b) / h2;
  return {t.H, base_b, alpha, beta};
}

StabilityParams parse_params(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    parts.push_back(text.substr(start, semi == std::string_view::npos ? semi : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (parts.size() != 4)
    throw InputError("params must look like \"H;B;alpha;beta\", got '" + std::string(text) + "'");
  return {parse_vector(parts[0]), parse_vector(parts[1]), parse_rational(parts[2]),
          parse_rational(parts[3])};
}

std::string format_params(const StabilityParams& p) {
  return "H=" + format_vector(p.H) + " B=" + format_vector(p.B) + " alpha=" + to_string(p.alpha) +
         " beta=" + to_string(p.beta);
}

}  // namespace stabkit
