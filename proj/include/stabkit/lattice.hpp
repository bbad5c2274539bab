#pragma once

// Néron–Severi lattice of a surface: intersection form, nef/effective cone data
// and the Hodge-index primitives built on them.

#include <cstdint>
#include <string>
#include <vector>

#include "stabkit/linalg.hpp"
#include "stabkit/provider.hpp"
#include "stabkit/rational.hpp"

namespace stabkit {

/// Coordinates of a class in NS_ℚ(X) with respect to the model's basis.
using DivisorClass = RatVector;

/// What is known about the Albanese morphism; gates the closed-form provider.
enum class AlbaneseType : std::uint8_t {
  unspecified,
  abelian,
  finite,
  free_quotient_of_finite,
};

const char* to_string(AlbaneseType a);
AlbaneseType parse_albanese_type(const std::string& s);

struct SurfaceData {
  std::string name;
  std::size_t rank = 0;
  RatMatrix gram;
  std::vector<DivisorClass> nef_inequalities;
  std::vector<DivisorClass> effective_generators;
  long chtwo_denominator = 2;
  AlbaneseType albanese = AlbaneseType::unspecified;
  LePotierProvider lp_provider = QuadraticClosedForm{};
};

/// Immutable, validated surface. Construction checks symmetry, the Hodge-index
/// signature (1, ρ−1) by exact sign counting, cone data shapes and the
/// compatibility of the provider with the Albanese flag.
class SurfaceModel {
 public:
  explicit SurfaceModel(SurfaceData data);

  const std::string& name() const { return d_.name; }
  std::size_t rank() const { return d_.rank; }
  const RatMatrix& gram() const { return d_.gram; }
  const std::vector<DivisorClass>& nef_inequalities() const { return d_.nef_inequalities; }
  const std::vector<DivisorClass>& effective_generators() const { return d_.effective_generators; }
  long chtwo_denominator() const { return d_.chtwo_denominator; }
  AlbaneseType albanese() const { return d_.albanese; }
  const LePotierProvider& lp_provider() const { return d_.lp_provider; }
  const SurfaceData& data() const { return d_; }

 private:
  SurfaceData d_;
};

/// D1ᵀ·gram·D2.
Rational intersect(const SurfaceModel& s, const DivisorClass& d1, const DivisorClass& d2);

/// H·C_j > 0 for every nef inequality and H² > 0.
bool is_ample(const SurfaceModel& s, const DivisorClass& h);

/// min_j H·C_j.
Rational nef_margin(const SurfaceModel& s, const DivisorClass& h);

/// (H·c)² − H²·c², nonnegative by the Hodge index theorem. Requires ample H.
Rational hodge_index_defect(const SurfaceModel& s, const DivisorClass& h, const DivisorClass& c);

void require_dimension(const SurfaceModel& s, const DivisorClass& d, const char* what);
void require_ample(const SurfaceModel& s, const DivisorClass& h);

}  // namespace stabkit
