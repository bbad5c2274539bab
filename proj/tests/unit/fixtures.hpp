#pragma once

#include <random>

#include "stabkit/lattice.hpp"

namespace fixtures {

using namespace stabkit;

inline Rational q(long n, long d = 1) { return make_rational(n, d); }
inline RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.push_back(x);
  return v;
}

// Principally polarized abelian surface with Picard rank one.
inline SurfaceModel abelian_rho1() {
  SurfaceData d;
  d.name = "abelian_rho1";
  d.rank = 1;
  d.gram = RatMatrix({{q(2)}});
  d.nef_inequalities = {vec({1})};
  d.effective_generators = {vec({1})};
  d.albanese = AlbaneseType::abelian;
  return SurfaceModel(d);
}

// E × F with the two fibre classes as basis.
inline SurfaceModel product_surface(AlbaneseType a = AlbaneseType::abelian) {
  SurfaceData d;
  d.name = "product";
  d.rank = 2;
  d.gram = RatMatrix({{q(0), q(1)}, {q(1), q(0)}});
  d.nef_inequalities = {vec({1, 0}), vec({0, 1})};
  d.effective_generators = {vec({1, 0}), vec({0, 1})};
  d.albanese = a;
  return SurfaceModel(d);
}

inline Rational random_rational(std::mt19937_64& rng, long num_range = 20, long max_den = 12) {
  std::uniform_int_distribution<long> n(-num_range, num_range);
  std::uniform_int_distribution<long> d(1, max_den);
  return make_rational(n(rng), d(rng));
}

inline RatVector random_vector(std::mt19937_64& rng, std::size_t n, long num_range = 20,
                               long max_den = 12) {
  RatVector v(n);
  for (auto& x : v) x = random_rational(rng, num_range, max_den);
  return v;
}

}  // namespace fixtures
