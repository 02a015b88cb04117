#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "valconv/combinatorics.hpp"
#include "valconv/convex.hpp"
#include "valconv/linalg.hpp"

namespace valconv {

// Seeded std::mt19937_64 with a bounded draw that does not depend on the
// standard library's distribution implementations, so reports are
// reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

 private:
  std::mt19937_64 engine_;
};

constexpr std::int64_t kMaxMagnitude = 1000;
constexpr std::int64_t kShiftRange = 3;

// (n/m) * uniformizer^s with |n|, m <= 1000 and s uniform in [-3, 3]. Over
// rational function fields n and m are polynomials of degree <= 1 whose
// coefficients obey the same bound. About one draw in ten is zero.
FieldElem random_element(const Field& k, Rng& rng);
FieldElem random_nonzero(const Field& k, Rng& rng);
// Random element shifted into O.
FieldElem random_integral(const Field& k, Rng& rng);
// Random element of valuation exactly 0.
FieldElem random_unit(const Field& k, Rng& rng);

Vec random_vec(const Field& k, Rng& rng, std::size_t d);
// Distinct random points.
std::vector<Vec> random_points(const Field& k, Rng& rng, std::size_t d, std::size_t n);

// Integral-only module with 1..max_gens random generators.
MixedModule random_lattice(const Field& k, Rng& rng, std::size_t d, std::size_t max_gens);
// Module with occasional free generators.
MixedModule random_module(const Field& k, Rng& rng, std::size_t d, std::size_t max_gens);
ConvexSet random_convex(const Field& k, Rng& rng, std::size_t d);
// Random O-combination of the module's normal-form generators.
Vec random_module_element(const Field& k, Rng& rng, const MixedModule& m);
// Random n x n matrix with integral entries and unit determinant.
Mat random_unimodular(const Field& k, Rng& rng, std::size_t n);
// n random members all containing `hidden`.
Family random_common_point_family(const Field& k, Rng& rng, std::size_t d, std::size_t n,
                                  const Vec& hidden);

}  // namespace valconv
