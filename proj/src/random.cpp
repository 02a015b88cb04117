#include "valconv/random.hpp"

#include <algorithm>

namespace valconv {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

namespace {

FieldElem random_base(const Field& k, Rng& rng) {
  if (k.kind() == FieldKind::PAdic) {
    std::int64_t num = 0;
    while (num == 0) num = rng.uniform(-kMaxMagnitude, kMaxMagnitude);
    const std::int64_t den = rng.uniform(1, kMaxMagnitude);
    return k.from_rational(mpq_class(mpz_class(static_cast<long>(num)),
                                     mpz_class(static_cast<long>(den))));
  }
  const mpz_class& q = k.prime();
  auto coeff = [&]() -> mpq_class {
    if (q == 0) return mpq_class(static_cast<long>(rng.uniform(-kMaxMagnitude, kMaxMagnitude)));
    mpz_class bound = q - 1;
    if (bound > kMaxMagnitude) bound = kMaxMagnitude;
    return mpq_class(static_cast<long>(rng.uniform(0, bound.get_si())));
  };
  Poly num(q), den(q);
  while (num.is_zero()) {
    const mpq_class lin = coeff();
    const mpq_class con = coeff();
    num = Poly::monomial(lin, 1, q) + Poly::constant(con, q);
  }
  den = Poly::constant(1, q);
  if (rng.chance(1, 2)) den = Poly::monomial(1, 1, q) + Poly::constant(coeff(), q);
  return FieldElem(RatFunc(num, den));
}

}  // namespace

FieldElem random_nonzero(const Field& k, Rng& rng) {
  return random_base(k, rng) * k.uniformizer_pow(rng.uniform(-kShiftRange, kShiftRange));
}

FieldElem random_element(const Field& k, Rng& rng) {
  if (rng.chance(1, 10)) return k.zero();
  return random_nonzero(k, rng);
}

FieldElem random_unit(const Field& k, Rng& rng) {
  const FieldElem x = random_base(k, rng);
  return x * k.uniformizer_pow(-k.val(x).value());
}

FieldElem random_integral(const Field& k, Rng& rng) {
  if (rng.chance(1, 10)) return k.zero();
  return random_unit(k, rng) * k.uniformizer_pow(rng.uniform(0, kShiftRange));
}

Vec random_vec(const Field& k, Rng& rng, std::size_t d) {
  std::vector<FieldElem> x;
  for (std::size_t i = 0; i < d; ++i) x.push_back(random_element(k, rng));
  return Vec(std::move(x));
}

std::vector<Vec> random_points(const Field& k, Rng& rng, std::size_t d, std::size_t n) {
  std::vector<Vec> out;
  while (out.size() < n) {
    Vec v = random_vec(k, rng, d);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

MixedModule random_lattice(const Field& k, Rng& rng, std::size_t d, std::size_t max_gens) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_gens)));
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(random_vec(k, rng, d));
  return MixedModule(k, d, {}, std::move(gens));
}

MixedModule random_module(const Field& k, Rng& rng, std::size_t d, std::size_t max_gens) {
  std::vector<Vec> free, integral;
  if (d > 1 && rng.chance(1, 3)) free.push_back(random_vec(k, rng, d));
  const auto n = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_gens)));
  for (std::size_t i = 0; i < n; ++i) integral.push_back(random_vec(k, rng, d));
  return MixedModule(k, d, std::move(free), std::move(integral));
}

ConvexSet random_convex(const Field& k, Rng& rng, std::size_t d) {
  return ConvexSet(random_vec(k, rng, d), random_module(k, rng, d, d + 1));
}

Vec random_module_element(const Field& k, Rng& rng, const MixedModule& m) {
  Vec v = Vec::zeros(k, m.dim());
  for (const auto& w : m.free_basis()) v = v + random_element(k, rng) * w;
  for (const auto& u : m.lattice().vectors) v = v + random_integral(k, rng) * u;
  return v;
}

Mat random_unimodular(const Field& k, Rng& rng, std::size_t n) {
  Mat lower = Mat::identity(k, n), upper = Mat::identity(k, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) lower(i, j) = random_integral(k, rng);
      if (i < j) upper(i, j) = random_integral(k, rng);
      if (i == j) upper(i, j) = random_unit(k, rng);
    }
  Mat perm(n, n, k.zero());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i)
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i - 1)))]);
  for (std::size_t i = 0; i < n; ++i) perm(i, order[i]) = k.one();
  return perm * lower * upper;
}

Family random_common_point_family(const Field& k, Rng& rng, std::size_t d, std::size_t n,
                                  const Vec& hidden) {
  Family fam{d, {}};
  for (std::size_t i = 0; i < n; ++i) {
    MixedModule m = random_module(k, rng, d, d + 1);
    Vec t = hidden - random_module_element(k, rng, m);
    fam.members.emplace_back(std::move(t), std::move(m));
  }
  return fam;
}

}  // namespace valconv
