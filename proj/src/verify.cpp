#include "valconv/verify.hpp"

#include <algorithm>
#include <sstream>

#include "valconv/errors.hpp"

namespace valconv {

bool nu_orthogonal_on_samples(const Field& k, Rng& rng, const OrthoBasis& b, std::size_t samples) {
  if (b.size() == 0) return true;
  const std::size_t d = b.vectors.front().dim();
  for (std::size_t s = 0; s < samples; ++s) {
    Vec sum = Vec::zeros(k, d);
    ValExt expected = ValExt::infinity();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const FieldElem c = random_element(k, rng);
      sum = sum + c * b.vectors[i];
      expected = std::min(expected, k.val(c) + ValExt(b.gammas[i]));
    }
    if (vval(k, sum) != expected) return false;
  }
  return true;
}

std::vector<std::int64_t> gamma_multiset(const OrthoBasis& b) {
  std::vector<std::int64_t> g = b.gammas;
  std::sort(g.begin(), g.end());
  return g;
}

std::vector<Vec> unimodular_representation(const Field& k, Rng& rng, const MixedModule& m) {
  const auto& gens = m.integral_gens();
  if (gens.empty()) return {};
  const Mat u = random_unimodular(k, rng, gens.size());
  const Mat g = Mat::from_columns(k, m.dim(), gens) * u;
  std::vector<Vec> out;
  for (std::size_t c = 0; c < g.cols(); ++c) out.push_back(g.column(c));
  return out;
}

Vec sample_probe(const Field& k, Rng& rng, const ConvexSet& c) {
  if (c.is_empty() || rng.chance(1, 2)) return random_vec(k, rng, c.dim());
  return c.translate() + random_module_element(k, rng, c.module());
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void trial() { ++r_.trials; }
  bool expect(bool ok, const std::string& what) {
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = what + " (trial " + std::to_string(r_.trials) + ")";
    }
    return ok;
  }
  SuiteResult done() { return std::move(r_); }
  SuiteResult skip(const std::string& why) {
    r_.detail = "skipped: " + why;
    return done();
  }

 private:
  SuiteResult r_;
};

std::size_t pick_dim(Rng& rng, std::size_t max_d) {
  return static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_d)));
}

SuiteResult suite_field(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("field");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const FieldElem x = random_element(k, rng), y = random_element(k, rng);
    t.expect(k.val(x * y) == k.val(x) + k.val(y), "val multiplicative");
    const ValExt vx = k.val(x), vy = k.val(y), vs = k.val(x + y);
    t.expect(vs >= std::min(vx, vy), "ultrametric inequality");
    if (vx != vy) t.expect(vs == std::min(vx, vy), "ultrametric equality");
    t.expect(k.parse(k.render(x)) == x, "parse(render(x)) == x");
  }
  return t.done();
}

SuiteResult suite_radon(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("radon");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 4);
    const auto pts = random_points(k, rng, d, d + 2);
    t.expect(validate_radon(k, pts, radon_point(k, pts)), "certificate validates");
  }
  return t.done();
}

SuiteResult suite_caratheodory(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("caratheodory");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 4);
    const auto n = static_cast<std::size_t>(rng.uniform(1, 12));
    const auto pts = random_points(k, rng, d, n);
    const auto keep = caratheodory_reduce(k, pts);
    std::vector<Vec> sub;
    for (auto j : keep) sub.push_back(pts[j]);
    t.expect(keep.size() <= d + 1, "at most d+1 points");
    t.expect(equals(k, conv_hull(k, sub), conv_hull(k, pts)), "hull equality");
  }
  return t.done();
}

SuiteResult suite_hull(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("hull");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 3);
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto pts = random_points(k, rng, d, n);
    const ConvexSet hull = conv_hull(k, pts);
    for (std::size_t s = 0; s < 10; ++s) {
      auto any = [&] { return pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n - 1)))]; };
      const FieldElem a = random_integral(k, rng), b = random_integral(k, rng);
      const FieldElem c = k.one() - a - b;
      const Vec x = any();
      const Vec y = any();
      const Vec z = any();
      t.expect(contains(k, hull, a * x + b * y + c * z), "3-term combination in hull");
    }
    ValExt r = ValExt::infinity();
    for (const auto& p : pts) r = std::min(r, vval(k, p - pts[0]));
    if (r.is_finite()) {
      const ConvexSet ball = quasi_ball(k, pts[0], Delta::at_least(r.value()));
      t.expect(subset(k, hull, ball), "hull inside every ball containing the points");
    }
  }
  return t.done();
}

SuiteResult suite_flag(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("flag");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 4);
    const MixedModule m = random_lattice(k, rng, d, d + 2);
    t.expect(nu_orthogonal_on_samples(k, rng, m.lattice(), 20), "nu-orthogonality");
    const auto gammas = gamma_multiset(m.lattice());
    for (int rep = 0; rep < 2; ++rep) {
      const MixedModule again(k, d, {}, unimodular_representation(k, rng, m));
      t.expect(gamma_multiset(again.lattice()) == gammas, "gamma multiset invariance");
    }
    const ConvexSet c(random_vec(k, rng, d), m);
    const FlagForm f = flag_decompose(k, c);
    for (std::size_t s = 0; s < 20; ++s) {
      const Vec x = sample_probe(k, rng, c);
      t.expect(flag_contains(k, f, x) == contains(k, c, x), "flag membership agrees");
    }
  }
  return t.done();
}

SuiteResult suite_intersect(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("intersect");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 3);
    const ConvexSet a = random_convex(k, rng, d);
    ConvexSet b = random_convex(k, rng, d);
    if (rng.chance(1, 2)) {
      const Vec shared = sample_probe(k, rng, a);
      b = ConvexSet(shared - random_module_element(k, rng, b.module()), b.module());
    }
    const ConvexSet ab = intersect(k, a, b);
    for (std::size_t s = 0; s < 20; ++s) {
      const Vec x = rng.chance(1, 2) ? sample_probe(k, rng, a) : sample_probe(k, rng, b);
      t.expect(contains(k, ab, x) == (contains(k, a, x) && contains(k, b, x)), "sampling oracle");
    }
    t.expect(equals(k, ab, intersect(k, b, a)), "commutative");
    t.expect(equals(k, intersect(k, a, a), a), "idempotent");
  }
  return t.done();
}

SuiteResult suite_translate(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("translate");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 3);
    const ConvexSet c = random_convex(k, rng, d);
    const Vec shift = rng.chance(1, 2) ? random_module_element(k, rng, c.module()) : random_vec(k, rng, d);
    const ConvexSet moved(c.translate() + shift, c.module());
    const bool same = equals(k, c, moved);
    const bool disjoint = intersect(k, c, moved).is_empty();
    t.expect(same != disjoint, "translate is equal or disjoint");
  }
  return t.done();
}

SuiteResult suite_helly(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("helly");
  for (std::size_t d = 1; d <= 3; ++d) {
    const Family w = helly_lower_bound_witness(k, d);
    t.expect(!helly_point(k, w).has_value(), "witness has empty intersection");
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
      Family sub{d, {}};
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != skip) sub.members.push_back(w.members[j]);
      t.expect(helly_point(k, sub).has_value(), "witness d-subfamilies intersect");
    }
  }
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 3);
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    const Family fam = random_common_point_family(k, rng, d, n, random_vec(k, rng, d));
    const auto p = helly_point(k, fam);
    if (!t.expect(p.has_value(), "common point found")) continue;
    for (const auto& m : fam.members) t.expect(contains(k, m, *p), "point in every member");
  }
  return t.done();
}

SuiteResult suite_breadth(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("breadth");
  for (std::size_t d = 1; d <= 3; ++d)
    t.expect(breadth_reduce(k, coordinate_hyperplanes(k, d)).size() == d,
             "coordinate hyperplanes need d members");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 3);
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    const Family fam = random_common_point_family(k, rng, d, n, random_vec(k, rng, d));
    const auto idx = breadth_reduce(k, fam);
    t.expect(idx.size() <= d, "at most d indices");
    t.expect(equals(k, intersect_indices(k, fam, idx), intersect_all(k, fam)), "intersection equality");
  }
  return t.done();
}

SuiteResult suite_vc(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("vc");
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<Vec> e{Vec::zeros(k, d)};
    for (std::size_t j = 0; j < d; ++j) e.push_back(Vec::unit(k, d, j));
    t.expect(is_shattered(k, e).shattered, "standard simplex shattered");
  }
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = pick_dim(rng, 4);
    const auto pts = random_points(k, rng, d, d + 2);
    const ShatterReport rep = is_shattered(k, pts);
    t.expect(!rep.shattered, "d+2 points never shattered");
    if (rep.violation) {
      std::vector<Vec> s;
      for (auto j : rep.subset) s.push_back(pts[j]);
      t.expect(contains(k, conv_hull(k, s), pts[*rep.violation]), "reported violation holds");
    }
  }
  return t.done();
}

SuiteResult suite_atoms(const Field& k, Rng&, std::size_t) {
  Tally t("atoms");
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<Vec> grid;
    for (unsigned mask = 0; mask < (1U << d); ++mask) {
      Vec q = Vec::zeros(k, d);
      for (std::size_t j = 0; j < d; ++j)
        if (mask >> j & 1U) q[j] = k.one();
      grid.push_back(std::move(q));
    }
    t.trial();
    t.expect(dual_atoms(k, coordinate_hyperplanes(k, d), grid) == (1UL << d), "2^d sign vectors");
  }
  return t.done();
}

SuiteResult suite_tverberg(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("tverberg");
  for (std::size_t i = 0; i < trials; ++i) {
    t.trial();
    const std::size_t d = 1 + i % 3;
    const std::size_t r = 2 + (i / 3) % 2;
    const auto pts = random_points(k, rng, d, (d + 1) * (r - 1) + 1);
    t.expect(validate_tverberg(k, pts, r, tverberg_partition(k, pts, r)), "partition validates");
  }
  return t.done();
}

SuiteResult suite_frachelly(const Field& k, Rng&, std::size_t) {
  Tally t("frachelly");
  // The moment parameters 1..n must stay distinct and nonzero mod the
  // characteristic.
  std::size_t n = 8;
  if (k.kind() == FieldKind::RatFunc && k.prime() != 0 && k.prime() <= 8)
    n = k.prime().get_ui() - 1;
  if (n < 3) return t.skip("characteristic too small for a line family");
  t.trial();
  const Family h = hyperplane_family(k, 2, n);
  const auto stats = fractional_helly_stats(k, h, 2);
  t.expect(stats.alpha == 1, "all pairs intersect");
  t.expect(fractional_helly_stats(k, h, 3).alpha == 0, "no triple intersects");
  mpq_class expected(2, n);
  expected.canonicalize();
  t.expect(stats.beta == expected, "beta = 2/n");
  return t.done();
}

SuiteResult suite_selection(const Field& k, Rng& rng, std::size_t trials) {
  Tally t("selection");
  for (std::size_t i = 0; i < std::max<std::size_t>(1, trials / 10); ++i) {
    t.trial();
    const auto pts = random_points(k, rng, 2, 8);
    const SelectionResult s = selection_point(k, pts);
    t.expect(s.count >= 1 && s.total == 56, "some point in some triangle");
  }
  return t.done();
}

}  // namespace

const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> all{
      {"field", suite_field},         {"radon", suite_radon},
      {"caratheodory", suite_caratheodory}, {"hull", suite_hull},
      {"flag", suite_flag},           {"intersect", suite_intersect},
      {"translate", suite_translate}, {"helly", suite_helly},
      {"breadth", suite_breadth},     {"vc", suite_vc},
      {"atoms", suite_atoms},         {"tverberg", suite_tverberg},
      {"frachelly", suite_frachelly}, {"selection", suite_selection},
  };
  return all;
}

std::vector<SuiteResult> run_suites(const Field& k, std::string_view which, std::uint64_t seed,
                                    std::size_t trials) {
  std::vector<SuiteResult> out;
  const auto& all = suites();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (which != "all" && which != all[i].name) continue;
    Rng rng(seed + i);
    out.push_back(all[i].run(k, rng, trials));
  }
  if (out.empty()) throw Error("unknown suite '" + std::string(which) + "'");
  return out;
}

}  // namespace valconv
