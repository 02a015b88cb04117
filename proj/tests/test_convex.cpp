#include <doctest.h>

#include <tuple>

#include "support.hpp"
#include "valconv/random.hpp"
#include "valconv/verify.hpp"

using namespace valconv;
using test::ball;
using test::ints;
using test::vec;

namespace {

std::vector<Vec> simplex(const Field& k, std::size_t d) {
  std::vector<Vec> pts{Vec::zeros(k, d)};
  for (std::size_t i = 0; i < d; ++i) pts.push_back(Vec::unit(k, d, i));
  return pts;
}

// Largest r with all points inside the ball of radius r around the first one.
std::int64_t enclosing_radius(const Field& k, const std::vector<Vec>& pts) {
  ValExt r = ValExt::infinity();
  for (const auto& p : pts) r = std::min(r, vval(k, p - pts.front()));
  return r.is_infinite() ? 0 : r.value();
}

}  // namespace

TEST_CASE("hull of the standard simplex is O^d") {
  for (const char* sel : {"padic:2", "padic:5", "ratfunc:0"}) {
    const Field k = Field::from_selector(sel);
    for (std::size_t d = 1; d <= 4; ++d) {
      const ConvexSet h = conv_hull(k, simplex(k, d));
      CHECK(equals(k, h, ball(k, Vec::zeros(k, d), 0)));
      CHECK(h.module().lattice().gammas == std::vector<std::int64_t>(d, 0));
    }
  }
}

TEST_CASE("hull examples") {
  const Field k = Field::padic(2);
  const Vec x = vec(k, {"1/3", "4"});
  const ConvexSet pt = conv_hull(k, std::vector<Vec>{x});
  CHECK(pt.translate() == x);
  CHECK(pt.module().is_zero());

  const std::vector<Vec> pts{ints(k, {0}), ints(k, {2}), vec(k, {"1/2"})};
  const ConvexSet h = conv_hull(k, pts);
  CHECK(equals(k, h, ball(k, ints(k, {0}), -1)));
  CHECK(contains(k, h, vec(k, {"3/2"})));
  CHECK_FALSE(contains(k, h, vec(k, {"1/4"})));

  CHECK(conv_hull(k, std::vector<Vec>{}, 3).is_empty());
}

TEST_CASE("quasi balls") {
  const Field k3 = Field::padic(3);
  const ConvexSet o = ball(k3, ints(k3, {0}), 0);
  CHECK(contains(k3, o, ints(k3, {7})));
  CHECK_FALSE(contains(k3, o, vec(k3, {"1/3"})));

  const ConvexSet b = ball(k3, ints(k3, {1, 1}), 1);
  CHECK(contains(k3, b, ints(k3, {4, -2})));
  CHECK_FALSE(contains(k3, b, ints(k3, {2, 1})));
  CHECK(equals(k3, b, ConvexSet(ints(k3, {1, 1}),
                                MixedModule(k3, 2, {}, {ints(k3, {3, 0}), ints(k3, {0, 3})}))));

  const ConvexSet all = quasi_ball(k3, ints(k3, {0}), Delta::full());
  CHECK(contains(k3, all, vec(k3, {"1/81"})));
  CHECK(all.module().free_basis().size() == 1);
}

TEST_CASE("radon certificates") {
  const Field k2 = Field::padic(2);
  const std::vector<Vec> sq{ints(k2, {0, 0}), ints(k2, {1, 0}), ints(k2, {0, 1}), ints(k2, {1, 1})};
  const RadonCertificate c = radon_point(k2, sq);
  CHECK(c.index == 0);
  REQUIRE(c.coefficients.size() == 3);
  CHECK(c.coefficients[0] == k2.from_int(1));
  CHECK(c.coefficients[1] == k2.from_int(1));
  CHECK(c.coefficients[2] == k2.from_int(-1));
  CHECK(validate_radon(k2, sq, c));

  const Field k5 = Field::padic(5);
  const std::vector<Vec> line{ints(k5, {0}), ints(k5, {1}), ints(k5, {5})};
  const RadonCertificate c5 = radon_point(k5, line);
  CHECK(c5.index == 0);
  REQUIRE(c5.coefficients.size() == 2);
  CHECK(c5.coefficients[0] == k5.parse("5/4"));
  CHECK(c5.coefficients[1] == k5.parse("-1/4"));
  CHECK(validate_radon(k5, line, c5));

  const std::vector<Vec> dup{ints(k2, {1, 1}), ints(k2, {1, 1}), ints(k2, {0, 3}), ints(k2, {5, 0})};
  CHECK(validate_radon(k2, dup, radon_point(k2, dup)));

  // The validator rejects tampered certificates.
  RadonCertificate bad = c;
  bad.coefficients[2] = k2.parse("1/2");
  CHECK_FALSE(validate_radon(k2, sq, bad));
  bad = c;
  bad.index = 1;
  CHECK_FALSE(validate_radon(k2, sq, bad));
}

TEST_CASE("radon certificates on random instances") {
  for (const char* sel : {"padic:2", "padic:5", "ratfunc:3"}) {
    const Field k = Field::from_selector(sel);
    Rng rng(29);
    for (int t = 0; t < 100; ++t) {
      const auto d = static_cast<std::size_t>(rng.uniform(1, 4));
      const auto pts = random_points(k, rng, d, d + 2);
      CHECK(validate_radon(k, pts, radon_point(k, pts)));
    }
  }
}

TEST_CASE("caratheodory reduction") {
  const Field k2 = Field::padic(2);
  const std::vector<Vec> sq{ints(k2, {0, 0}), ints(k2, {1, 0}), ints(k2, {0, 1}), ints(k2, {1, 1})};
  const auto keep = caratheodory_reduce(k2, sq);
  CHECK(keep.size() == 3);
  std::vector<Vec> sub;
  for (auto i : keep) sub.push_back(sq[i]);
  CHECK(equals(k2, conv_hull(k2, sub), conv_hull(k2, sq)));

  const std::vector<Vec> small{ints(k2, {3, 1}), ints(k2, {0, 1})};
  CHECK(caratheodory_reduce(k2, small) == std::vector<std::size_t>{0, 1});

  const Field k5 = Field::padic(5);
  const std::vector<Vec> pts{ints(k5, {0}), ints(k5, {1}), ints(k5, {5}), vec(k5, {"1/5"})};
  const auto keep5 = caratheodory_reduce(k5, pts);
  CHECK(keep5.size() == 2);
  std::vector<Vec> sub5;
  for (auto i : keep5) sub5.push_back(pts[i]);
  CHECK(equals(k5, conv_hull(k5, sub5), ball(k5, ints(k5, {0}), -1)));
}

TEST_CASE("membership examples") {
  const Field k5 = Field::padic(5), k2 = Field::padic(2);
  CHECK(contains(k5, ball(k5, Vec::zeros(k5, 3), 0), vec(k5, {"1/2", "1/3", "5"})));
  CHECK_FALSE(contains(k2, ball(k2, Vec::zeros(k2, 1), 0), vec(k2, {"1/2"})));
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const ConvexSet c = random_convex(k5, rng, 3);
    CHECK(contains(k5, c, c.translate()));
  }
  CHECK_FALSE(contains(k5, ConvexSet::empty(2), ints(k5, {0, 0})));
  CHECK_THROWS_AS(contains(k5, ball(k5, Vec::zeros(k5, 2), 0), ints(k5, {1})), DimensionMismatch);
}

TEST_CASE("intersection examples") {
  const Field k = Field::padic(3);
  const Vec z1 = ints(k, {0}), z2 = ints(k, {0, 0});
  CHECK(equals(k, intersect(k, ball(k, z1, 2), ball(k, z1, 1)), ball(k, z1, 2)));

  const ConvexSet h1 = test::line(k, z2, ints(k, {1, 0}));
  const ConvexSet h2 = test::line(k, z2, ints(k, {0, 1}));
  const ConvexSet pt = intersect(k, h1, h2);
  REQUIRE_FALSE(pt.is_empty());
  CHECK(pt.translate() == z2);
  CHECK(pt.module().is_zero());

  const ConvexSet shifted = ball(k, ints(k, {1, 1}), 1);
  CHECK(equals(k, intersect(k, ball(k, z2, 0), shifted), shifted));

  // Parallel lines and disjoint balls.
  CHECK(intersect(k, h1, test::line(k, ints(k, {0, 1}), ints(k, {1, 0}))).is_empty());
  CHECK(intersect(k, ball(k, z1, 1), ball(k, ints(k, {1}), 1)).is_empty());
  CHECK(intersect(k, ConvexSet::empty(1), ball(k, z1, 0)).is_empty());
  CHECK_THROWS_AS(intersect(k, ball(k, z1, 0), ball(k, z2, 0)), DimensionMismatch);
}

TEST_CASE("subset and equality") {
  const Field k = Field::padic(3);
  const Vec z1 = ints(k, {0});
  CHECK(subset(k, ball(k, z1, 1), ball(k, z1, 0)));
  CHECK_FALSE(subset(k, ball(k, z1, 0), ball(k, z1, 1)));
  CHECK(subset(k, ConvexSet::empty(1), ball(k, z1, 5)));
  CHECK_FALSE(subset(k, ball(k, z1, 5), ConvexSet::empty(1)));

  const std::vector<Vec> tri{ints(k, {0, 0}), ints(k, {1, 0}), ints(k, {0, 1})};
  const std::vector<Vec> sq{ints(k, {0, 0}), ints(k, {1, 0}), ints(k, {0, 1}), ints(k, {1, 1})};
  CHECK(equals(k, conv_hull(k, tri), conv_hull(k, sq)));

  // A ball containing two scalings of v does not contain the line K v.
  const ConvexSet line = test::line(k, z1, ints(k, {1}));
  const ConvexSet big = ball(k, z1, -2);
  CHECK(contains(k, big, vec(k, {"1/3"})));
  CHECK(contains(k, big, vec(k, {"1/9"})));
  CHECK_FALSE(subset(k, line, big));
  CHECK(subset(k, big, line));
}

TEST_CASE("flag decomposition examples") {
  const Field k = Field::padic(3);
  const std::vector<Vec> pts{ints(k, {0, 0}), ints(k, {1, 0}), ints(k, {0, 3})};
  const ConvexSet c = conv_hull(k, pts);
  const FlagForm f = flag_decompose(k, c);
  REQUIRE(f.entries.size() == 2);
  CHECK(f.entries[0].vector == ints(k, {1, 0}));
  CHECK(f.entries[0].delta == Delta::at_least(0));
  CHECK(f.entries[1].vector == ints(k, {0, 1}));
  CHECK(f.entries[1].delta == Delta::at_least(1));
  CHECK(equals(k, flag_to_convex(k, f), c));

  const FlagForm o = flag_decompose(k, ball(k, Vec::zeros(k, 3), 0));
  REQUIRE(o.entries.size() == 3);
  for (const auto& e : o.entries) CHECK(e.delta == Delta::at_least(0));

  const FlagForm kk = flag_decompose(k, quasi_ball(k, ints(k, {0}), Delta::full()));
  REQUIRE(kk.entries.size() == 1);
  CHECK(kk.entries[0].delta == Delta::full());

  CHECK_THROWS(flag_decompose(k, ConvexSet::empty(2)));
}

TEST_CASE("box presentation examples") {
  const Field k = Field::padic(3);
  const BoxPresentation o = box_presentation(k, ball(k, Vec::zeros(k, 2), 0));
  CHECK(o.deltas == std::vector<Delta>{Delta::at_least(0), Delta::at_least(0)});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(o.map(i, j) == (i == j ? k.one() : k.zero()));

  const Vec x = vec(k, {"1/2", "7"});
  const BoxPresentation p = box_presentation(k, conv_hull(k, std::vector<Vec>{x}));
  CHECK(p.translate == x);
  CHECK(p.deltas == std::vector<Delta>{Delta::only_infinity(), Delta::only_infinity()});
  CHECK(box_contains(k, p, x));
  CHECK_FALSE(box_contains(k, p, ints(k, {0, 0})));

  const std::vector<Vec> pts{ints(k, {0, 0}), ints(k, {1, 0}), ints(k, {0, 3})};
  const BoxPresentation b = box_presentation(k, conv_hull(k, pts));
  CHECK(b.map.column(0) == ints(k, {1, 0}));
  CHECK(b.map.column(1) == ints(k, {0, 1}));
  CHECK(b.deltas == std::vector<Delta>{Delta::at_least(0), Delta::at_least(1)});
}

TEST_CASE("hull soundness and minimality") {
  const Field k = Field::padic(2);
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto pts = random_points(k, rng, d, n);
    const ConvexSet h = conv_hull(k, pts);
    for (int s = 0; s < 500; ++s) {
      // Three-term O-combination with coefficients summing to 1.
      const FieldElem a = random_integral(k, rng), b = random_integral(k, rng);
      const FieldElem c = k.one() - a - b;
      const Vec x = a * pts[rng.uniform(0, n - 1)] + b * pts[rng.uniform(0, n - 1)] +
                    c * pts[rng.uniform(0, n - 1)];
      CHECK(contains(k, h, x));
    }
    const ConvexSet enclosing = ball(k, pts.front(), enclosing_radius(k, pts));
    CHECK(subset(k, h, enclosing));
  }
}

TEST_CASE("intersection agrees with a sampling oracle") {
  for (const auto& [sel, pairs, probes] : {std::tuple{"padic:2", 200, 100}, std::tuple{"ratfunc:3", 30, 40}}) {
    const Field k = Field::from_selector(sel);
    Rng rng(37);
    for (int t = 0; t < pairs; ++t) {
      const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
      const ConvexSet a = random_convex(k, rng, d);
      // Half of the pairs share the translate so that they overlap.
      ConvexSet b = random_convex(k, rng, d);
      if (rng.chance(1, 2)) b = ConvexSet(a.translate(), b.module());
      const ConvexSet ab = intersect(k, a, b);
      for (int s = 0; s < probes; ++s) {
        const Vec x = sample_probe(k, rng, rng.chance(1, 2) ? a : b);
        CHECK(contains(k, ab, x) == (contains(k, a, x) && contains(k, b, x)));
      }
      if (!ab.is_empty()) {
        const Vec x = ab.translate() + random_module_element(k, rng, ab.module());
        CHECK(contains(k, a, x));
        CHECK(contains(k, b, x));
      }
      CHECK(equals(k, ab, intersect(k, b, a)));
      CHECK(equals(k, intersect(k, a, a), a));
    }
  }
}

TEST_CASE("translates are equal or disjoint") {
  const Field k = Field::padic(5);
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
    const ConvexSet c = random_convex(k, rng, d);
    const Vec a = rng.chance(1, 2) ? random_module_element(k, rng, c.module()) : random_vec(k, rng, d);
    const ConvexSet shifted(c.translate() + a, c.module());
    CHECK((equals(k, c, shifted) || intersect(k, c, shifted).is_empty()));
  }
}

TEST_CASE("flag forms describe the source set") {
  for (const char* sel : {"padic:2", "padic:3", "ratfunc:5"}) {
    const Field k = Field::from_selector(sel);
    Rng rng(43);
    for (int t = 0; t < 30; ++t) {
      const auto d = static_cast<std::size_t>(rng.uniform(1, 4));
      const ConvexSet c = random_convex(k, rng, d);
      const FlagForm f = flag_decompose(k, c);
      CHECK(equals(k, flag_to_convex(k, f), c));

      bool seen_at_least = false;
      std::int64_t prev = 0;
      for (const auto& e : f.entries) {
        CHECK(vval(k, e.vector) == ValExt(0));
        if (e.delta.kind == Delta::Kind::Full) {
          CHECK_FALSE(seen_at_least);
        } else {
          if (seen_at_least) CHECK(e.delta.gamma >= prev);
          seen_at_least = true;
          prev = e.delta.gamma;
        }
      }
      for (int s = 0; s < 40; ++s) {
        const Vec x = sample_probe(k, rng, c);
        CHECK(flag_contains(k, f, x) == contains(k, c, x));
      }
      const BoxPresentation b = box_presentation(k, c);
      CHECK(rank(b.map) == d);
      for (int s = 0; s < 20; ++s) {
        const Vec x = sample_probe(k, rng, c);
        CHECK(box_contains(k, b, x) == contains(k, c, x));
      }
    }
  }
}

TEST_CASE("smallest gamma is the minimal valuation of the module") {
  const Field k = Field::padic(2);
  Rng rng(47);
  for (int t = 0; t < 30; ++t) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
    const MixedModule m = random_lattice(k, rng, d, 4);
    const ConvexSet c(Vec::zeros(k, d), m);
    const FlagForm f = flag_decompose(k, c);
    if (f.entries.empty()) continue;
    const std::int64_t g1 = f.entries.front().delta.gamma;
    ValExt seen = ValExt::infinity();
    for (int s = 0; s < 200; ++s) seen = std::min(seen, vval(k, random_module_element(k, rng, m)));
    CHECK(seen >= ValExt(g1));
    // Every normal-form generator is an element of the module, so the
    // minimum is attained.
    ValExt gens = ValExt::infinity();
    for (const auto& u : m.lattice().vectors) gens = std::min(gens, vval(k, u));
    CHECK(gens == ValExt(g1));
  }
}

TEST_CASE("valuations are unbounded below once a full direction exists") {
  const Field k = Field::padic(5);
  Rng rng(49);
  for (int t = 0; t < 20; ++t) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
    const Vec v = random_vec(k, rng, d);
    if (v.is_zero()) continue;
    const MixedModule m(k, d, {v}, {random_vec(k, rng, d)});
    const FlagForm f = flag_decompose(k, ConvexSet(Vec::zeros(k, d), m));
    const auto full = std::find_if(f.entries.begin(), f.entries.end(),
                                   [](const auto& e) { return e.delta == Delta::full(); });
    REQUIRE(full != f.entries.end());
    const Vec& w = full->vector;
    for (std::int64_t n = 1; n <= 6; ++n) {
      const Vec x = k.uniformizer_pow(-10 * n) * w;
      CHECK(module_contains(k, m, x));
      CHECK(vval(k, x) == ValExt(-10 * n));
    }
  }
}

TEST_CASE("largest ball inside a full-rank lattice") {
  const Field k = Field::padic(3);
  Rng rng(53);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 25; ++t) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
    const MixedModule m = random_lattice(k, rng, d, d + 2);
    if (m.lattice().size() != d) continue;
    ++checked;
    const ConvexSet c(Vec::zeros(k, d), m);
    const std::int64_t last = flag_decompose(k, c).entries.back().delta.gamma;
    CHECK(subset(k, ball(k, Vec::zeros(k, d), last), c));
    CHECK_FALSE(subset(k, ball(k, Vec::zeros(k, d), last - 1), c));
  }
  CHECK(checked > 0);
}

TEST_CASE("hull over a rational function field") {
  const Field k = Field::ratfunc(0);
  const std::vector<Vec> pts{vec(k, {"0"}), vec(k, {"t"}), vec(k, {"(1)/(t)"})};
  CHECK(equals(k, conv_hull(k, pts), ball(k, vec(k, {"0"}), -1)));
  CHECK(contains(k, conv_hull(k, pts), vec(k, {"(t+1)/(t)"})));
  CHECK_FALSE(contains(k, conv_hull(k, pts), vec(k, {"(1)/(t^2)"})));
}
