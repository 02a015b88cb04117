#include <doctest.h>

#include "support.hpp"
#include "valconv/errors.hpp"
#include "valconv/json_io.hpp"
#include "valconv/random.hpp"
#include "valconv/scenario.hpp"

using namespace valconv;
using io::json;

namespace {

Report run_op(const std::string& field, const std::string& op, json payload) {
  Scenario s;
  s.field = field;
  s.operation = op;
  s.payload = std::move(payload);
  return run(s);
}

}  // namespace

TEST_CASE("operation list") {
  const auto& ops = operations();
  for (const char* name : {"hull", "member", "intersect", "flag", "box", "radon", "caratheodory",
                           "tverberg", "tvcount", "helly", "breadth", "shatter", "atoms",
                           "selection", "frachelly", "pierce", "witness", "verify"})
    CHECK(std::find(ops.begin(), ops.end(), name) != ops.end());
  CHECK(ops.size() == 18);
}

TEST_CASE("hull report is O^2 for the standard triangle") {
  const Report r = run_op("padic:5", "hull", json::parse(R"({"points": [["0","0"],["1","0"],["0","1"]]})"));
  CHECK(r.exit_code == 0);
  const Field k = Field::padic(5);
  const ConvexSet c = io::convex_from_json(k, r.body);
  CHECK(equals(k, c, quasi_ball(k, Vec::zeros(k, 2), Delta::at_least(0))));
  CHECK(r.body["free"].empty());
}

TEST_CASE("radon report carries a valid certificate") {
  const json pts = json::parse(R"([["0","0"],["1","0"],["0","1"],["1","1"]])");
  const Report r = run_op("padic:2", "radon", {{"points", pts}});
  CHECK(r.exit_code == 0);
  CHECK(r.body["valid"] == true);
  CHECK(r.body["index"] == 0);
  CHECK(r.body["coefficients"] == json::parse(R"(["1","1","-1"])"));
  const Field k = Field::padic(2);
  CHECK(validate_radon(k, io::points_from_json(k, pts), io::radon_from_json(k, r.body)));
}

TEST_CASE("witness reports") {
  const Report h = run_op("padic:2", "witness", {{"name", "helly"}, {"d", 2}});
  CHECK(h.body.size() == 3);
  const Report b = run_op("padic:2", "witness", {{"name", "breadth"}, {"d", 3}});
  CHECK(b.body.size() == 3);
  const Report f = run_op("padic:2", "witness", {{"name", "frachelly"}, {"d", 2}, {"n", 6}});
  CHECK(f.body.size() == 6);
  const Field k = Field::padic(2);
  const Family lines = io::family_from_json(k, f.body);
  CHECK(fractional_helly_stats(k, lines, 2).alpha == 1);
  const Report t = run_op("padic:2", "witness", {{"name", "f2triple"}});
  CHECK(t.body["combination"] == json::parse(R"(["1","1","1"])"));
  CHECK_THROWS_AS(run_op("padic:2", "witness", {{"name", "nope"}, {"d", 2}}), Error);
}

TEST_CASE("reports are deterministic") {
  Scenario s;
  s.field = "padic:3";
  s.operation = "verify";
  s.payload = {{"suite", "all"}};
  s.seed = 7;
  s.trials = 5;
  const Report a = run(s), b = run(s);
  CHECK(a.body.dump() == b.body.dump());
  CHECK(a.exit_code == 0);
  CHECK(a.body["passed"] == true);
}

TEST_CASE("every operation round-trips through JSON") {
  const Field k = Field::padic(3);
  Rng rng(101);
  const ConvexSet a = random_convex(k, rng, 2), b = random_convex(k, rng, 2);
  const json sa = io::to_json(k, a), sb = io::to_json(k, b);
  const json pts = io::to_json(k, random_points(k, rng, 2, 5));
  const json fam = io::to_json(k, hyperplane_family(k, 2, 4));

  CHECK(run_op("padic:3", "member", {{"set", sa}, {"point", io::to_json(k, a.translate())}})
            .body["member"] == true);
  const Report in = run_op("padic:3", "intersect", {{"sets", {sa, sb}}});
  CHECK(equals(k, io::convex_from_json(k, in.body), intersect(k, a, b)));
  CHECK(run_op("padic:3", "flag", {{"set", sa}}).body["valid"] == true);
  const Report box = run_op("padic:3", "box", {{"set", sa}});
  const BoxPresentation bp = box_presentation(k, a);
  CHECK(box.body == io::to_json(k, bp));
  CHECK(run_op("padic:3", "caratheodory", {{"points", pts}}).body["valid"] == true);
  CHECK(run_op("padic:3", "tverberg", {{"points", pts}, {"r", 2}}).body["valid"] == true);
  const Report tv = run_op("padic:3", "tvcount",
                           {{"points", io::to_json(k, random_points(k, rng, 1, 3))}, {"r", 2}});
  CHECK(tv.body.contains("conjectureHolds"));
  CHECK(run_op("padic:3", "helly", {{"family", fam}}).body["point"].is_null());
  const Report br = run_op("padic:3", "breadth", {{"family", json::array({sa, sa})}});
  CHECK(br.body["indices"] == json::parse("[0]"));
  CHECK(run_op("padic:3", "shatter", {{"points", pts}}).body["shattered"] == false);
  CHECK(run_op("padic:3", "atoms", {{"family", fam}, {"probes", pts}}).body["atoms"] >= 1);
  CHECK(run_op("padic:3", "selection", {{"points", pts}}).body["total"] == 10);
  const Report fh = run_op("padic:3", "frachelly", {{"family", fam}, {"k", 2}});
  CHECK(fh.body["alpha"] == "1");
  CHECK(fh.body["beta"] == "1/2");
  CHECK(run_op("padic:3", "pierce", {{"family", fam}}).body["valid"] == true);
}

TEST_CASE("families keep their dimension when empty") {
  const Report r = run_op("padic:2", "helly", json::parse(R"({"family": {"dim": 2, "members": []}})"));
  CHECK(r.body["point"] == json::parse(R"(["0","0"])"));
}

TEST_CASE("malformed input raises errors") {
  CHECK_THROWS_AS(run_op("padic:2", "hull", json::parse(R"({"points": [["1//2"]]})")), ParseError);
  CHECK_THROWS_AS(run_op("padic:2", "hull", json::parse(R"({"pts": []})")), Error);
  CHECK_THROWS_AS(run_op("padic:2", "hull", json::parse(R"({"points": [["1"], ["1","2"]]})")),
                  Error);
  CHECK_THROWS_AS(run_op("padic:4", "hull", json::parse(R"({"points": [["1"]]})")), Error);
  CHECK_THROWS_AS(run_op("padic:2", "launch", json::object()), Error);
  CHECK_THROWS_AS(run_op("padic:2", "member", json::parse(R"({"set": 3, "point": ["1"]})")), Error);
  CHECK_THROWS_AS(run_op("padic:2", "verify", {{"suite", "nope"}}), Error);
}

TEST_CASE("convex set JSON round trip") {
  for (const char* sel : {"padic:5", "ratfunc:0", "ratfunc:7"}) {
    const Field k = Field::from_selector(sel);
    Rng rng(103);
    for (int t = 0; t < 20; ++t) {
      const ConvexSet c = random_convex(k, rng, 3);
      const json j = io::to_json(k, c);
      CHECK(equals(k, io::convex_from_json(k, j), c));
      CHECK(io::to_json(k, io::convex_from_json(k, j)) == j);
    }
    const json e = io::to_json(k, ConvexSet::empty(2));
    CHECK(e["empty"] == true);
    CHECK(io::convex_from_json(k, e).is_empty());
    CHECK(io::convex_from_json(k, e).dim() == 2);
  }
}
