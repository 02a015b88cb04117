#include "valconv/scenario.hpp"

#include <functional>
#include <map>

#include "valconv/errors.hpp"
#include "valconv/verify.hpp"

namespace valconv {

namespace {

using io::json;
using Handler = std::function<Report(const Field&, const Scenario&)>;

const json& need(const json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key))
    throw Error(std::string("payload is missing '") + key + "'");
  return payload.at(key);
}

std::size_t need_count(const json& payload, const char* key) {
  const json& v = need(payload, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw Error(std::string("'") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<Vec> points_of(const Field& k, const json& payload) {
  return io::points_from_json(k, need(payload, "points"));
}

json index_list(const std::vector<std::size_t>& idx) { return json(idx); }

Report ok(json body) { return {std::move(body), 0}; }
Report checked(json body, bool valid) {
  body["valid"] = valid;
  return {std::move(body), valid ? 0 : 1};
}

Report op_hull(const Field& k, const Scenario& s) {
  const auto pts = points_of(k, s.payload);
  const std::size_t d = s.payload.contains("dim") ? need_count(s.payload, "dim")
                                                  : (pts.empty() ? 0 : pts.front().dim());
  return ok(io::to_json(k, conv_hull(k, pts, d)));
}

Report op_member(const Field& k, const Scenario& s) {
  const ConvexSet c = io::convex_from_json(k, need(s.payload, "set"));
  const Vec x = io::vec_from_json(k, need(s.payload, "point"));
  return ok({{"member", contains(k, c, x)}});
}

Report op_intersect(const Field& k, const Scenario& s) {
  const Family fam = io::family_from_json(k, need(s.payload, "sets"));
  if (fam.size() == 0) throw Error("intersect needs at least one set");
  return ok(io::to_json(k, intersect_all(k, fam)));
}

Report op_flag(const Field& k, const Scenario& s) {
  const ConvexSet c = io::convex_from_json(k, need(s.payload, "set"));
  const FlagForm f = flag_decompose(k, c);
  return checked(io::to_json(k, f), equals(k, flag_to_convex(k, f), c));
}

Report op_box(const Field& k, const Scenario& s) {
  const ConvexSet c = io::convex_from_json(k, need(s.payload, "set"));
  return ok(io::to_json(k, box_presentation(k, c)));
}

Report op_radon(const Field& k, const Scenario& s) {
  const auto pts = points_of(k, s.payload);
  const RadonCertificate cert = radon_point(k, pts);
  return checked(io::to_json(k, cert), validate_radon(k, pts, cert));
}

Report op_caratheodory(const Field& k, const Scenario& s) {
  const auto pts = points_of(k, s.payload);
  const auto keep = caratheodory_reduce(k, pts);
  std::vector<Vec> sub;
  for (auto i : keep) sub.push_back(pts[i]);
  const bool valid = keep.size() <= pts.front().dim() + 1 &&
                     equals(k, conv_hull(k, sub), conv_hull(k, pts));
  return checked({{"indices", index_list(keep)}, {"points", io::to_json(k, sub)}}, valid);
}

Report op_tverberg(const Field& k, const Scenario& s) {
  const auto pts = points_of(k, s.payload);
  const std::size_t r = need_count(s.payload, "r");
  const TverbergPartition p = tverberg_partition(k, pts, r);
  json parts = json::array();
  for (const auto& part : p.parts) {
    std::vector<Vec> sub;
    for (auto i : part) sub.push_back(pts[i]);
    parts.push_back({{"indices", index_list(part)}, {"points", io::to_json(k, sub)}});
  }
  return checked({{"parts", parts}}, validate_tverberg(k, pts, r, p));
}

Report op_tvcount(const Field& k, const Scenario& s) {
  const auto pts = points_of(k, s.payload);
  const std::size_t r = need_count(s.payload, "r");
  const mpz_class count = count_tverberg_partitions(k, pts, r);
  const mpz_class bound = tverberg_count_bound(pts.front().dim(), r);
  // The lower bound is conjectural: a shortfall is reported, not an error.
  return ok({{"count", count.get_str()}, {"bound", bound.get_str()}, {"conjectureHolds", count >= bound}});
}

Report op_helly(const Field& k, const Scenario& s) {
  const Family fam = io::family_from_json(k, need(s.payload, "family"));
  const auto p = helly_point(k, fam);
  if (!p) return ok({{"point", nullptr}});
  bool valid = true;
  for (const auto& m : fam.members) valid = valid && contains(k, m, *p);
  return checked({{"point", io::to_json(k, *p)}}, valid);
}

Report op_breadth(const Field& k, const Scenario& s) {
  const Family fam = io::family_from_json(k, need(s.payload, "family"));
  const auto idx = breadth_reduce(k, fam);
  const bool valid = idx.size() <= fam.dim &&
                     equals(k, intersect_indices(k, fam, idx), intersect_all(k, fam));
  return checked({{"indices", index_list(idx)}}, valid);
}

Report op_shatter(const Field& k, const Scenario& s) {
  const auto pts = points_of(k, s.payload);
  const ShatterReport r = is_shattered(k, pts);
  if (r.shattered) return ok({{"shattered", true}});
  std::vector<Vec> sub;
  for (auto i : r.subset) sub.push_back(pts[i]);
  const bool valid = contains(k, conv_hull(k, sub, pts.front().dim()), pts[*r.violation]);
  return checked({{"shattered", false}, {"subset", index_list(r.subset)}, {"violation", *r.violation}},
                 valid);
}

Report op_atoms(const Field& k, const Scenario& s) {
  const Family fam = io::family_from_json(k, need(s.payload, "family"));
  const auto probes = io::points_from_json(k, need(s.payload, "probes"));
  return ok({{"atoms", dual_atoms(k, fam, probes)}});
}

Report op_selection(const Field& k, const Scenario& s) {
  const auto pts = points_of(k, s.payload);
  const SelectionResult r = selection_point(k, pts);
  return ok({{"index", r.index}, {"point", io::to_json(k, r.point)}, {"count", r.count}, {"total", r.total}});
}

Report op_frachelly(const Field& k, const Scenario& s) {
  const Family fam = io::family_from_json(k, need(s.payload, "family"));
  const auto st = fractional_helly_stats(k, fam, need_count(s.payload, "k"));
  return ok({{"alpha", st.alpha.get_str()}, {"beta", st.beta.get_str()}});
}

Report op_pierce(const Field& k, const Scenario& s) {
  const Family fam = io::family_from_json(k, need(s.payload, "family"));
  const auto pts = pierce(k, fam);
  bool valid = true;
  for (const auto& m : fam.members) {
    bool hit = false;
    for (const auto& p : pts) hit = hit || contains(k, m, p);
    valid = valid && hit;
  }
  return checked({{"points", io::to_json(k, pts)}}, valid);
}

// The residue-field triple: three points with a coordinate in the maximal
// ideal whose (-1, 1, 1) combination has none.
std::vector<Vec> residue_triple(const Field& k) {
  const FieldElem z = k.zero(), o = k.one();
  return {Vec{z, z, z}, Vec{o, z, z}, Vec{z, o, o}};
}

Report op_witness(const Field& k, const Scenario& s) {
  const std::string name = need(s.payload, "name").get<std::string>();
  if (name == "f2triple") {
    const auto pts = residue_triple(k);
    const FieldElem m1 = -k.one();
    const Vec combo = m1 * pts[0] + pts[1] + pts[2];
    return ok({{"points", io::to_json(k, pts)},
               {"coefficients", {k.render(m1), "1", "1"}},
               {"combination", io::to_json(k, combo)}});
  }
  const std::size_t d = need_count(s.payload, "d");
  if (d == 0) throw Error("witness dimension must be positive");
  if (name == "helly") return ok(io::to_json(k, helly_lower_bound_witness(k, d)));
  if (name == "breadth" || name == "hyperplanes") return ok(io::to_json(k, coordinate_hyperplanes(k, d)));
  if (name == "frachelly") {
    const std::size_t n = s.payload.contains("n") ? need_count(s.payload, "n") : 2 * (d + 1);
    return ok(io::to_json(k, hyperplane_family(k, d, n)));
  }
  throw Error("unknown witness '" + name + "'");
}

Report op_verify(const Field& k, const Scenario& s) {
  const std::string which = s.payload.value("suite", std::string("all"));
  const auto results = run_suites(k, which, s.seed, s.trials);
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    json item{{"suite", r.name}, {"passed", r.passed}, {"trials", r.trials}};
    if (!r.detail.empty()) item["detail"] = r.detail;
    arr.push_back(std::move(item));
    all = all && r.passed;
  }
  return {{{"field", k.selector()}, {"seed", s.seed}, {"trials", s.trials}, {"results", arr}, {"passed", all}},
          all ? 0 : 1};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"hull", op_hull},         {"member", op_member},   {"intersect", op_intersect},
      {"flag", op_flag},         {"box", op_box},         {"radon", op_radon},
      {"caratheodory", op_caratheodory}, {"tverberg", op_tverberg}, {"tvcount", op_tvcount},
      {"helly", op_helly},       {"breadth", op_breadth}, {"shatter", op_shatter},
      {"atoms", op_atoms},       {"selection", op_selection}, {"frachelly", op_frachelly},
      {"pierce", op_pierce},     {"witness", op_witness}, {"verify", op_verify},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& operations() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run(const Scenario& s) {
  const Field k = Field::from_selector(s.field);
  const auto it = handlers().find(s.operation);
  if (it == handlers().end()) throw Error("unknown operation '" + s.operation + "'");
  try {
    return it->second(k, s);
  } catch (const io::json::exception& e) {
    throw Error(std::string("malformed payload: ") + e.what());
  }
}

}  // namespace valconv
