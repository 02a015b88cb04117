#include "valconv/json_io.hpp"

#include "valconv/errors.hpp"

namespace valconv::io {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t dim_from(const json& j, std::size_t fallback) {
  if (j.is_object() && j.contains("dim")) {
    if (!j.at("dim").is_number_unsigned()) throw Error("'dim' must be a nonnegative integer");
    return j.at("dim").get<std::size_t>();
  }
  return fallback;
}

}  // namespace

json to_json(const Field& k, const FieldElem& x) { return k.render(x); }

json to_json(const Field& k, const Vec& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(k.render(v[i]));
  return out;
}

json to_json(const Field& k, std::span<const Vec> vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(k, v));
  return out;
}

json to_json(const Field& k, const Mat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(k, m.row(r)));
  return out;
}

json to_json(const Field& k, const ConvexSet& c) {
  if (c.is_empty()) return {{"empty", true}, {"dim", c.dim()}};
  const MixedModule& m = c.module();
  return {{"translate", to_json(k, c.translate())},
          {"free", to_json(k, std::span<const Vec>(m.free_basis()))},
          {"integral", to_json(k, std::span<const Vec>(m.lattice().vectors))}};
}

json to_json(const Field& k, const Family& f) {
  json out = json::array();
  for (const auto& m : f.members) out.push_back(to_json(k, m));
  return out;
}

json to_json(const Delta& d) {
  switch (d.kind) {
    case Delta::Kind::Full: return "full";
    case Delta::Kind::AtLeast: return {{"atLeast", d.gamma}};
    case Delta::Kind::OnlyInfinity: return "onlyInfinity";
  }
  return nullptr;
}

json to_json(const Field& k, const FlagForm& f) {
  json entries = json::array();
  for (const auto& e : f.entries)
    entries.push_back({{"vector", to_json(k, e.vector)}, {"delta", to_json(e.delta)}});
  return {{"dim", f.dim}, {"translate", to_json(k, f.translate)}, {"entries", entries}};
}

json to_json(const Field& k, const BoxPresentation& b) {
  json deltas = json::array();
  for (const auto& d : b.deltas) deltas.push_back(to_json(d));
  return {{"map", to_json(k, b.map)}, {"translate", to_json(k, b.translate)}, {"deltas", deltas}};
}

json to_json(const Field& k, const RadonCertificate& c) {
  json coeffs = json::array();
  for (const auto& x : c.coefficients) coeffs.push_back(k.render(x));
  return {{"index", c.index}, {"coefficients", coeffs}};
}

FieldElem elem_from_json(const Field& k, const json& j) {
  if (j.is_string()) return k.parse(j.get<std::string>());
  if (j.is_number_integer()) return k.from_int(j.get<long>());
  throw Error("field element must be a string");
}

Vec vec_from_json(const Field& k, const json& j) {
  if (!j.is_array()) throw Error("vector must be an array");
  std::vector<FieldElem> x;
  for (const auto& e : j) x.push_back(elem_from_json(k, e));
  return Vec(std::move(x));
}

std::vector<Vec> points_from_json(const Field& k, const json& j) {
  if (!j.is_array()) throw Error("point list must be an array");
  std::vector<Vec> out;
  for (const auto& p : j) {
    out.push_back(vec_from_json(k, p));
    if (out.back().dim() != out.front().dim()) throw DimensionMismatch("point list");
  }
  return out;
}

ConvexSet convex_from_json(const Field& k, const json& j) {
  if (!j.is_object()) throw Error("convex set must be an object");
  if (j.value("empty", false)) return ConvexSet::empty(dim_from(j, 0));
  Vec t = vec_from_json(k, field_of(j, "translate"));
  const std::size_t d = t.dim();
  std::vector<Vec> free = j.contains("free") ? points_from_json(k, j.at("free")) : std::vector<Vec>{};
  std::vector<Vec> integral =
      j.contains("integral") ? points_from_json(k, j.at("integral")) : std::vector<Vec>{};
  return ConvexSet(std::move(t), MixedModule(k, d, std::move(free), std::move(integral)));
}

Family family_from_json(const Field& k, const json& j) {
  if (j.is_object()) {
    Family fam = family_from_json(k, field_of(j, "members"));
    fam.dim = dim_from(j, fam.dim);
    for (const auto& m : fam.members)
      if (m.dim() != fam.dim) throw DimensionMismatch("family");
    return fam;
  }
  if (!j.is_array()) throw Error("family must be an array of convex sets");
  Family fam;
  for (const auto& m : j) {
    fam.members.push_back(convex_from_json(k, m));
    if (fam.members.back().dim() != fam.members.front().dim()) throw DimensionMismatch("family");
  }
  if (!fam.members.empty()) fam.dim = fam.members.front().dim();
  return fam;
}

Delta delta_from_json(const json& j) {
  if (j == "full") return Delta::full();
  if (j == "onlyInfinity") return Delta::only_infinity();
  if (j.is_object() && j.contains("atLeast") && j.at("atLeast").is_number_integer())
    return Delta::at_least(j.at("atLeast").get<std::int64_t>());
  throw Error("unknown delta descriptor");
}

FlagForm flag_from_json(const Field& k, const json& j) {
  FlagForm f;
  f.translate = vec_from_json(k, field_of(j, "translate"));
  f.dim = f.translate.dim();
  for (const auto& e : field_of(j, "entries"))
    f.entries.push_back({vec_from_json(k, field_of(e, "vector")), delta_from_json(field_of(e, "delta"))});
  return f;
}

RadonCertificate radon_from_json(const Field& k, const json& j) {
  RadonCertificate c;
  c.index = field_of(j, "index").get<std::size_t>();
  for (const auto& x : field_of(j, "coefficients")) c.coefficients.push_back(elem_from_json(k, x));
  return c;
}

}  // namespace valconv::io
