#pragma once

#include <json.hpp>

#include "valconv/combinatorics.hpp"
#include "valconv/convex.hpp"

namespace valconv::io {

using nlohmann::json;

// Elements are strings in the field's element grammar; vectors are arrays of
// element strings.
json to_json(const Field& k, const FieldElem& x);
json to_json(const Field& k, const Vec& v);
json to_json(const Field& k, std::span<const Vec> vs);
json to_json(const Field& k, const Mat& m);  // array of rows
// {"translate":[...], "free":[[...]], "integral":[[...]]} or
// {"empty": true, "dim": d}.
json to_json(const Field& k, const ConvexSet& c);
// Families decode from an array of sets or {"dim": d, "members": [...]}.
json to_json(const Field& k, const Family& f);
json to_json(const Delta& d);  // "full" | {"atLeast": g} | "onlyInfinity"
json to_json(const Field& k, const FlagForm& f);
json to_json(const Field& k, const BoxPresentation& b);
json to_json(const Field& k, const RadonCertificate& c);

// Decoders throw Error on malformed input and ParseError on bad elements.
FieldElem elem_from_json(const Field& k, const json& j);
Vec vec_from_json(const Field& k, const json& j);
std::vector<Vec> points_from_json(const Field& k, const json& j);
ConvexSet convex_from_json(const Field& k, const json& j);
Family family_from_json(const Field& k, const json& j);
Delta delta_from_json(const json& j);
FlagForm flag_from_json(const Field& k, const json& j);
RadonCertificate radon_from_json(const Field& k, const json& j);

}  // namespace valconv::io
