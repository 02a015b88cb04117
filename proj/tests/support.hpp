#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "valconv/combinatorics.hpp"
#include "valconv/errors.hpp"
#include "valconv/convex.hpp"
#include "valconv/field.hpp"
#include "valconv/linalg.hpp"

namespace test {

using namespace valconv;

inline FieldElem el(const Field& k, const char* s) { return k.parse(s); }

inline Vec vec(const Field& k, std::initializer_list<const char*> xs) {
  std::vector<FieldElem> out;
  for (const char* x : xs) out.push_back(k.parse(x));
  return Vec(std::move(out));
}

inline Vec ints(const Field& k, std::initializer_list<long> xs) {
  std::vector<FieldElem> out;
  for (long x : xs) out.push_back(k.from_int(x));
  return Vec(std::move(out));
}

// The lattice pow(r) * O^d shifted by center.
inline ConvexSet ball(const Field& k, const Vec& center, std::int64_t r) {
  return quasi_ball(k, center, Delta::at_least(r));
}

inline ConvexSet line(const Field& k, const Vec& base, const Vec& direction) {
  return affine_span(k, base, {direction});
}

}  // namespace test
