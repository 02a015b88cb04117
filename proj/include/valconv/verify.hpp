#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "valconv/random.hpp"

namespace valconv {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  std::string detail;  // first failure, if any
};

using SuiteFn = SuiteResult (*)(const Field&, Rng&, std::size_t trials);

struct SuiteEntry {
  const char* name;
  SuiteFn run;
};

// Randomized property suites, in report order.
const std::vector<SuiteEntry>& suites();

// Runs one suite by name, or every suite for "all". Each suite draws from its
// own generator seeded with seed + its position, so a suite's verdict does not
// depend on which others ran. Throws Error for an unknown name.
std::vector<SuiteResult> run_suites(const Field& k, std::string_view which, std::uint64_t seed,
                                    std::size_t trials);

// nu(sum c_i u_i) == min_i(nu(c_i) + gamma_i) for `samples` random tuples.
bool nu_orthogonal_on_samples(const Field& k, Rng& rng, const OrthoBasis& b, std::size_t samples);
std::vector<std::int64_t> gamma_multiset(const OrthoBasis& b);
// Generators of m re-presented through a random O-unimodular matrix.
std::vector<Vec> unimodular_representation(const Field& k, Rng& rng, const MixedModule& m);
// Point that is inside the module-with-translate about half the time.
Vec sample_probe(const Field& k, Rng& rng, const ConvexSet& c);

}  // namespace valconv
