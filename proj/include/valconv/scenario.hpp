#pragma once

#include <cstdint>
#include <string>

#include "valconv/json_io.hpp"

namespace valconv {

// One batch request: a field, an operation, its JSON payload, and the
// randomness controls used by `verify`.
struct Scenario {
  std::string field = "padic:2";
  std::string operation;
  io::json payload = io::json::object();
  std::uint64_t seed = 0;
  std::size_t trials = 100;
};

struct Report {
  io::json body;
  int exit_code = 0;  // 0 ok, 1 property violation / failed certificate
};

// Operation names accepted by run().
const std::vector<std::string>& operations();

// Executes the scenario. Throws Error (including ParseError) on malformed
// input; callers map that to exit code 2.
Report run(const Scenario& s);

}  // namespace valconv
