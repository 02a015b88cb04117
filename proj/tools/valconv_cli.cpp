// Batch front end: one subcommand per operation, JSON payload on stdin (or
// --input), JSON report on stdout.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "valconv/errors.hpp"
#include "valconv/field.hpp"
#include "valconv/scenario.hpp"

namespace {

constexpr int kUsageError = 2;

valconv::io::json read_payload(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw valconv::Error("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return valconv::io::json::parse(text);
  } catch (const valconv::io::json::parse_error& e) {
    throw valconv::Error(std::string("invalid JSON input: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact convex geometry over valued fields"};
  app.require_subcommand(1, 1);

  valconv::Scenario scenario;
  bool compact = false;
  std::string input;
  app.add_option("--field", scenario.field, "padic:<p> or ratfunc:<q> (q = 0 for Q(t))")
      ->capture_default_str();
  app.add_option("--seed", scenario.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--trials", scenario.trials, "trials per randomized suite")->capture_default_str();
  app.add_flag("--json", compact, "compact single-line output");
  app.add_option("--input", input, "read the payload from a file instead of stdin");

  std::string suite = "all";
  std::string witness_name;
  std::size_t witness_d = 0;
  std::optional<std::size_t> witness_n;

  for (const auto& name : valconv::operations()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->fallthrough();
    if (name == "verify") {
      sub->description("run the seeded property suites");
      sub->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
    } else if (name == "witness") {
      sub->description("emit a named extremal configuration");
      sub->add_option("name", witness_name, "helly, breadth, frachelly or f2triple")->required();
      sub->add_option("d", witness_d, "dimension");
      sub->add_option("--n", witness_n, "family size for frachelly");
    } else {
      sub->description("payload JSON on stdin");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  scenario.operation = app.get_subcommands().front()->get_name();
  try {
    if (scenario.operation == "verify") {
      scenario.payload = {{"suite", suite}};
    } else if (scenario.operation == "witness") {
      scenario.payload = {{"name", witness_name}, {"d", witness_d}};
      if (witness_n) scenario.payload["n"] = *witness_n;
    } else {
      scenario.payload = read_payload(input);
    }

    const auto field = valconv::Field::from_selector(scenario.field);
    if (!field.primality_proven())
      std::cerr << "warning: characteristic of " << scenario.field
                << " is only a probable prime\n";

    const valconv::Report report = valconv::run(scenario);
    std::cout << (compact ? report.body.dump() : report.body.dump(2)) << '\n';
    return report.exit_code;
  } catch (const valconv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
