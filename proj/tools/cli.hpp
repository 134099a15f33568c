#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "wirecut/wirecut.hpp"

namespace wirecut::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,  // `verify` found a deviation above tolerance
  invalid_input = 2,
  infeasible = 3,
  resource_limit = 4,
};

/// Problem description shared by problem files and inline flags.
///
///   {"mode": "partition" | "bounds" | "allocation",
///    "length": 12, "shapes": [4, 3, "circle"],
///    "threshold": 5, "sense": "lower" | "upper",
///    "lengths": [1, 1], "side_budget": 8}
///
/// A document with a top-level "problem" key (as written by --format json)
/// is accepted too.
struct ProblemFile {
  std::string mode;
  std::optional<double> length;
  std::vector<Shape> shapes;
  std::optional<double> threshold;
  std::optional<Sense> sense;
  std::vector<double> lengths;
  std::optional<long> side_budget;
};

ProblemFile parse_problem(const nlohmann::json& doc);
nlohmann::json to_json(const ProblemFile& problem);

Shape parse_shape(const std::string& token);
std::vector<Shape> parse_shape_list(const std::string& text);

/// Runs one command line (args exclude the program name). Rendered output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wirecut::cli
