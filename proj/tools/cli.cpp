#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"

namespace wirecut::cli {
namespace {

using nlohmann::json;

json shape_to_json(const Shape& shape) {
  if (shape.is_circle()) return "circle";
  return shape.sides();
}

Shape shape_from_json(const json& value) {
  if (value.is_string()) {
    return parse_shape(value.get<std::string>());
  }
  if (value.is_number_integer()) {
    return Shape::regular(value.get<long>());
  }
  throw argument_error("a shape must be an integer side count or \"circle\", got " + value.dump());
}

Sense parse_sense(const std::string& text) {
  if (text == "lower") return Sense::lower;
  if (text == "upper") return Sense::upper;
  throw argument_error("sense must be \"lower\" or \"upper\", got \"" + text + "\"");
}

double number_field(const json& doc, const char* key) {
  const auto& value = doc.at(key);
  if (!value.is_number()) {
    throw argument_error(std::string("field \"") + key + "\" must be a number");
  }
  return value.get<double>();
}

// ---------------------------------------------------------------------------
// Problem assembly

struct Inputs {
  std::string problem_path;
  std::optional<double> length;
  std::string shapes;
  std::optional<double> area;
  std::string sense;
  std::string lengths;
  std::optional<long> budget;
  std::string format = "table";
  bool paper_face_max = false;
  std::optional<long> resolution;
};

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      throw argument_error("not a number: \"" + token + "\"");
    }
    values.push_back(value);
  }
  return values;
}

ProblemFile load_problem(const Inputs& in, const std::string& default_mode) {
  ProblemFile problem;
  if (!in.problem_path.empty()) {
    std::ifstream file(in.problem_path);
    if (!file) {
      throw argument_error("cannot open problem file " + in.problem_path);
    }
    json doc;
    try {
      doc = json::parse(file);
    } catch (const json::parse_error& e) {
      throw argument_error(std::string("problem file is not valid JSON: ") + e.what());
    }
    problem = parse_problem(doc);
  } else {
    problem.mode = default_mode;
  }
  // Inline flags override file fields.
  if (in.length) problem.length = in.length;
  if (!in.shapes.empty()) problem.shapes = parse_shape_list(in.shapes);
  if (in.area) problem.threshold = in.area;
  if (!in.sense.empty()) problem.sense = parse_sense(in.sense);
  if (!in.lengths.empty()) problem.lengths = parse_number_list(in.lengths);
  if (in.budget) problem.side_budget = in.budget;
  return problem;
}

PartitionProblem partition_of(const ProblemFile& file) {
  if (!file.length) throw argument_error("missing wire length (--length)");
  if (file.shapes.empty()) throw argument_error("missing shapes (--shapes)");
  PartitionProblem problem{*file.length, file.shapes};
  problem.validate();
  return problem;
}

BoundQuery bound_query_of(const ProblemFile& file) {
  if (!file.threshold) throw argument_error("missing area threshold (--area)");
  if (!file.sense) throw argument_error("missing sense (--sense lower|upper)");
  BoundQuery query{partition_of(file), *file.threshold, *file.sense};
  query.validate();
  return query;
}

AllocationProblem allocation_of(const ProblemFile& file) {
  if (file.lengths.empty()) throw argument_error("missing wire lengths (--lengths)");
  if (!file.side_budget) throw argument_error("missing side budget (--budget)");
  AllocationProblem problem{file.lengths, *file.side_budget};
  problem.validate();
  return problem;
}

void require_mode(const ProblemFile& file, std::initializer_list<const char*> allowed) {
  for (const char* mode : allowed) {
    if (file.mode == mode) return;
  }
  throw argument_error("problem mode \"" + file.mode + "\" does not fit this command");
}

// ---------------------------------------------------------------------------
// Rendering

json partition_json(const PartitionResult& r) {
  json out{{"lengths", r.lengths},
           {"per_shape_areas", r.per_shape_areas},
           {"total_area", r.total_area},
           {"kind", to_string(r.kind)}};
  if (r.excluded_index) out["excluded_index"] = *r.excluded_index;
  return out;
}

void partition_table(std::ostream& out, const PartitionProblem& p, const PartitionResult& r) {
  fmt::print(out, "{:<8} {:>10} {:>10}\n", "shape", "length", "area");
  for (std::size_t i = 0; i < p.shapes.size(); ++i) {
    fmt::print(out, "{:<8} {:>10.3f} {:>10.3f}\n", p.shapes[i].name(), r.lengths[i],
               r.per_shape_areas[i]);
  }
  double length_sum = 0.0;
  for (double x : r.lengths) length_sum += x;
  fmt::print(out, "{:<8} {:>10.3f} {:>10.3f}\n", "total", length_sum, r.total_area);
  fmt::print(out, "kind: {}", to_string(r.kind));
  if (r.excluded_index) fmt::print(out, " (excluded index {})", *r.excluded_index);
  fmt::print(out, "\n");
}

json optional_json(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

void emit(std::ostream& out, const ProblemFile& problem, const json& result) {
  out << json{{"problem", to_json(problem)}, {"result", result}}.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Commands

int cmd_min(const Inputs& in, std::ostream& out) {
  auto file = load_problem(in, "partition");
  require_mode(file, {"partition", "bounds"});
  const auto problem = partition_of(file);
  const auto result = minimize_partition(problem);
  if (in.format == "json") {
    emit(out, file, partition_json(result));
  } else {
    partition_table(out, problem, result);
  }
  return ok;
}

int cmd_max(const Inputs& in, std::ostream& out) {
  auto file = load_problem(in, "partition");
  require_mode(file, {"partition", "bounds"});
  const auto problem = partition_of(file);
  const auto result = in.paper_face_max ? paper_face_max(problem) : maximize_partition(problem);
  if (in.format == "json") {
    emit(out, file, partition_json(result));
  } else {
    partition_table(out, problem, result);
  }
  return ok;
}

int cmd_bounds(const Inputs& in, std::ostream& out) {
  auto file = load_problem(in, "bounds");
  require_mode(file, {"bounds", "partition"});
  file.mode = "bounds";
  const auto query = bound_query_of(file);
  const auto set = query.problem.shapes.size() == 2 ? solve_two_polygon(query)
                                                     : solve_equal_perimeter(query);
  const auto roots = bound_roots(query);
  const auto range = feasibility_range(query.problem, query.threshold);
  const EqualPerimeterQuadratic family(query.problem);

  if (in.format == "json") {
    json intervals = json::array();
    for (const auto& i : set.intervals) intervals.push_back({i.lo, i.hi});
    json result{{"intervals", intervals},
                {"domain", {0.0, family.domain_end}},
                {"roots", roots ? json{roots->first, roots->second} : json(nullptr)},
                {"feasibility",
                 {{"a_low", range.a_low},
                  {"a_high", range.a_high},
                  {"l_low", optional_json(range.l_low)},
                  {"l_high", optional_json(range.l_high)},
                  {"x_hat", optional_json(range.x_hat)}}}};
    emit(out, file, result);
    return ok;
  }

  fmt::print(out, "sense: {}   threshold: {:.3f}   domain: (0, {:.3f})\n", to_string(query.sense),
             query.threshold, family.domain_end);
  if (roots) {
    fmt::print(out, "roots: {:.3f} {:.3f}\n", roots->first, roots->second);
  } else {
    fmt::print(out, "roots: none\n");
  }
  fmt::print(out, "feasible band: [{:.3f}, {:.3f}]\n", range.a_low, range.a_high);
  fmt::print(out, "solution: ");
  if (set.empty()) {
    fmt::print(out, "empty");
  }
  for (std::size_t i = 0; i < set.intervals.size(); ++i) {
    fmt::print(out, "{}({:.3f}, {:.3f})", i ? " U " : "", set.intervals[i].lo, set.intervals[i].hi);
  }
  fmt::print(out, "\n");
  return ok;
}

json allocation_json(const AllocationResult& r) {
  return json{{"sides", r.sides},
              {"per_wire_areas", r.per_wire_areas},
              {"total_area", r.total_area},
              {"residuals", r.residuals}};
}

int cmd_allocate(const Inputs& in, std::ostream& out) {
  auto file = load_problem(in, "allocation");
  require_mode(file, {"allocation"});
  const auto problem = allocation_of(file);
  const auto result = optimize_allocation(problem);
  if (in.format == "json") {
    emit(out, file, allocation_json(result));
    return ok;
  }
  fmt::print(out, "{:<6} {:>10} {:>6} {:>10}\n", "wire", "length", "sides", "area");
  for (std::size_t i = 0; i < result.sides.size(); ++i) {
    fmt::print(out, "{:<6} {:>10.3f} {:>6} {:>10.3f}\n", i + 1, problem.wire_lengths[i],
               result.sides[i], result.per_wire_areas[i]);
  }
  fmt::print(out, "total area: {:.3f}\n", result.total_area);
  fmt::print(out, "stationarity residuals:");
  for (double r : result.residuals) fmt::print(out, " {:.3f}", r);
  fmt::print(out, "\n");
  return ok;
}

// One closed-form vs brute-force comparison.
struct Check {
  std::string name;
  double closed_form;
  double oracle;
  double deviation;
  double tolerance;
  bool passed;
};

long default_resolution(std::size_t shapes) {
  switch (shapes) {
    case 2: return 10000;
    case 3: return 1000;
    case 4: return 200;
    case 5: return 60;
    default: return 30;
  }
}

std::vector<Check> verify_partition(const PartitionProblem& problem, long resolution) {
  const oracle::GridSpec grid{resolution};
  std::vector<Check> checks;

  const auto closed_min = minimize_partition(problem);
  const auto lattice_min = oracle::grid_min(problem, grid);
  const double step = problem.total_length / static_cast<double>(resolution);
  double curvature = 0.0;
  for (const auto& s : problem.shapes) curvature += 1.0 / (4.0 * sigma(s));
  const double bound = step * step * curvature;
  const double slack = 1e-12 * closed_min.total_area;
  const double dev_min = lattice_min.total_area - closed_min.total_area;
  checks.push_back({"minimum", closed_min.total_area, lattice_min.total_area, dev_min, bound,
                    dev_min >= -slack && dev_min <= bound + slack});

  const auto vertex_max = maximize_partition(problem);
  const auto lattice_max = oracle::grid_max(problem, grid);
  const double dev_max = std::abs(lattice_max.total_area - vertex_max.total_area);
  const double tol_max = 1e-9 * vertex_max.total_area;
  checks.push_back({"maximum", vertex_max.total_area, lattice_max.total_area, dev_max, tol_max,
                    dev_max <= tol_max});
  return checks;
}

std::vector<Check> verify_bounds(const BoundQuery& query) {
  std::vector<Check> checks;
  const auto set = solve_equal_perimeter(query);
  const EqualPerimeterQuadratic family(query.problem);
  const double end = family.domain_end;
  const double guard = 1e-6 * query.problem.total_length;

  // Direct evaluation on a dense sample of the domain.
  constexpr int samples = 2000;
  int violations = 0;
  for (int s = 1; s < samples; ++s) {
    const double x = end * s / samples;
    bool near_edge = false;
    for (const auto& i : set.intervals) {
      near_edge = near_edge || std::abs(x - i.lo) < guard || std::abs(x - i.hi) < guard;
    }
    if (near_edge) continue;
    const double total =
        total_area(query.problem.shapes, equal_perimeter_lengths(query.problem, x));
    const bool holds = query.sense == Sense::lower ? total > query.threshold
                                                   : total < query.threshold;
    if (holds != set.contains(x)) ++violations;
  }
  checks.push_back({"membership", 0.0, static_cast<double>(violations),
                    static_cast<double>(violations), 0.0, violations == 0});

  double worst = 0.0;
  for (const auto& i : set.intervals) {
    for (double x : {i.lo, i.hi}) {
      if (x <= 0.0 || x >= end) continue;
      const double total =
          total_area(query.problem.shapes, equal_perimeter_lengths(query.problem, x));
      worst = std::max(worst, std::abs(total - query.threshold) / query.threshold);
    }
  }
  checks.push_back({"endpoint-residual", query.threshold, query.threshold * (1.0 + worst), worst,
                    1e-6, worst <= 1e-6});

  const auto direct = bound_roots(query);
  const auto weighted = closed_form_roots(query);
  if (direct && weighted) {
    const double dev = std::max(std::abs(direct->first - weighted->first),
                                std::abs(direct->second - weighted->second));
    const double tol = 1e-9 * query.problem.total_length;
    checks.push_back({"closed-form-roots", direct->second, weighted->second, dev, tol, dev <= tol});
  }
  return checks;
}

std::vector<Check> verify_allocation(const AllocationProblem& problem) {
  const auto fast = optimize_allocation(problem);
  const auto slow = oracle::enumerate_allocations(problem);
  const bool same = fast.sides == slow.sides && fast.total_area == slow.total_area;
  return {{"allocation", fast.total_area, slow.total_area,
           std::abs(fast.total_area - slow.total_area), 0.0, same}};
}

int cmd_verify(const Inputs& in, std::ostream& out) {
  auto file = load_problem(in, in.lengths.empty() ? (in.area ? "bounds" : "partition")
                                                  : "allocation");
  std::vector<Check> checks;
  if (file.mode == "allocation") {
    checks = verify_allocation(allocation_of(file));
  } else if (file.mode == "bounds") {
    const auto query = bound_query_of(file);
    checks = verify_partition(query.problem,
                              in.resolution.value_or(default_resolution(query.problem.shapes.size())));
    const auto bound_checks = verify_bounds(query);
    checks.insert(checks.end(), bound_checks.begin(), bound_checks.end());
  } else if (file.mode == "partition") {
    const auto problem = partition_of(file);
    checks = verify_partition(problem,
                              in.resolution.value_or(default_resolution(problem.shapes.size())));
  } else {
    throw argument_error("unknown problem mode \"" + file.mode + "\"");
  }

  const bool all_passed =
      std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (in.format == "json") {
    json list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"check", c.name},
                      {"closed_form", c.closed_form},
                      {"oracle", c.oracle},
                      {"deviation", c.deviation},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
    }
    emit(out, file, json{{"checks", list}, {"passed", all_passed}});
  } else {
    fmt::print(out, "{:<18} {:>14} {:>14} {:>12} {:>12}  {}\n", "check", "closed-form", "oracle",
               "deviation", "tolerance", "status");
    for (const auto& c : checks) {
      fmt::print(out, "{:<18} {:>14.6f} {:>14.6f} {:>12.3e} {:>12.3e}  {}\n", c.name,
                 c.closed_form, c.oracle, c.deviation, c.tolerance, c.passed ? "ok" : "FAIL");
    }
  }
  return all_passed ? ok : check_failed;
}

}  // namespace

// ---------------------------------------------------------------------------

Shape parse_shape(const std::string& token) {
  if (token == "circle") return Shape::circle();
  std::size_t used = 0;
  long sides = 0;
  try {
    sides = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw argument_error("a shape must be an integer side count or \"circle\", got \"" + token +
                         "\"");
  }
  return Shape::regular(sides);
}

std::vector<Shape> parse_shape_list(const std::string& text) {
  std::vector<Shape> shapes;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    shapes.push_back(parse_shape(token));
  }
  return shapes;
}

ProblemFile parse_problem(const json& doc_in) {
  const json& doc = doc_in.contains("problem") ? doc_in.at("problem") : doc_in;
  if (!doc.is_object()) throw argument_error("problem must be a JSON object");
  if (!doc.contains("mode") || !doc.at("mode").is_string()) {
    throw argument_error("problem needs a string \"mode\"");
  }
  ProblemFile problem;
  problem.mode = doc.at("mode").get<std::string>();
  if (problem.mode != "partition" && problem.mode != "bounds" && problem.mode != "allocation") {
    throw argument_error("unknown problem mode \"" + problem.mode + "\"");
  }
  if (doc.contains("length")) problem.length = number_field(doc, "length");
  if (doc.contains("shapes")) {
    if (!doc.at("shapes").is_array()) throw argument_error("\"shapes\" must be an array");
    for (const auto& s : doc.at("shapes")) problem.shapes.push_back(shape_from_json(s));
  }
  if (doc.contains("threshold")) problem.threshold = number_field(doc, "threshold");
  if (doc.contains("sense")) {
    if (!doc.at("sense").is_string()) throw argument_error("\"sense\" must be a string");
    problem.sense = parse_sense(doc.at("sense").get<std::string>());
  }
  if (doc.contains("lengths")) {
    if (!doc.at("lengths").is_array()) throw argument_error("\"lengths\" must be an array");
    for (const auto& v : doc.at("lengths")) {
      if (!v.is_number()) throw argument_error("\"lengths\" must hold numbers");
      problem.lengths.push_back(v.get<double>());
    }
  }
  if (doc.contains("side_budget")) {
    if (!doc.at("side_budget").is_number_integer()) {
      throw argument_error("\"side_budget\" must be an integer");
    }
    problem.side_budget = doc.at("side_budget").get<long>();
  }
  return problem;
}

json to_json(const ProblemFile& problem) {
  json doc{{"mode", problem.mode}};
  if (problem.length) doc["length"] = *problem.length;
  if (!problem.shapes.empty()) {
    json shapes = json::array();
    for (const auto& s : problem.shapes) shapes.push_back(shape_to_json(s));
    doc["shapes"] = shapes;
  }
  if (problem.threshold) doc["threshold"] = *problem.threshold;
  if (problem.sense) doc["sense"] = to_string(*problem.sense);
  if (!problem.lengths.empty()) doc["lengths"] = problem.lengths;
  if (problem.side_budget) doc["side_budget"] = *problem.side_budget;
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Area-optimal cutting of wires into regular polygons"};
  app.require_subcommand(1);
  Inputs in;

  auto add_common = [&in](CLI::App* cmd) {
    cmd->add_option("--problem", in.problem_path, "JSON problem file");
    cmd->add_option("--format", in.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
  };
  auto add_partition = [&in](CLI::App* cmd) {
    cmd->add_option("--length", in.length, "Total wire length");
    cmd->add_option("--shapes", in.shapes, "Comma-separated side counts or 'circle'");
  };

  auto* min = app.add_subcommand("min", "Minimum-area partition");
  add_common(min);
  add_partition(min);

  auto* max = app.add_subcommand("max", "Maximum-area partition");
  add_common(max);
  add_partition(max);
  max->add_flag("--paper-face-max", in.paper_face_max,
                "Report the best face-stationary point instead of the vertex maximum");

  auto* bounds = app.add_subcommand("bounds", "Cuts keeping the total area above/below a threshold");
  add_common(bounds);
  add_partition(bounds);
  bounds->add_option("--area", in.area, "Area threshold");
  bounds->add_option("--sense", in.sense, "lower (area > threshold) or upper (area < threshold)")
      ->check(CLI::IsMember({"lower", "upper"}));

  auto* allocate = app.add_subcommand("allocate", "Distribute a side budget across wires");
  add_common(allocate);
  allocate->add_option("--lengths", in.lengths, "Comma-separated wire lengths");
  allocate->add_option("--budget", in.budget, "Total number of sides");

  auto* verify = app.add_subcommand("verify", "Compare closed forms against brute force");
  add_common(verify);
  add_partition(verify);
  verify->add_option("--area", in.area, "Area threshold (bounds checks)");
  verify->add_option("--sense", in.sense, "lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}));
  verify->add_option("--lengths", in.lengths, "Comma-separated wire lengths (allocation)");
  verify->add_option("--budget", in.budget, "Total number of sides (allocation)");
  verify->add_option("--resolution", in.resolution, "Lattice steps per dimension")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }

  try {
    if (min->parsed()) return cmd_min(in, out);
    if (max->parsed()) return cmd_max(in, out);
    if (bounds->parsed()) return cmd_bounds(in, out);
    if (allocate->parsed()) return cmd_allocate(in, out);
    return cmd_verify(in, out);
  } catch (const argument_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return invalid_input;
  } catch (const infeasible_error& e) {
    fmt::print(err, "infeasible: {}\n", e.what());
    return infeasible;
  } catch (const resource_error& e) {
    fmt::print(err, "resource limit: {}\n", e.what());
    return resource_limit;
  } catch (const nlohmann::json::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return invalid_input;
  }
}

}  // namespace wirecut::cli
