#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "extrema.hpp"
#include "geometry.hpp"

namespace wirecut {

/// lower: find cuts where the total area exceeds the threshold.
/// upper: find cuts where the total area stays below it.
enum class Sense { lower, upper };

inline std::string to_string(Sense sense) { return sense == Sense::lower ? "lower" : "upper"; }

/// Open interval (lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const noexcept { return lo < x && x < hi; }
  double width() const noexcept { return hi - lo; }
};

/// Ascending, pairwise disjoint open intervals.
struct IntervalSet {
  std::vector<Interval> intervals;

  bool empty() const noexcept { return intervals.empty(); }

  bool contains(double x) const noexcept {
    return std::any_of(intervals.begin(), intervals.end(),
                       [x](const Interval& i) { return i.contains(x); });
  }
};

/// Threshold query over the one-parameter family of cuts in which the first
/// k shapes all get perimeter x and the last gets L - kx. With two shapes
/// this is the general single cut: the first shape gets x, the second L - x.
struct BoundQuery {
  PartitionProblem problem;
  double threshold = 0.0;
  Sense sense = Sense::lower;

  void validate() const {
    problem.validate();
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
      throw argument_error("area threshold must be positive and finite");
    }
  }
};

struct FeasibilityRange {
  double a_low = 0.0;   // smallest total area reachable along the family
  double a_high = 0.0;  // total area at x = 0 (whole wire to the last shape)
  // Wire-length band for a given threshold: l_low <= L <= l_high holds
  // exactly when a_low <= threshold <= a_high.
  std::optional<double> l_low;
  std::optional<double> l_high;
  // Half-width of the root pair around the two-shape minimizer.
  std::optional<double> x_hat;
};

/// Total area along the family as a quadratic a x^2 + b x + c on [0, L/k].
struct EqualPerimeterQuadratic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double domain_end = 0.0;

  explicit EqualPerimeterQuadratic(const PartitionProblem& problem) {
    problem.validate();
    const auto k = static_cast<double>(problem.shapes.size() - 1);
    const double L = problem.total_length;
    const double last = sigma(problem.shapes.back());
    double inverse_sum = 0.0;
    for (std::size_t i = 0; i + 1 < problem.shapes.size(); ++i) {
      inverse_sum += 1.0 / sigma(problem.shapes[i]);
    }
    a = (inverse_sum + k * k / last) / 4.0;
    b = -L * k / (2.0 * last);
    c = L * L / (4.0 * last);
    domain_end = L / k;
  }

  double operator()(double x) const noexcept { return (a * x + b) * x + c; }
  double vertex() const noexcept { return -b / (2.0 * a); }
  double minimum() const noexcept { return c - b * b / (4.0 * a); }
};

/// Piece lengths (x, ..., x, L - kx) for the equal-perimeter family.
inline std::vector<double> equal_perimeter_lengths(const PartitionProblem& problem, double x) {
  const std::size_t k = problem.shapes.size() - 1;
  std::vector<double> lengths(k, x);
  lengths.push_back(problem.total_length - static_cast<double>(k) * x);
  return lengths;
}

/// Real roots x- <= x+ of total(x) = threshold, unclipped; nullopt if the
/// threshold is below the family minimum.
inline std::optional<std::pair<double, double>> bound_roots(const BoundQuery& query) {
  query.validate();
  const EqualPerimeterQuadratic q(query.problem);
  const double c = q.c - query.threshold;
  const double disc = q.b * q.b - 4.0 * q.a * c;
  if (disc < 0.0) {
    return std::nullopt;
  }
  // b < 0 always, so -b + sqrt(disc) has no cancellation.
  const double big = (-q.b + std::sqrt(disc)) / (2.0 * q.a);
  const double small = big != 0.0 ? c / (q.a * big) : 0.0;
  return std::pair{std::min(small, big), std::max(small, big)};
}

/// Roots from the weighted closed form (alpha_l = beta_l = 1 for the first k
/// shapes, alpha = k^2 and beta = 0 for the last), written with 1/sigma in
/// place of tan(theta)/n so that the circle is admissible. Independent of
/// bound_roots(); kept for cross-checking.
inline std::optional<std::pair<double, double>> closed_form_roots(const BoundQuery& query) {
  query.validate();
  const auto& shapes = query.problem.shapes;
  const std::size_t count = shapes.size();
  const auto k = static_cast<double>(count - 1);
  const double L = query.problem.total_length;
  const double t_last = 1.0 / sigma(shapes.back());
  double alpha_sum = 0.0;
  double beta_sum = 0.0;
  for (std::size_t l = 0; l < count; ++l) {
    const double t = 1.0 / sigma(shapes[l]);
    const bool last = l + 1 == count;
    alpha_sum += (last ? k * k : 1.0) * t;
    beta_sum += (last ? 0.0 : 1.0) * t;
  }
  const double radicand = 4.0 * query.threshold * alpha_sum - L * L * t_last * beta_sum;
  if (radicand < 0.0) {
    return std::nullopt;
  }
  const double centre = L * k * t_last;
  const double spread = std::sqrt(radicand);
  return std::pair{(centre - spread) / alpha_sum, (centre + spread) / alpha_sum};
}

/// Feasibility diagnostics for the family. Pass a threshold to also get the
/// wire-length band and, for two shapes, the half-width x_hat.
inline FeasibilityRange feasibility_range(const PartitionProblem& problem,
                                          std::optional<double> threshold = std::nullopt) {
  const EqualPerimeterQuadratic q(problem);
  FeasibilityRange range;
  range.a_low = q.minimum();
  range.a_high = q.c;
  if (!threshold) {
    return range;
  }
  if (!(*threshold > 0.0)) {
    throw argument_error("area threshold must be positive");
  }
  const double L = problem.total_length;
  // Both areas scale as L^2, so the length at which each equals the
  // threshold follows directly.
  range.l_low = L * std::sqrt(*threshold / range.a_high);
  range.l_high = L * std::sqrt(*threshold / range.a_low);
  if (problem.shapes.size() == 2) {
    const double sigma_x = sigma(problem.shapes[0]);
    const double sigma_rest = sigma(problem.shapes[1]);
    const double x_min = L * sigma_x / (sigma_x + sigma_rest);
    const double radicand = sigma_rest * x_min * (4.0 * *threshold - L * x_min / sigma_x) / L;
    if (radicand >= 0.0) {
      range.x_hat = std::sqrt(radicand);
    }
  }
  return range;
}

namespace detail {

inline void push_interval(IntervalSet& set, double lo, double hi, double min_width) {
  if (hi - lo > min_width) {
    set.intervals.push_back({lo, hi});
  }
}

inline IntervalSet solve_family(const BoundQuery& query) {
  const EqualPerimeterQuadratic q(query.problem);
  const double end = q.domain_end;
  const double min_width = 1e-12 * query.problem.total_length;
  const auto roots = bound_roots(query);
  IntervalSet set;
  if (!roots) {
    // Threshold below the family minimum: the area always exceeds it.
    if (query.sense == Sense::lower) {
      push_interval(set, 0.0, end, min_width);
    }
    return set;
  }
  const auto [lo, hi] = *roots;
  if (query.sense == Sense::lower) {
    push_interval(set, 0.0, std::min(lo, end), min_width);
    push_interval(set, std::max(hi, 0.0), end, min_width);
  } else {
    push_interval(set, std::max(lo, 0.0), std::min(hi, end), min_width);
  }
  return set;
}

}  // namespace detail

/// Cut positions x in (0, L) for a single cut between two shapes where the
/// total area is strictly above (lower) or below (upper) the threshold.
inline IntervalSet solve_two_polygon(const BoundQuery& query) {
  query.validate();
  if (query.problem.shapes.size() != 2) {
    throw argument_error("solve_two_polygon needs exactly two shapes");
  }
  return detail::solve_family(query);
}

/// Common perimeter x in (0, L/k) for the first k shapes satisfying the
/// strict bound. The domain stops at L/k because the last piece is L - kx.
inline IntervalSet solve_equal_perimeter(const BoundQuery& query) {
  query.validate();
  return detail::solve_family(query);
}

}  // namespace wirecut
