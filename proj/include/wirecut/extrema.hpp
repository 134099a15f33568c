#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace wirecut {

/// A wire of length `total_length` cut into one piece per shape, in order.
struct PartitionProblem {
  double total_length = 0.0;
  std::vector<Shape> shapes;

  void validate() const {
    if (!(total_length > 0.0) || !std::isfinite(total_length)) {
      throw argument_error("wire length must be positive and finite");
    }
    if (shapes.size() < 2) {
      throw argument_error("a partition needs at least two shapes");
    }
  }
};

enum class PointKind {
  interior_minimum,
  vertex_maximum,
  face_stationary,
  lattice_sample,  // produced by the brute-force oracle
};

inline std::string to_string(PointKind kind) {
  switch (kind) {
    case PointKind::interior_minimum: return "interior-minimum";
    case PointKind::vertex_maximum: return "vertex-maximum";
    case PointKind::face_stationary: return "face-stationary";
    case PointKind::lattice_sample: return "lattice-sample";
  }
  return "unknown";
}

struct PartitionResult {
  std::vector<double> lengths;
  std::vector<double> per_shape_areas;
  double total_area = 0.0;
  PointKind kind = PointKind::interior_minimum;
  // Set only for face_stationary: the shape whose piece is forced to zero.
  std::optional<std::size_t> excluded_index;
};

/// Sum of the shape areas for the given piece lengths.
inline double total_area(std::span<const Shape> shapes, std::span<const double> lengths) {
  if (shapes.size() != lengths.size()) {
    throw argument_error("shape and length counts differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    total += area(shapes[i], lengths[i]);
  }
  return total;
}

namespace detail {

inline PartitionResult make_result(std::span<const Shape> shapes, std::vector<double> lengths,
                                   PointKind kind) {
  PartitionResult result;
  result.per_shape_areas.reserve(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    result.per_shape_areas.push_back(area(shapes[i], lengths[i]));
    result.total_area += result.per_shape_areas.back();
  }
  result.lengths = std::move(lengths);
  result.kind = kind;
  return result;
}

// Minimizer of sum_i x_i^2 / (4 sigma_i) subject to sum_i x_i = L over the
// shapes not excluded: x_i = L sigma_i / sum sigma. Excluded pieces are zero.
inline std::vector<double> weighted_split(double total_length, std::span<const Shape> shapes,
                                          std::optional<std::size_t> excluded) {
  double sigma_sum = 0.0;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i != excluded) sigma_sum += sigma(shapes[i]);
  }
  std::vector<double> lengths(shapes.size(), 0.0);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i != excluded) lengths[i] = total_length * (sigma(shapes[i]) / sigma_sum);
  }
  return lengths;
}

}  // namespace detail

/// Closed-form minimum of the total area: each piece gets a share of the
/// wire proportional to sigma(shape). The minimum total is L^2 / (4 sum sigma).
inline PartitionResult minimize_partition(const PartitionProblem& problem) {
  problem.validate();
  return detail::make_result(
      problem.shapes, detail::weighted_split(problem.total_length, problem.shapes, std::nullopt),
      PointKind::interior_minimum);
}

/// The total area is strictly convex on the simplex of cuts, so its maximum
/// sits at a vertex: the whole wire goes to the shape with the largest area
/// per perimeter (the smallest sigma). Ties go to the lowest index.
inline PartitionResult maximize_partition(const PartitionProblem& problem) {
  problem.validate();
  std::size_t best = 0;
  double best_area = area(problem.shapes[0], problem.total_length);
  for (std::size_t i = 1; i < problem.shapes.size(); ++i) {
    const double a = area(problem.shapes[i], problem.total_length);
    if (a > best_area) {
      best = i;
      best_area = a;
    }
  }
  std::vector<double> lengths(problem.shapes.size(), 0.0);
  lengths[best] = problem.total_length;
  return detail::make_result(problem.shapes, std::move(lengths), PointKind::vertex_maximum);
}

/// Stationary point of the total area on the face where piece
/// `excluded_index` is zero. On that face it is a minimum, not a maximum.
/// With two shapes the face is a single vertex and that vertex is returned.
inline PartitionResult face_stationary(const PartitionProblem& problem, std::size_t excluded_index) {
  problem.validate();
  if (excluded_index >= problem.shapes.size()) {
    throw argument_error("excluded index " + std::to_string(excluded_index) +
                         " is out of range for " + std::to_string(problem.shapes.size()) +
                         " shapes");
  }
  auto result = detail::make_result(
      problem.shapes, detail::weighted_split(problem.total_length, problem.shapes, excluded_index),
      PointKind::face_stationary);
  result.excluded_index = excluded_index;
  return result;
}

/// The largest face-stationary total over all faces (lowest index on ties).
/// This reproduces the boundary-candidate procedure; it is never above
/// maximize_partition().
inline PartitionResult paper_face_max(const PartitionProblem& problem) {
  problem.validate();
  auto best = face_stationary(problem, 0);
  for (std::size_t b = 1; b < problem.shapes.size(); ++b) {
    auto candidate = face_stationary(problem, b);
    if (candidate.total_area > best.total_area) {
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace wirecut
