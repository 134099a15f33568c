#pragma once

// Brute-force reference implementations. Deliberately naive: they only use
// the area kernels from geometry.hpp and never the closed forms they check.

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "allocation.hpp"
#include "errors.hpp"
#include "extrema.hpp"
#include "geometry.hpp"

namespace wirecut::oracle {

/// Number of lattice steps per dimension over the simplex.
struct GridSpec {
  long resolution = 100;

  void validate() const {
    if (resolution < 2) {
      throw argument_error("grid resolution must be at least 2");
    }
  }
};

inline constexpr std::size_t max_grid_shapes = 6;
inline constexpr double max_grid_points = 2e8;

namespace detail {

// Visits every composition of `total` into `parts` non-negative integers.
inline void for_each_composition(long total, std::size_t parts,
                                 const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> counts(parts, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t index, long remaining) {
    if (index + 1 == parts) {
      counts[index] = remaining;
      visit(counts);
      return;
    }
    for (long c = 0; c <= remaining; ++c) {
      counts[index] = c;
      rec(index + 1, remaining - c);
    }
  };
  rec(0, total);
}

inline PartitionResult grid_search(const PartitionProblem& problem, const GridSpec& grid,
                                   bool maximize) {
  problem.validate();
  grid.validate();
  const std::size_t parts = problem.shapes.size();
  if (parts > max_grid_shapes) {
    throw resource_error("grid search supports at most " + std::to_string(max_grid_shapes) +
                         " shapes");
  }
  double points = 1.0;
  for (std::size_t i = 1; i < parts; ++i) {
    points = points * static_cast<double>(grid.resolution + static_cast<long>(i)) /
             static_cast<double>(i);
  }
  if (points > max_grid_points) {
    throw resource_error("grid of " + std::to_string(points) + " points is too large");
  }

  const double step = problem.total_length / static_cast<double>(grid.resolution);
  std::vector<double> lengths(parts);
  std::vector<double> best_lengths;
  double best = maximize ? -1.0 : INFINITY;
  for_each_composition(grid.resolution, parts, [&](const std::vector<long>& counts) {
    double total = 0.0;
    for (std::size_t i = 0; i < parts; ++i) {
      lengths[i] = static_cast<double>(counts[i]) * step;
      total += area(problem.shapes[i], lengths[i]);
    }
    if (maximize ? total > best : total < best) {
      best = total;
      best_lengths = lengths;
    }
  });

  PartitionResult result;
  result.lengths = best_lengths;
  for (std::size_t i = 0; i < parts; ++i) {
    result.per_shape_areas.push_back(area(problem.shapes[i], best_lengths[i]));
  }
  result.total_area = best;
  result.kind = PointKind::lattice_sample;
  return result;
}

}  // namespace detail

/// Smallest total area over the lattice {x_i = c_i L / resolution, sum c_i =
/// resolution}. Within (L/resolution)^2 sum_i 1/(4 sigma_i) of the true
/// minimum.
inline PartitionResult grid_min(const PartitionProblem& problem, const GridSpec& grid) {
  return detail::grid_search(problem, grid, false);
}

/// Largest total area over the same lattice. Vertices are lattice points,
/// so vertex maxima are always sampled.
inline PartitionResult grid_max(const PartitionProblem& problem, const GridSpec& grid) {
  return detail::grid_search(problem, grid, true);
}

/// Visits every composition of the budget (first strictly larger total
/// wins) and evaluates each one from scratch.
inline AllocationResult enumerate_allocations(const AllocationProblem& problem) {
  problem.validate();
  const std::size_t wires = problem.wire_lengths.size();
  check_composition_limit(wires, problem.side_budget);

  const long spare = problem.side_budget - 3 * static_cast<long>(wires);
  std::vector<long> best_sides;
  double best = -1.0;
  std::vector<long> sides(wires);
  detail::for_each_composition(spare, wires, [&](const std::vector<long>& extra) {
    double total = 0.0;
    for (std::size_t i = 0; i < wires; ++i) {
      sides[i] = 3 + extra[i];
      total += area(Shape::regular(sides[i]), problem.wire_lengths[i]);
    }
    if (total > best) {
      best = total;
      best_sides = sides;
    }
  });

  AllocationResult result;
  result.sides = best_sides;
  for (std::size_t i = 0; i < wires; ++i) {
    result.per_wire_areas.push_back(area(Shape::regular(best_sides[i]), problem.wire_lengths[i]));
  }
  result.total_area = best;
  return result;
}

}  // namespace wirecut::oracle
