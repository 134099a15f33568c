#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace wirecut {

/// Fixed total side count `side_budget` shared among wires of fixed length,
/// each bent into a regular polygon with at least three sides.
struct AllocationProblem {
  std::vector<double> wire_lengths;
  long side_budget = 0;

  void validate() const {
    if (wire_lengths.size() < 2) {
      throw argument_error("allocation needs at least two wires");
    }
    for (double length : wire_lengths) {
      if (!(length > 0.0) || !std::isfinite(length)) {
        throw argument_error("wire lengths must be positive and finite");
      }
    }
    const auto minimum = 3 * static_cast<long>(wire_lengths.size());
    if (side_budget < minimum) {
      throw infeasible_error("side budget " + std::to_string(side_budget) + " is below " +
                             std::to_string(minimum) + " (three sides per wire)");
    }
  }
};

struct AllocationResult {
  std::vector<long> sides;
  std::vector<double> per_wire_areas;
  double total_area = 0.0;
  std::vector<double> residuals;  // diagnostic, see stationarity_residual()
};

/// Largest number of compositions the search will visit.
inline constexpr double max_compositions = 1e8;

/// Number of compositions of `budget` into `wires` parts of at least 3,
/// i.e. C(budget - 2 wires - 1, wires - 1). Returned as a double since it
/// is only compared against the work limit.
inline double composition_count(std::size_t wires, long budget) {
  const long free = budget - 3 * static_cast<long>(wires);
  if (free < 0) return 0.0;
  // C(free + wires - 1, wires - 1)
  double count = 1.0;
  const auto r = static_cast<long>(wires) - 1;
  for (long i = 1; i <= r; ++i) {
    count = count * static_cast<double>(free + i) / static_cast<double>(i);
  }
  return std::round(count);
}

inline void check_composition_limit(std::size_t wires, long budget) {
  const double count = composition_count(wires, budget);
  if (count > max_compositions) {
    throw resource_error("allocation search would visit " + std::to_string(count) +
                         " compositions, above the limit of " +
                         std::to_string(max_compositions));
  }
}

/// Sum of regular-polygon areas, wire i bent into sides[i] sides.
inline double total_area_for_allocation(std::span<const double> lengths,
                                        std::span<const long> sides) {
  if (lengths.size() != sides.size()) {
    throw argument_error("length and side counts differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (sides[i] < 3) {
      throw argument_error("every polygon needs at least 3 sides");
    }
    total += area(Shape::regular(sides[i]), lengths[i]);
  }
  return total;
}

/// g(alpha, L) = (alpha L)^2 (alpha cot^2 alpha - cot alpha + alpha). The
/// derivative of a polygon's area with respect to its side count n is
/// g(pi/n, L) / (4 pi^2).
inline double stationarity_g(double alpha, double length) noexcept {
  const double cot = 1.0 / std::tan(alpha);
  const double scaled = alpha * length;
  return scaled * scaled * (alpha * cot * cot - cot + alpha);
}

/// Consecutive differences g_i - g_{i+1} for continuous side counts. All
/// zero where the continuous first-order conditions hold.
inline std::vector<double> stationarity_residual(std::span<const double> lengths,
                                                 std::span<const double> sides) {
  if (lengths.size() != sides.size()) {
    throw argument_error("length and side counts differ");
  }
  std::vector<double> g;
  g.reserve(sides.size());
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (!(sides[i] > 2.0)) {
      throw argument_error("continuous side counts must exceed 2");
    }
    g.push_back(stationarity_g(std::numbers::pi / sides[i], lengths[i]));
  }
  std::vector<double> residuals;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    residuals.push_back(g[i] - g[i + 1]);
  }
  return residuals;
}

namespace detail {

struct AllocationSearch {
  std::span<const double> lengths;
  long budget;
  // table[i][n] = area of wire i as an n-gon.
  std::vector<std::vector<double>> table;

  struct Best {
    double total = -1.0;
    std::vector<long> sides;
  };

  AllocationSearch(std::span<const double> wire_lengths, long side_budget)
      : lengths(wire_lengths), budget(side_budget) {
    const long max_sides = budget - 3 * static_cast<long>(lengths.size() - 1);
    table.resize(lengths.size());
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      table[i].assign(static_cast<std::size_t>(max_sides) + 1, 0.0);
      for (long n = 3; n <= max_sides; ++n) {
        table[i][static_cast<std::size_t>(n)] = area(Shape::regular(n), lengths[i]);
      }
    }
  }

  // Ascending nested loops over positions [wire, k-1) with the last wire
  // taking what is left; the first strictly larger total wins.
  void scan(std::size_t wire, long remaining, double partial, std::vector<long>& current,
            Best& best) const {
    const std::size_t last = lengths.size() - 1;
    if (wire == last) {
      current[last] = remaining;
      const double total = partial + table[last][static_cast<std::size_t>(remaining)];
      if (total > best.total) {
        best.total = total;
        best.sides = current;
      }
      return;
    }
    const long reserve = 3 * static_cast<long>(last - wire);
    for (long n = 3; n <= remaining - reserve; ++n) {
      current[wire] = n;
      scan(wire + 1, remaining - n, partial + table[wire][static_cast<std::size_t>(n)], current,
           best);
    }
  }

  Best scan_first(long first_sides) const {
    std::vector<long> current(lengths.size(), 0);
    current[0] = first_sides;
    Best best;
    scan(1, budget - first_sides, table[0][static_cast<std::size_t>(first_sides)], current, best);
    return best;
  }
};

}  // namespace detail

/// Exhaustive search over every composition of the side budget (at least
/// three sides per wire) for the largest total area. Ties go to the
/// lexicographically smallest side sequence.
///
/// Large searches are split by the first wire's side count across threads;
/// partial winners are reduced in ascending order so the result matches the
/// sequential scan exactly. `threads` = 0 picks the hardware concurrency
/// for searches of a million compositions or more; any other value forces
/// that many workers.
inline AllocationResult optimize_allocation(const AllocationProblem& problem,
                                            unsigned threads = 0) {
  problem.validate();
  const std::size_t wires = problem.wire_lengths.size();
  check_composition_limit(wires, problem.side_budget);

  const detail::AllocationSearch search(problem.wire_lengths, problem.side_budget);
  const long first_max = problem.side_budget - 3 * static_cast<long>(wires - 1);

  std::vector<detail::AllocationSearch::Best> partials(static_cast<std::size_t>(first_max - 2));
  unsigned workers = threads;
  if (workers == 0) {
    workers = composition_count(wires, problem.side_budget) >= 1e6
                  ? std::thread::hardware_concurrency()
                  : 1;
  }
  if (workers > 1) {
    std::atomic<long> next{3};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (long n = next++; n <= first_max; n = next++) {
          partials[static_cast<std::size_t>(n - 3)] = search.scan_first(n);
        }
      });
    }
  } else {
    for (long n = 3; n <= first_max; ++n) {
      partials[static_cast<std::size_t>(n - 3)] = search.scan_first(n);
    }
  }

  detail::AllocationSearch::Best best;
  for (auto& partial : partials) {
    if (partial.total > best.total) best = std::move(partial);
  }

  AllocationResult result;
  result.sides = std::move(best.sides);
  for (std::size_t i = 0; i < wires; ++i) {
    result.per_wire_areas.push_back(area(Shape::regular(result.sides[i]), problem.wire_lengths[i]));
  }
  result.total_area = total_area_for_allocation(problem.wire_lengths, result.sides);
  const std::vector<double> continuous(result.sides.begin(), result.sides.end());
  result.residuals = stationarity_residual(problem.wire_lengths, continuous);
  return result;
}

}  // namespace wirecut
