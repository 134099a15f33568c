#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "test_support.hpp"
#include "wirecut/extrema.hpp"

namespace wirecut {
namespace {

using std::numbers::pi;
const double sqrt3 = std::sqrt(3.0);

std::vector<Shape> shapes(std::initializer_list<long> sides) {
  std::vector<Shape> out;
  for (long n : sides) out.push_back(n == 0 ? Shape::circle() : Shape::regular(n));
  return out;
}

void expect_consistent(const PartitionProblem& problem, const PartitionResult& r) {
  const double L = problem.total_length;
  ASSERT_EQ(r.lengths.size(), problem.shapes.size());
  ASSERT_EQ(r.per_shape_areas.size(), problem.shapes.size());
  EXPECT_NEAR(std::accumulate(r.lengths.begin(), r.lengths.end(), 0.0), L, 1e-9 * L);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.lengths.size(); ++i) {
    EXPECT_GE(r.lengths[i], 0.0);
    EXPECT_NEAR(r.per_shape_areas[i], area(problem.shapes[i], r.lengths[i]),
                1e-9 * r.per_shape_areas[i]);
    sum += r.per_shape_areas[i];
  }
  EXPECT_NEAR(r.total_area, sum, 1e-9 * sum);
}

TEST(PartitionProblem, Validation) {
  EXPECT_THROW(minimize_partition({12.0, shapes({4})}), argument_error);
  EXPECT_THROW(minimize_partition({0.0, shapes({4, 3})}), argument_error);
  EXPECT_THROW(minimize_partition({-1.0, shapes({4, 3})}), argument_error);
  EXPECT_THROW(minimize_partition({NAN, shapes({4, 3})}), argument_error);
}

TEST(MinimizePartition, SquareAndTriangle) {
  const PartitionProblem problem{12.0, shapes({4, 3})};
  const auto r = minimize_partition(problem);
  expect_consistent(problem, r);
  EXPECT_EQ(r.kind, PointKind::interior_minimum);
  EXPECT_NEAR(r.lengths[0], 48 / (4 + 3 * sqrt3), 1e-12);
  EXPECT_NEAR(r.lengths[0], 5.220, 2e-3);
  EXPECT_NEAR(r.lengths[1], 6.780, 2e-3);
  EXPECT_NEAR(r.per_shape_areas[0], 144 / (43 + 24 * sqrt3), 1e-12);
  EXPECT_NEAR(r.per_shape_areas[1], 108 * sqrt3 / (43 + 24 * sqrt3), 1e-12);
  EXPECT_NEAR(r.total_area, 36 / (4 + 3 * sqrt3), 1e-12);
}

TEST(MinimizePartition, HexagonAndSquareSymbolic) {
  for (double L : {1.0, 3.5, 40.0}) {
    const auto r = minimize_partition({L, shapes({6, 4})});
    EXPECT_NEAR(r.lengths[0], (2 * sqrt3 - 3) * L, 1e-12 * L);
    EXPECT_NEAR(r.total_area, (2 - sqrt3) * L * L / 8, 1e-12 * L * L);
  }
}

TEST(MinimizePartition, CircleAndSquareSymbolic) {
  const auto r = minimize_partition({1.0, shapes({0, 4})});
  EXPECT_NEAR(r.lengths[0], pi / (pi + 4), 1e-15);
  EXPECT_NEAR(r.total_area, 1 / (4 * (pi + 4)), 1e-15);
}

TEST(MinimizePartition, SixShapes) {
  const PartitionProblem problem{20.0, shapes({3, 4, 6, 8, 12, 0})};
  const auto r = minimize_partition(problem);
  expect_consistent(problem, r);
  const double lengths[] = {4.654, 3.582, 3.103, 2.968, 2.880, 2.814};
  const double areas[] = {1.042, 0.802, 0.695, 0.665, 0.645, 0.630};
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(r.lengths[i], lengths[i], 2e-3);
    EXPECT_NEAR(r.per_shape_areas[i], areas[i], 2e-3);
  }
  EXPECT_NEAR(r.total_area, 4.478, 2e-3);
}

TEST(MinimizePartition, IdenticalShapesSplitEvenly) {
  const auto r = minimize_partition({9.0, shapes({5, 5, 5})});
  for (double x : r.lengths) EXPECT_NEAR(x, 3.0, 1e-12);
  const double theta = half_angle(Shape::regular(5));
  EXPECT_NEAR(r.total_area, 81 * std::tan(theta) / (12 * 5), 1e-12);
}

TEST(MinimizePartition, TotalMatchesClosedForm) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto problem = testing::random_partition(rng);
    const auto r = minimize_partition(problem);
    double sigma_sum = 0.0;
    for (const auto& s : problem.shapes) sigma_sum += sigma(s);
    const double L = problem.total_length;
    EXPECT_NEAR(r.total_area, L * L / (4 * sigma_sum), 1e-12 * r.total_area);
    EXPECT_NEAR(total_area(problem.shapes, r.lengths), r.total_area, 1e-12 * r.total_area);
    EXPECT_NEAR(std::accumulate(r.lengths.begin(), r.lengths.end(), 0.0), L, 1e-12 * L);
    for (double x : r.lengths) EXPECT_GT(x, 0.0);
  }
}

TEST(MinimizePartition, GradientVanishes) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto problem = testing::random_partition(rng);
    const auto r = minimize_partition(problem);
    const double L = problem.total_length;
    const double h = 1e-6 * L;
    std::vector<double> head(r.lengths.begin(), r.lengths.end() - 1);
    const double scale = r.total_area / L;
    for (std::size_t i = 0; i < head.size(); ++i) {
      auto plus = head;
      auto minus = head;
      plus[i] += h;
      minus[i] -= h;
      const double grad =
          (testing::reduced_total(problem, plus) - testing::reduced_total(problem, minus)) / (2 * h);
      EXPECT_LE(std::abs(grad), 1e-8 * scale) << "trial " << trial << " component " << i;
    }
  }
}

TEST(MinimizePartition, MidpointConvexity) {
  std::mt19937_64 rng(13);
  std::exponential_distribution<double> weight(1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto problem = testing::random_partition(rng);
    const std::size_t k = problem.shapes.size();
    auto random_point = [&] {
      std::vector<double> w(k);
      double sum = 0.0;
      for (auto& x : w) sum += (x = weight(rng));
      for (auto& x : w) x *= problem.total_length / sum;
      return w;
    };
    const auto p = random_point();
    const auto q = random_point();
    std::vector<double> mid(k);
    for (std::size_t i = 0; i < k; ++i) mid[i] = 0.5 * (p[i] + q[i]);
    const double fp = total_area(problem.shapes, p);
    const double fq = total_area(problem.shapes, q);
    const double fm = total_area(problem.shapes, mid);
    EXPECT_LT(fm, 0.5 * (fp + fq));
  }
}

TEST(MinimizePartition, ScaleEquivariance) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const auto problem = testing::random_partition(rng);
    const double c = 0.5 + trial * 0.37;
    const auto base = minimize_partition(problem);
    const auto scaled = minimize_partition({c * problem.total_length, problem.shapes});
    for (std::size_t i = 0; i < base.lengths.size(); ++i) {
      EXPECT_NEAR(scaled.lengths[i], c * base.lengths[i], 1e-12 * c * base.lengths[i]);
    }
    EXPECT_NEAR(scaled.total_area, c * c * base.total_area, 1e-12 * c * c * base.total_area);
  }
}

TEST(MaximizePartition, WholeWireToBestShape) {
  const auto r = maximize_partition({12.0, shapes({4, 3})});
  EXPECT_EQ(r.kind, PointKind::vertex_maximum);
  EXPECT_EQ(r.lengths, (std::vector<double>{12.0, 0.0}));
  EXPECT_NEAR(r.total_area, 9.0, 1e-12);

  const auto hex = maximize_partition({1.0, shapes({6, 4})});
  EXPECT_EQ(hex.lengths[0], 1.0);
  EXPECT_NEAR(hex.total_area, sqrt3 / 24, 1e-15);

  const auto circle = maximize_partition({10.0, shapes({4, 3, 0})});
  EXPECT_EQ(circle.lengths, (std::vector<double>{0.0, 0.0, 10.0}));
  EXPECT_NEAR(circle.total_area, 100 / (4 * pi), 1e-12);
}

TEST(MaximizePartition, TieGoesToLowestIndex) {
  const auto r = maximize_partition({1.0, shapes({5, 5})});
  EXPECT_EQ(r.lengths, (std::vector<double>{1.0, 0.0}));
  EXPECT_NEAR(r.total_area, std::sqrt(5 * (5 + 2 * std::sqrt(5.0))) / 100, 1e-15);

  const auto circles = maximize_partition({2.0, shapes({3, 0, 0})});
  EXPECT_EQ(circles.lengths, (std::vector<double>{0.0, 2.0, 0.0}));
}

TEST(MaximizePartition, DominatesRandomPoints) {
  std::mt19937_64 rng(15);
  std::exponential_distribution<double> weight(1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto problem = testing::random_partition(rng);
    const auto best = maximize_partition(problem);
    expect_consistent(problem, best);
    std::vector<double> w(problem.shapes.size());
    double sum = 0.0;
    for (auto& x : w) sum += (x = weight(rng));
    for (auto& x : w) x *= problem.total_length / sum;
    EXPECT_GE(best.total_area, total_area(problem.shapes, w));
    EXPECT_LE(paper_face_max(problem).total_area, best.total_area);
  }
}

TEST(FaceStationary, SquareTriangleCircleExcludingTriangle) {
  const PartitionProblem problem{10.0, shapes({4, 3, 0})};
  const auto r = face_stationary(problem, 1);
  expect_consistent(problem, r);
  EXPECT_EQ(r.kind, PointKind::face_stationary);
  ASSERT_TRUE(r.excluded_index.has_value());
  EXPECT_EQ(*r.excluded_index, 1u);
  EXPECT_NEAR(r.lengths[0], 40 / (4 + pi), 1e-12);
  EXPECT_EQ(r.lengths[1], 0.0);
  EXPECT_NEAR(r.lengths[2], 10 * pi / (4 + pi), 1e-12);
  // Evaluating the three-shape total at these lengths gives 25/(4 + pi).
  EXPECT_NEAR(r.total_area, 25 / (4 + pi), 1e-12);
}

TEST(FaceStationary, SixShapesExcludingTriangle) {
  const auto r = face_stationary({20.0, shapes({3, 4, 6, 8, 12, 0})}, 0);
  const double lengths[] = {0.0, 4.669, 4.043, 3.868, 3.753, 3.667};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(r.lengths[i], lengths[i], 2e-3);
  EXPECT_NEAR(r.total_area, 5.836, 2e-3);
}

TEST(FaceStationary, IdenticalShapes) {
  const auto r = face_stationary({12.0, shapes({7, 7, 7, 7})}, 2);
  EXPECT_EQ(r.lengths[2], 0.0);
  for (std::size_t i : {0u, 1u, 3u}) EXPECT_NEAR(r.lengths[i], 4.0, 1e-12);
}

TEST(FaceStationary, TwoShapesGiveVertex) {
  const auto r = face_stationary({12.0, shapes({4, 3})}, 0);
  EXPECT_EQ(r.lengths, (std::vector<double>{0.0, 12.0}));
  EXPECT_NEAR(r.total_area, 4 * sqrt3, 1e-12);
}

TEST(FaceStationary, IndexOutOfRange) {
  EXPECT_THROW(face_stationary({12.0, shapes({4, 3})}, 2), argument_error);
}

TEST(FaceStationary, IsMinimumOnItsFace) {
  std::mt19937_64 rng(16);
  std::exponential_distribution<double> weight(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto problem = testing::random_partition(rng, 3, 6);
    const std::size_t b = trial % problem.shapes.size();
    const auto face = face_stationary(problem, b);
    std::vector<double> w(problem.shapes.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) sum += (w[i] = i == b ? 0.0 : weight(rng));
    for (auto& x : w) x *= problem.total_length / sum;
    EXPECT_LE(face.total_area, total_area(problem.shapes, w) * (1 + 1e-12));
  }
}

TEST(PaperFaceMax, PicksLargestFaceTotal) {
  const auto six = paper_face_max({20.0, shapes({3, 4, 6, 8, 12, 0})});
  EXPECT_EQ(six.excluded_index, 0u);
  EXPECT_NEAR(six.total_area, 5.836, 2e-3);

  const PartitionProblem three{10.0, shapes({4, 3, 0})};
  const auto r = paper_face_max(three);
  EXPECT_EQ(r.excluded_index, 1u);
  EXPECT_NEAR(r.total_area, 3.5007, 1e-4);
  EXPECT_NEAR(face_stationary(three, 0).total_area, 2.999, 1e-3);
  EXPECT_NEAR(face_stationary(three, 2).total_area, 2.718, 1e-3);
}

TEST(PaperFaceMax, TwoShapesAgreeWithMaximize) {
  for (auto pair : {shapes({4, 3}), shapes({3, 4}), shapes({6, 0})}) {
    const PartitionProblem problem{7.0, pair};
    EXPECT_EQ(paper_face_max(problem).lengths, maximize_partition(problem).lengths);
    EXPECT_EQ(paper_face_max(problem).total_area, maximize_partition(problem).total_area);
  }
  // Equal shapes: both endpoints tie. Excluding index 0 sends the wire to
  // index 1, so only the totals coincide.
  const PartitionProblem tie{7.0, shapes({5, 5})};
  EXPECT_EQ(paper_face_max(tie).total_area, maximize_partition(tie).total_area);
}

}  // namespace
}  // namespace wirecut
