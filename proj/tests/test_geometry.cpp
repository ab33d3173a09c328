#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qcsp/geometry.hpp"
#include "qcsp/io.hpp"

using namespace qcsp;

namespace {

constexpr double kTol = 1e-9;

RVector unit(std::size_t dim, std::size_t axis) {
  RVector v = RVector::Zero(dim);
  v(axis) = 1;
  return v;
}

}  // namespace

TEST(Frames, Examples) {
  CMatrix m = CMatrix::Zero(2, 3);
  m(0, 0) = std::sqrt(0.25);
  m(1, 1) = std::complex<double>(0, std::sqrt(0.75));
  EXPECT_TRUE(is_frame(m));
  m(1, 0) = 1e-3;
  EXPECT_FALSE(is_frame(m));
  EXPECT_FALSE(is_frame(CMatrix(CMatrix::Identity(2, 2))));
  RMatrix r = RMatrix::Zero(3, 2);
  r(2, 1) = 1;
  EXPECT_TRUE(is_frame(r));
}

TEST(Frames, PairIndex) {
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j) seen.insert(pair_index(i, j, 4));
    }
  }
  EXPECT_EQ(seen.size(), 12u);
  EXPECT_EQ(*seen.rbegin(), 11u);
}

TEST(Frames, AdjacencyForTwoVertices) {
  // n = 2: N has rows (0,1) and (1,0), so M = (N_01; N_10) and M' swaps them.
  CMatrix n = CMatrix::Zero(2, 2);
  n(0, 0) = std::sqrt(0.3);
  n(1, 1) = std::sqrt(0.7);
  CMatrix m(2, 2), mp(2, 2);
  m.row(0) = n.row(pair_index(0, 1, 2));
  m.row(1) = n.row(pair_index(1, 0, 2));
  mp.row(0) = n.row(pair_index(1, 0, 2));
  mp.row(1) = n.row(pair_index(0, 1, 2));
  EXPECT_TRUE(check_frame_adjacency(m, mp, n).adjacent);
  EXPECT_FALSE(check_frame_adjacency(m, m, n).adjacent);
  EXPECT_THROW(check_frame_adjacency(m, mp, CMatrix::Zero(3, 2)), std::invalid_argument);
}

TEST(Frames, SampledFramesAreAdjacent) {
  std::mt19937_64 rng(5);
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 4}, {2, 7}, {4, 1}, {5, 12}}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto f = sample_adjacent_frames(n, d, rng);
      ASSERT_EQ(static_cast<std::size_t>(f.witness.rows()), n * n - n);
      EXPECT_TRUE(is_frame(f.m));
      EXPECT_TRUE(is_frame(f.m_prime));
      auto res = check_frame_adjacency(f.m, f.m_prime, f.witness);
      EXPECT_TRUE(res.adjacent);
      EXPECT_LE(std::max(res.outgoing, res.incoming), kTol);
      CMatrix bent = f.m;
      bent(0, 0) += 10 * kTol;
      EXPECT_FALSE(check_frame_adjacency(bent, f.m_prime, f.witness).adjacent);
    }
  }
  EXPECT_THROW(sample_adjacent_frames(1, 2, rng), std::invalid_argument);
  EXPECT_THROW(sample_adjacent_frames(3, 0, rng), std::invalid_argument);
  auto a = sample_adjacent_frames(3, 3, std::uint64_t{9});
  auto b = sample_adjacent_frames(3, 3, std::uint64_t{9});
  EXPECT_EQ(a.m, b.m);
}

TEST(Frames, RealificationPreservesStructure) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = sample_adjacent_frames(3, 2 + trial % 4, rng);
    RMatrix m = realify_frame(f.m);
    RMatrix mp = realify_frame(f.m_prime);
    RMatrix n = realify(f.witness);
    ASSERT_EQ(m.cols(), 2 * f.m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) EXPECT_NEAR(m.row(i).norm(), f.m.row(i).norm(), 1e-12);
    EXPECT_TRUE(is_frame(m));
    EXPECT_TRUE(check_frame_adjacency(m, mp, n).adjacent);
  }
  EXPECT_THROW(realify_frame(CMatrix(CMatrix::Identity(2, 2))), std::invalid_argument);
}

TEST(SphereColoring, CircleUsesEvenlySpacedCenters) {
  auto c = build_sphere_coloring(2);
  EXPECT_EQ(c.mode, ColoringMode::certified);
  EXPECT_EQ(c.centers.size(), static_cast<std::size_t>(std::ceil(M_PI / c.theta)));
  EXPECT_LT(c.covering_angle, c.theta);
  std::mt19937_64 rng(1);
  EXPECT_EQ(orthogonality_violations(c, 20'000, rng), 0u);
}

TEST(SphereColoring, ThreeDimensionsHasNoOrthogonalMonochromaticPairs) {
  auto c = build_sphere_coloring(3, 4);
  EXPECT_EQ(c.mode, ColoringMode::certified);
  EXPECT_LT(c.covering_angle + c.slack, c.theta + 1e-12);
  EXPECT_LT(c.theta, M_PI / 4);
  std::mt19937_64 rng(2);
  EXPECT_EQ(orthogonality_violations(c, 100'000, rng), 0u);
  // Orthogonal axes must get distinct colors.
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) EXPECT_NE(c.color(unit(3, a)), c.color(unit(3, b)));
  }
  EXPECT_EQ(c.color(RVector::Constant(3, 2.0)), c.color(RVector::Constant(3, 0.5)));
  EXPECT_THROW((void)c.color(RVector::Zero(3)), std::invalid_argument);
  EXPECT_THROW((void)c.color(RVector::Ones(4)), std::invalid_argument);
}

TEST(SphereColoring, JsonRoundTrip) {
  auto c = build_sphere_coloring(3, 1);
  auto back = coloring_from_json(Json::parse(coloring_to_json(c).dump()));
  ASSERT_EQ(back.centers.size(), c.centers.size());
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int i = 0; i < 200; ++i) {
    RVector v(3);
    for (auto &x : v) x = g(rng);
    EXPECT_EQ(back.color(v), c.color(v));
  }
}

TEST(FrameColor, SkipsZeroRows) {
  auto c = build_sphere_coloring(2);
  RMatrix m = RMatrix::Zero(3, 2);
  m(1, 0) = 1e-14;
  m(2, 1) = 0.5;
  auto col = color_frame(c, m);
  EXPECT_EQ(col.row, 2u);
  EXPECT_EQ(col.cap, c.color(unit(2, 1)));
  EXPECT_THROW(color_frame(c, RMatrix::Zero(2, 2)), std::invalid_argument);
  EXPECT_THROW(color_frame(c, RMatrix::Identity(2, 3)), std::invalid_argument);
}

TEST(FrameColor, AdjacentFramesGetDistinctColors) {
  std::mt19937_64 rng(8);
  for (std::size_t d : {1, 2}) {
    auto c = build_sphere_coloring(2 * d, 5);
    for (int trial = 0; trial < 200; ++trial) {
      auto f = sample_adjacent_frames(2 + trial % 3, d, rng);
      auto a = color_frame(c, realify_frame(f.m));
      auto b = color_frame(c, realify_frame(f.m_prime));
      EXPECT_NE(a, b);
    }
  }
}
