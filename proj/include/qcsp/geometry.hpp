#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qcsp/quantum.hpp"

namespace qcsp {

using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct FrameResiduals {
  bool frame = false;
  double off_diagonal = 0;  ///< largest |(MM*)_{ij}|, i != j
  double trace_error = 0;   ///< |tr(MM*) - 1|
};

/// MM* is diagonal with trace 1, within tol.
FrameResiduals frame_residuals(const CMatrix &m, double tol = kDefaultTol);
bool is_frame(const CMatrix &m, double tol = kDefaultTol);
bool is_frame(const RMatrix &m, double tol = kDefaultTol);

/// Row of N holding the ordered pair (i, j), i != j, 0-based.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

struct AdjacencyResiduals {
  bool adjacent = false;
  FrameResiduals witness;
  double outgoing = 0;  ///< max ||M_i - sum_{j != i} N_(i,j)||
  double incoming = 0;  ///< max ||M'_i - sum_{j != i} N_(j,i)||
};

/// Checks that N is a frame and M, M' are its outgoing and incoming row
/// sums. Throws std::invalid_argument on inconsistent shapes.
AdjacencyResiduals check_frame_adjacency(const CMatrix &m, const CMatrix &m_prime,
                                         const CMatrix &n, double tol = kDefaultTol);
AdjacencyResiduals check_frame_adjacency(const RMatrix &m, const RMatrix &m_prime,
                                         const RMatrix &n, double tol = kDefaultTol);

struct AdjacentFrames {
  CMatrix m;
  CMatrix m_prime;
  CMatrix witness;
};

/// Random witness N with min(d, n^2 - n) nonzero, pairwise orthogonal rows at
/// random positions and random weights, plus the row sums M and M'. Throws
/// std::invalid_argument if n < 2 or d < 1.
AdjacentFrames sample_adjacent_frames(std::size_t n, std::size_t d, std::mt19937_64 &rng);
AdjacentFrames sample_adjacent_frames(std::size_t n, std::size_t d, std::uint64_t seed);

/// Each row u becomes (Re u, Im u). Throws std::invalid_argument if `m` is
/// not a frame.
RMatrix realify_frame(const CMatrix &m, double tol = kDefaultTol);
/// Realification without the frame precondition, for witnesses.
RMatrix realify(const CMatrix &m);

enum class ColoringMode { certified, statistical };

const char *to_string(ColoringMode mode);

/// Finite coloring of the unit sphere of R^D: a direction gets the index of
/// its nearest center. Every direction lies within `theta` < pi/4 of a center,
/// so directions sharing a color are never orthogonal.
struct SphereColoring {
  std::size_t dimension = 0;
  double theta = 0;
  ColoringMode mode = ColoringMode::certified;
  std::vector<RVector> centers;
  /// Certified: mesh slack delta and mesh size. Statistical: margin and
  /// sample count.
  double slack = 0;
  std::size_t checked_points = 0;
  /// Largest angle from a checked point to its nearest center.
  double covering_angle = 0;

  /// Throws std::invalid_argument for a zero vector or wrong length.
  [[nodiscard]] std::size_t color(const RVector &v) const;
};

struct SphereColoringOptions {
  double theta = M_PI / 4 - 0.05;
  /// Grid points per cube edge in certified mode; 0 picks one by dimension.
  std::size_t resolution = 0;
  std::size_t samples = 200'000;
  double margin = 0.1;
  /// Statistical mode is used above this dimension.
  std::size_t max_certified_dimension = 5;
};

/// Greedy farthest-point placement of centers. D = 2 uses ceil(pi/theta)
/// equally spaced centers. For D up to max_certified_dimension the centers
/// are chosen from a grid on the cube surface, projected to the sphere, until
/// every grid direction is within theta - delta of a center, where delta
/// bounds the angle from any sphere point to the nearest grid direction.
/// Larger D falls back to random sample points and a fixed margin.
SphereColoring build_sphere_coloring(std::size_t dimension, std::uint64_t seed = 0,
                                     const SphereColoringOptions &options = {});

/// Number of sampled orthogonal direction pairs that share a color.
std::size_t orthogonality_violations(const SphereColoring &c, std::size_t pairs,
                                     std::mt19937_64 &rng);

struct FrameColor {
  std::size_t row = 0;
  std::size_t cap = 0;

  friend bool operator==(const FrameColor &, const FrameColor &) = default;
};

/// (least row i with ||M_i|| > 1e3 * tol, color of that row's direction).
/// Throws std::invalid_argument if every row is numerically zero or the width
/// differs from the coloring's dimension.
FrameColor color_frame(const SphereColoring &c, const RMatrix &m, double tol = kDefaultTol);

}  // namespace qcsp
