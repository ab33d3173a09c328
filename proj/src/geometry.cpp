#include "qcsp/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcsp {

FrameResiduals frame_residuals(const CMatrix &m, double tol) {
  const CMatrix gram = m * m.adjoint();
  FrameResiduals out;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      if (i != j) out.off_diagonal = std::max(out.off_diagonal, std::abs(gram(i, j)));
    }
  }
  out.trace_error = std::abs(gram.trace() - std::complex<double>(1.0, 0.0));
  out.frame = m.rows() > 0 && out.off_diagonal <= tol && out.trace_error <= tol;
  return out;
}

bool is_frame(const CMatrix &m, double tol) { return frame_residuals(m, tol).frame; }

bool is_frame(const RMatrix &m, double tol) {
  return frame_residuals(m.cast<std::complex<double>>(), tol).frame;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i == j || i >= n || j >= n) throw std::invalid_argument("pair index needs distinct i, j < n");
  return i * (n - 1) + (j < i ? j : j - 1);
}

AdjacencyResiduals check_frame_adjacency(const CMatrix &m, const CMatrix &m_prime,
                                         const CMatrix &n, double tol) {
  const auto rows = static_cast<std::size_t>(m.rows());
  if (rows < 2 || m_prime.rows() != m.rows() || m.cols() != m_prime.cols() ||
      n.cols() != m.cols() || static_cast<std::size_t>(n.rows()) != rows * rows - rows) {
    throw std::invalid_argument("frame shapes are inconsistent");
  }
  AdjacencyResiduals out;
  out.witness = frame_residuals(n, tol);
  for (std::size_t i = 0; i < rows; ++i) {
    CMatrix outgoing = m.row(static_cast<Eigen::Index>(i));
    CMatrix incoming = m_prime.row(static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < rows; ++j) {
      if (j == i) continue;
      outgoing -= n.row(static_cast<Eigen::Index>(pair_index(i, j, rows)));
      incoming -= n.row(static_cast<Eigen::Index>(pair_index(j, i, rows)));
    }
    out.outgoing = std::max(out.outgoing, outgoing.norm());
    out.incoming = std::max(out.incoming, incoming.norm());
  }
  out.adjacent = out.witness.frame && out.outgoing <= tol && out.incoming <= tol;
  return out;
}

AdjacencyResiduals check_frame_adjacency(const RMatrix &m, const RMatrix &m_prime,
                                         const RMatrix &n, double tol) {
  using C = std::complex<double>;
  return check_frame_adjacency(m.cast<C>().eval(), m_prime.cast<C>().eval(), n.cast<C>().eval(),
                               tol);
}

AdjacentFrames sample_adjacent_frames(std::size_t n, std::size_t d, std::mt19937_64 &rng) {
  if (n < 2) throw std::invalid_argument("adjacent frames need n >= 2");
  if (d < 1) throw std::invalid_argument("frame width must be positive");
  const std::size_t pairs = n * n - n;
  const std::size_t used = std::min(d, pairs);
  const CMatrix basis = random_unitary(d, rng);

  std::vector<std::size_t> rows(pairs);
  std::iota(rows.begin(), rows.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);

  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::vector<double> weights(used);
  double total = 0;
  for (auto &w : weights) {
    w = weight(rng);
    total += w * w;
  }
  AdjacentFrames out;
  const auto width = static_cast<Eigen::Index>(d);
  out.witness = CMatrix::Zero(static_cast<Eigen::Index>(pairs), width);
  for (std::size_t c = 0; c < used; ++c) {
    out.witness.row(static_cast<Eigen::Index>(rows[c])) =
        (weights[c] / std::sqrt(total)) * basis.col(static_cast<Eigen::Index>(c)).transpose();
  }
  out.m = CMatrix::Zero(static_cast<Eigen::Index>(n), width);
  out.m_prime = CMatrix::Zero(static_cast<Eigen::Index>(n), width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.m.row(static_cast<Eigen::Index>(i)) +=
          out.witness.row(static_cast<Eigen::Index>(pair_index(i, j, n)));
      out.m_prime.row(static_cast<Eigen::Index>(i)) +=
          out.witness.row(static_cast<Eigen::Index>(pair_index(j, i, n)));
    }
  }
  return out;
}

AdjacentFrames sample_adjacent_frames(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_adjacent_frames(n, d, rng);
}

RMatrix realify(const CMatrix &m) {
  RMatrix out(m.rows(), 2 * m.cols());
  out << m.real(), m.imag();
  return out;
}

RMatrix realify_frame(const CMatrix &m, double tol) {
  if (!is_frame(m, tol)) throw std::invalid_argument("input is not a frame");
  return realify(m);
}

const char *to_string(ColoringMode mode) {
  return mode == ColoringMode::certified ? "certified" : "statistical";
}

std::size_t SphereColoring::color(const RVector &v) const {
  if (static_cast<std::size_t>(v.size()) != dimension) {
    throw std::invalid_argument("direction has the wrong dimension");
  }
  if (v.norm() == 0) throw std::invalid_argument("zero vector has no direction");
  std::size_t best = 0;
  double best_dot = -2;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const double dot = centers[c].dot(v);
    if (dot > best_dot) {
      best_dot = dot;
      best = c;
    }
  }
  return best;
}

namespace {

std::size_t default_resolution(std::size_t dimension) {
  switch (dimension) {
    case 3: return 101;
    case 4: return 41;
    case 5: return 17;
    default: return 9;
  }
}

// Unit directions of a grid with `g` points per edge on every face of the
// cube [-1, 1]^D, one per column.
RMatrix cube_mesh(std::size_t dimension, std::size_t g) {
  std::size_t per_face = 1;
  for (std::size_t i = 1; i < dimension; ++i) per_face *= g;
  RMatrix mesh(static_cast<Eigen::Index>(dimension),
               static_cast<Eigen::Index>(2 * dimension * per_face));
  const double h = 2.0 / static_cast<double>(g - 1);
  Eigen::Index col = 0;
  std::vector<std::size_t> digits(dimension - 1);
  for (std::size_t axis = 0; axis < dimension; ++axis) {
    for (const double side : {-1.0, 1.0}) {
      std::fill(digits.begin(), digits.end(), 0);
      for (std::size_t p = 0; p < per_face; ++p) {
        RVector point(static_cast<Eigen::Index>(dimension));
        for (std::size_t c = 0, d = 0; c < dimension; ++c) {
          point[static_cast<Eigen::Index>(c)] =
              c == axis ? side : -1.0 + h * static_cast<double>(digits[d++]);
        }
        mesh.col(col++) = point.normalized();
        for (std::size_t pos = 0; pos < digits.size() && ++digits[pos] == g; ++pos) digits[pos] = 0;
      }
    }
  }
  return mesh;
}

RMatrix random_directions(std::size_t dimension, std::size_t count, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal;
  RMatrix out(static_cast<Eigen::Index>(dimension), static_cast<Eigen::Index>(count));
  for (Eigen::Index c = 0; c < out.cols(); ++c) {
    for (Eigen::Index r = 0; r < out.rows(); ++r) out(r, c) = normal(rng);
    out.col(c).normalize();
  }
  return out;
}

// Farthest-point greedy over the columns of `points` until every point is
// within `target` of a center; returns the achieved largest angle.
double greedy_centers(const RMatrix &points, double target, std::mt19937_64 &rng,
                      std::vector<RVector> &centers) {
  std::uniform_int_distribution<Eigen::Index> first(0, points.cols() - 1);
  Eigen::ArrayXd best = Eigen::ArrayXd::Constant(points.cols(), -2.0);
  Eigen::Index next = first(rng);
  const double target_cos = std::cos(target);
  while (true) {
    centers.emplace_back(points.col(next));
    best = best.max((centers.back().transpose() * points).transpose().array());
    const double worst = best.minCoeff(&next);
    if (worst >= target_cos) return std::acos(std::clamp(worst, -1.0, 1.0));
    if (centers.size() > static_cast<std::size_t>(points.cols())) {
      throw std::runtime_error("sphere coloring failed to converge");
    }
  }
}

}  // namespace

SphereColoring build_sphere_coloring(std::size_t dimension, std::uint64_t seed,
                                     const SphereColoringOptions &options) {
  if (dimension < 2) throw std::invalid_argument("sphere coloring needs dimension >= 2");
  if (!(options.theta > 0) || options.theta >= M_PI / 4) {
    throw std::invalid_argument("cap radius must lie in (0, pi/4)");
  }
  std::mt19937_64 rng(seed);
  SphereColoring out;
  out.dimension = dimension;
  out.theta = options.theta;

  if (dimension == 2) {
    const auto count = static_cast<std::size_t>(std::ceil(M_PI / options.theta));
    for (std::size_t c = 0; c < count; ++c) {
      const double angle = 2 * M_PI * static_cast<double>(c) / static_cast<double>(count);
      out.centers.push_back((RVector(2) << std::cos(angle), std::sin(angle)).finished());
    }
    out.covering_angle = M_PI / static_cast<double>(count);
    return out;
  }

  if (dimension <= options.max_certified_dimension) {
    const std::size_t g = options.resolution ? options.resolution : default_resolution(dimension);
    if (g < 2) throw std::invalid_argument("mesh resolution must be at least 2");
    // A sphere point's cube-surface preimage lies within (h/2) sqrt(D-1) of a
    // grid point; radial projection onto the sphere does not increase that.
    const double h = 2.0 / static_cast<double>(g - 1);
    const double chord = (h / 2) * std::sqrt(static_cast<double>(dimension - 1));
    out.slack = 2 * std::asin(std::min(1.0, chord / 2));
    if (out.slack >= options.theta) throw std::invalid_argument("mesh too coarse for the cap radius");
    const RMatrix mesh = cube_mesh(dimension, g);
    out.checked_points = static_cast<std::size_t>(mesh.cols());
    out.covering_angle = greedy_centers(mesh, options.theta - out.slack, rng, out.centers);
    return out;
  }

  out.mode = ColoringMode::statistical;
  out.slack = options.margin;
  const RMatrix samples = random_directions(dimension, options.samples, rng);
  out.checked_points = options.samples;
  out.covering_angle = greedy_centers(samples, options.theta - options.margin, rng, out.centers);
  return out;
}

std::size_t orthogonality_violations(const SphereColoring &c, std::size_t pairs,
                                     std::mt19937_64 &rng) {
  std::normal_distribution<double> normal;
  const auto d = static_cast<Eigen::Index>(c.dimension);
  std::size_t violations = 0;
  RVector u(d), v(d);
  for (std::size_t p = 0; p < pairs; ++p) {
    for (Eigen::Index i = 0; i < d; ++i) u[i] = normal(rng);
    for (Eigen::Index i = 0; i < d; ++i) v[i] = normal(rng);
    u.normalize();
    v -= v.dot(u) * u;
    v.normalize();
    if (c.color(u) == c.color(v)) ++violations;
  }
  return violations;
}

FrameColor color_frame(const SphereColoring &c, const RMatrix &m, double tol) {
  if (static_cast<std::size_t>(m.cols()) != c.dimension) {
    throw std::invalid_argument("frame width differs from the coloring dimension");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double norm = m.row(i).norm();
    if (norm > 1e3 * tol) {
      return {static_cast<std::size_t>(i), c.color(m.row(i).transpose() / norm)};
    }
  }
  throw std::invalid_argument("frame has no nonzero row");
}

}  // namespace qcsp
