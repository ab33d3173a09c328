#include "qcsp/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcsp {
namespace {

void check_dimension(std::size_t d) {
  if (d == 0 || d > kMaxDimension) {
    throw std::invalid_argument("dimension must be between 1 and " + std::to_string(kMaxDimension));
  }
}

void check_square(const PVM &p) {
  if (p.projectors.empty()) throw std::invalid_argument("PVM has no outcomes");
  const auto d = p.projectors.front().rows();
  for (const CMatrix &e : p.projectors) {
    if (e.rows() != d || e.cols() != d) throw std::invalid_argument("PVM shape mismatch");
  }
}

void check_compatible(const PVM &p, const PVM &q) {
  check_square(p);
  check_square(q);
  if (p.dimension() != q.dimension()) throw std::invalid_argument("PVM dimension mismatch");
}

}  // namespace

PvmDiagnostics validate_pvm(const PVM &p, double tol) {
  check_square(p);
  const auto d = static_cast<Eigen::Index>(p.dimension());
  PvmDiagnostics out;
  CMatrix sum = CMatrix::Zero(d, d);
  for (std::size_t s = 0; s < p.outcomes(); ++s) {
    const CMatrix &e = p.projectors[s];
    out.idempotence = std::max(out.idempotence, (e * e - e).norm());
    out.self_adjointness = std::max(out.self_adjointness, (e - e.adjoint()).norm());
    for (std::size_t t = 0; t < p.outcomes(); ++t) {
      if (t != s) out.orthogonality = std::max(out.orthogonality, (e * p.projectors[t]).norm());
    }
    sum += e;
  }
  out.completeness = (sum - CMatrix::Identity(d, d)).norm();
  out.valid = out.idempotence <= tol && out.self_adjointness <= tol && out.completeness <= tol &&
              out.orthogonality <= tol;
  return out;
}

double max_commutator(const PVM &p, const PVM &q) {
  check_compatible(p, q);
  double worst = 0;
  for (const CMatrix &e : p.projectors) {
    for (const CMatrix &f : q.projectors) worst = std::max(worst, (e * f - f * e).norm());
  }
  return worst;
}

bool pvms_commute(const PVM &p, const PVM &q, double tol) { return max_commutator(p, q) <= tol; }

bool pvms_equal(const PVM &p, const PVM &q, double tol) {
  check_compatible(p, q);
  if (p.outcomes() != q.outcomes()) return false;
  for (std::size_t s = 0; s < p.outcomes(); ++s) {
    if ((p.projectors[s] - q.projectors[s]).norm() > tol) return false;
  }
  return true;
}

std::size_t outcome_index(std::span<const Vertex> tuple, std::size_t base) {
  std::size_t index = 0;
  for (Vertex v : tuple) index = index * base + v;
  return index;
}

Tuple outcome_tuple(std::size_t index, std::size_t base, std::size_t length) {
  Tuple t(length);
  for (std::size_t i = length; i-- > 0;) {
    t[i] = index % base;
    index /= base;
  }
  return t;
}

std::optional<JointPVM> quantum_relation_membership(const std::vector<PVM> &tuple,
                                                    const std::vector<Tuple> &relation,
                                                    double tol) {
  if (tuple.empty()) throw std::invalid_argument("empty PVM tuple");
  const std::size_t r = tuple.size();
  const std::size_t n = tuple.front().outcomes();
  for (const PVM &p : tuple) {
    check_compatible(p, tuple.front());
    if (p.outcomes() != n) throw std::invalid_argument("PVMs have different outcome sets");
  }
  for (const Tuple &t : relation) {
    if (t.size() != r) throw std::invalid_argument("relation arity does not match the PVM tuple");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!pvms_commute(tuple[i], tuple[j], tol)) return std::nullopt;
    }
  }
  const auto d = static_cast<Eigen::Index>(tuple.front().dimension());
  JointPVM witness;
  Tuple t(r, 0);
  while (true) {
    CMatrix product = CMatrix::Identity(d, d);
    for (std::size_t i = 0; i < r; ++i) product = product * tuple[i].projectors[t[i]];
    const double size = product.norm();
    const bool related = std::binary_search(relation.begin(), relation.end(), t);
    if (!related && size > tol) return std::nullopt;
    if (related && size > tol) {
      witness.support.push_back(t);
      witness.projectors.push_back(std::move(product));
    }
    std::size_t pos = r;
    while (pos > 0 && ++t[pos - 1] == n) t[--pos] = 0;
    if (pos == 0) break;
  }
  return witness;
}

double marginal_residual(const std::vector<PVM> &tuple, const JointPVM &witness) {
  double worst = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t y = 0; y < tuple[i].outcomes(); ++y) {
      CMatrix diff = tuple[i].projectors[y];
      for (std::size_t w = 0; w < witness.support.size(); ++w) {
        if (witness.support[w][i] == y) diff -= witness.projectors[w];
      }
      worst = std::max(worst, diff.norm());
    }
  }
  return worst;
}

PVM deterministic_pvm(std::size_t outcome, std::size_t outcomes, std::size_t d) {
  check_dimension(d);
  if (outcome >= outcomes) throw std::invalid_argument("outcome out of range");
  const auto n = static_cast<Eigen::Index>(d);
  PVM p;
  p.projectors.assign(outcomes, CMatrix::Zero(n, n));
  p.projectors[outcome] = CMatrix::Identity(n, n);
  return p;
}

std::vector<PVM> deterministic_pvm_tuple(std::span<const Vertex> t, std::size_t outcomes,
                                         std::size_t d) {
  std::vector<PVM> out;
  for (Vertex v : t) out.push_back(deterministic_pvm(v, outcomes, d));
  return out;
}

ClassicalPvmTuple pvm_tuple_from_classical(std::span<const Vertex> t,
                                           const std::vector<Tuple> &relation,
                                           std::size_t outcomes, std::size_t d) {
  const Tuple key(t.begin(), t.end());
  if (!std::binary_search(relation.begin(), relation.end(), key)) {
    throw std::invalid_argument("tuple is not in the relation");
  }
  ClassicalPvmTuple out;
  out.pvms = deterministic_pvm_tuple(t, outcomes, d);
  const auto n = static_cast<Eigen::Index>(d);
  out.witness.support.push_back(key);
  out.witness.projectors.push_back(CMatrix::Identity(n, n));
  return out;
}

double alpha_threshold(std::size_t d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  const double dd = static_cast<double>(d);
  return std::sqrt((1.0 + std::sqrt(1.0 - 1.0 / (dd * dd))) / 2.0);
}

CloseEqualityCertificate close_pvm_equality(const PVM &p, const PVM &q, const CMatrix &basis,
                                            const std::vector<std::size_t> &labels, double tol) {
  check_compatible(p, q);
  if (p.outcomes() != q.outcomes()) throw std::invalid_argument("PVMs have different outcome sets");
  const auto d = static_cast<Eigen::Index>(p.dimension());
  if (basis.rows() != d || basis.cols() != d) throw std::invalid_argument("basis shape mismatch");
  if (labels.size() != p.dimension()) throw std::invalid_argument("one label per basis vector");
  if (!pvms_commute(p, q, tol)) throw std::invalid_argument("PVMs do not commute");
  if ((basis.adjoint() * basis - CMatrix::Identity(d, d)).norm() > tol) {
    throw std::invalid_argument("basis is not orthonormal");
  }
  for (std::size_t s : labels) {
    if (s >= p.outcomes()) throw std::invalid_argument("label outside the outcome set");
  }

  CloseEqualityCertificate out;
  out.alpha = alpha_threshold(p.dimension());
  out.min_norm = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < d; ++j) {
    const std::size_t s = labels[static_cast<std::size_t>(j)];
    out.min_norm = std::min({out.min_norm, (p.projectors[s] * basis.col(j)).norm(),
                             (q.projectors[s] * basis.col(j)).norm()});
  }
  out.certified = out.min_norm > out.alpha;
  CMatrix total = CMatrix::Zero(d, d);
  for (std::size_t s = 0; s < p.outcomes(); ++s) {
    out.products.push_back(p.projectors[s] * q.projectors[s]);
    total += out.products.back();
  }
  out.trace_sum = total.trace().real();
  out.equal = pvms_equal(p, q, tol);
  return out;
}

double joint_probability(const CVector &state, std::size_t d, const CMatrix &a, const CMatrix &b) {
  const auto n = static_cast<Eigen::Index>(d);
  // (A (x) B) psi reshaped row-major is A Psi B^T.
  const Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      psi(state.data(), n, n);
  const CMatrix image = a * psi * b.transpose();
  return (psi.conjugate().cwiseProduct(image)).sum().real();
}

QuantumVerdict verify_perfect_quantum(const RelationalStructure &x, const RelationalStructure &y,
                                      const QuantumStrategy &s, double tol) {
  check_same_signature(x.signature(), y.signature());
  check_dimension(s.dimension);
  const std::size_t d = s.dimension;
  const auto n = static_cast<Eigen::Index>(d);
  if (static_cast<std::size_t>(s.state.size()) != d * d) {
    throw std::invalid_argument("state has the wrong length");
  }
  if (std::abs(s.state.norm() - 1.0) > tol) throw std::invalid_argument("state is not a unit vector");
  if (s.bob.size() != x.size() || s.alice.size() != x.signature().size()) {
    throw std::invalid_argument("strategy tables do not fit the game");
  }
  for (const PVM &b : s.bob) {
    check_square(b);
    if (b.outcomes() != y.size() || b.dimension() != d) {
      throw std::invalid_argument("Bob PVM has the wrong shape");
    }
  }
  // Bob's reply factors: Psi B_y^T for every vertex and outcome.
  using RowMajor = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> psi(s.state.data(), n, n);
  std::vector<std::vector<CMatrix>> bob_side(x.size());
  for (Vertex v = 0; v < x.size(); ++v) {
    for (const CMatrix &b : s.bob[v].projectors) bob_side[v].push_back(psi * b.transpose());
  }
  const CMatrix psi_conj = psi.conjugate();

  for (std::size_t sym = 0; sym < x.signature().size(); ++sym) {
    const std::size_t r = x.signature()[sym].arity;
    const auto &rel = x.relation(sym);
    if (s.alice[sym].size() != rel.size()) throw std::invalid_argument("Alice table size mismatch");
    std::size_t outcomes = 1;
    for (std::size_t i = 0; i < r; ++i) outcomes *= y.size();
    for (std::size_t idx = 0; idx < rel.size(); ++idx) {
      const PVM &a = s.alice[sym][idx];
      check_square(a);
      if (a.outcomes() != outcomes || a.dimension() != d) {
        throw std::invalid_argument("Alice PVM has the wrong shape");
      }
      const Tuple &q = rel[idx];
      for (Vertex v = 0; v < x.size(); ++v) {
        std::vector<std::vector<double>> prob(outcomes, std::vector<double>(y.size()));
        double total = 0;
        for (std::size_t o = 0; o < outcomes; ++o) {
          for (std::size_t b = 0; b < y.size(); ++b) {
            prob[o][b] = psi_conj.cwiseProduct(a.projectors[o] * bob_side[v][b]).sum().real();
            total += prob[o][b];
          }
        }
        if (std::abs(total - 1.0) > std::max(tol, 1e-12) * static_cast<double>(outcomes * y.size())) {
          throw std::invalid_argument("outcome probabilities do not sum to 1");
        }
        for (const FailureReason reason : {FailureReason::plausibility, FailureReason::consistency}) {
          for (std::size_t o = 0; o < outcomes; ++o) {
            const Tuple answer = outcome_tuple(o, y.size(), r);
            const bool plausible = y.contains(sym, answer);
            for (std::size_t b = 0; b < y.size(); ++b) {
              bool loses = false;
              if (reason == FailureReason::plausibility) {
                loses = !plausible;
              } else {
                for (std::size_t i = 0; i < r; ++i) loses = loses || (q[i] == v && answer[i] != b);
              }
              if (loses && prob[o][b] > tol) {
                return {false, Counterexample{sym, q, v, reason, answer, b}, prob[o][b]};
              }
            }
          }
        }
      }
    }
  }
  return {};
}

QuantumStrategy quantum_strategy_from_hom(const VertexMap &h, const RelationalStructure &x,
                                          const RelationalStructure &y, std::size_t d) {
  check_dimension(d);
  if (!is_homomorphism(h, x, y)) throw std::invalid_argument("map is not a homomorphism");
  QuantumStrategy s;
  s.dimension = d;
  s.state = CVector::Zero(static_cast<Eigen::Index>(d * d));
  for (std::size_t a = 0; a < d; ++a) {
    s.state[static_cast<Eigen::Index>(a * d + a)] = 1.0 / std::sqrt(static_cast<double>(d));
  }
  for (std::size_t sym = 0; sym < x.signature().size(); ++sym) {
    std::size_t outcomes = 1;
    for (std::size_t i = 0; i < x.signature()[sym].arity; ++i) outcomes *= y.size();
    s.alice.emplace_back();
    for (const Tuple &q : x.relation(sym)) {
      s.alice[sym].push_back(deterministic_pvm(outcome_index(map_tuple(h, q), y.size()), outcomes, d));
    }
  }
  for (Vertex v = 0; v < x.size(); ++v) s.bob.push_back(deterministic_pvm(h[v], y.size(), d));
  return s;
}

CMatrix random_unitary(std::size_t d, std::mt19937_64 &rng) {
  check_dimension(d);
  std::normal_distribution<double> normal;
  const auto n = static_cast<Eigen::Index>(d);
  CMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = {normal(rng), normal(rng)};
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto diag = r(j, j);
    if (std::abs(diag) > 0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

PVM pvm_from_basis(const CMatrix &basis, const std::vector<std::size_t> &labels,
                   std::size_t outcomes) {
  const auto n = basis.rows();
  if (basis.cols() != n || labels.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("one label per basis column");
  }
  PVM p;
  p.projectors.assign(outcomes, CMatrix::Zero(n, n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::size_t s = labels[static_cast<std::size_t>(j)];
    if (s >= outcomes) throw std::invalid_argument("label outside the outcome set");
    p.projectors[s] += basis.col(j) * basis.col(j).adjoint();
  }
  return p;
}

PVM random_pvm(std::size_t d, std::size_t outcomes, std::mt19937_64 &rng) {
  if (outcomes == 0) throw std::invalid_argument("PVM needs an outcome");
  const CMatrix u = random_unitary(d, rng);
  std::uniform_int_distribution<std::size_t> label(0, outcomes - 1);
  std::vector<std::size_t> labels(d);
  for (auto &l : labels) l = label(rng);
  return pvm_from_basis(u, labels, outcomes);
}

}  // namespace qcsp
