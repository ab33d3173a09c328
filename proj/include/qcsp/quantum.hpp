#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "qcsp/games.hpp"
#include "qcsp/structure.hpp"

namespace qcsp {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kMaxDimension = 16;

/// Projection-valued measurement on C^d with outcomes 0..n-1. All residuals
/// below are Frobenius norms.
struct PVM {
  std::vector<CMatrix> projectors;

  [[nodiscard]] std::size_t outcomes() const { return projectors.size(); }
  [[nodiscard]] std::size_t dimension() const {
    return projectors.empty() ? 0 : static_cast<std::size_t>(projectors.front().rows());
  }
};

struct PvmDiagnostics {
  bool valid = false;
  double idempotence = 0;     ///< max ||E^2 - E||
  double self_adjointness = 0;  ///< max ||E - E*||
  double completeness = 0;    ///< ||sum E - I||
  double orthogonality = 0;   ///< max ||E_s E_t||, s != t
};

/// Throws std::invalid_argument if the projectors are not square matrices of
/// one common size, or the PVM has no outcomes.
PvmDiagnostics validate_pvm(const PVM &p, double tol = kDefaultTol);

/// Largest commutator norm ||E_s F_t - F_t E_s||.
double max_commutator(const PVM &p, const PVM &q);
bool pvms_commute(const PVM &p, const PVM &q, double tol = kDefaultTol);
/// Entrywise equality of the projector families within tol.
bool pvms_equal(const PVM &p, const PVM &q, double tol = kDefaultTol);

/// Lexicographic index of a tuple over {0, ..., base-1}, first entry most
/// significant, and its inverse.
std::size_t outcome_index(std::span<const Vertex> tuple, std::size_t base);
Tuple outcome_tuple(std::size_t index, std::size_t base, std::size_t length);

/// Joint measurement over tuples, stored only on its support.
struct JointPVM {
  std::vector<Tuple> support;
  std::vector<CMatrix> projectors;
};

/// Decides whether a tuple of PVMs over Y lies in R of the quantised
/// template: the PVMs commute pairwise and every product
/// E1_{y1} ... Er_{yr} with (y1, ..., yr) outside `relation` vanishes. The
/// witness is the family of products on `relation` (zero products dropped).
/// Throws std::invalid_argument if the PVMs differ in dimension or outcome
/// count, or the relation arity does not match.
std::optional<JointPVM> quantum_relation_membership(const std::vector<PVM> &tuple,
                                                    const std::vector<Tuple> &relation,
                                                    double tol = kDefaultTol);

/// Largest ||E(i)_y - sum of F_t over support tuples t with t_i = y||.
double marginal_residual(const std::vector<PVM> &tuple, const JointPVM &witness);

/// The PVM putting I on `outcome` and O elsewhere.
PVM deterministic_pvm(std::size_t outcome, std::size_t outcomes, std::size_t d);
/// One deterministic PVM per entry of `t`; no relation check.
std::vector<PVM> deterministic_pvm_tuple(std::span<const Vertex> t, std::size_t outcomes,
                                         std::size_t d);

struct ClassicalPvmTuple {
  std::vector<PVM> pvms;
  JointPVM witness;
};

/// Deterministic PVM tuple for a tuple t of R^Y, with witness F_t = I.
/// Throws std::invalid_argument if t is not in `relation`.
ClassicalPvmTuple pvm_tuple_from_classical(std::span<const Vertex> t,
                                           const std::vector<Tuple> &relation,
                                           std::size_t outcomes, std::size_t d);

/// sqrt((1 + sqrt(1 - 1/d^2)) / 2).
double alpha_threshold(std::size_t d);

struct CloseEqualityCertificate {
  bool certified = false;
  /// Whether the two PVMs agree within tol (reported, not assumed).
  bool equal = false;
  double alpha = 0;
  /// Smallest ||E_{tau(j)} v_j|| or ||F_{tau(j)} v_j|| over j.
  double min_norm = 0;
  /// G_s = E_s F_s and the real part of tr(sum_s G_s).
  std::vector<CMatrix> products;
  double trace_sum = 0;
};

/// Two commuting PVMs over the same outcomes, an orthonormal basis given by
/// the columns of `basis`, and a label tau(j) in the outcome set for each
/// basis vector. Certified iff every ||E_{tau(j)} v_j|| and ||F_{tau(j)} v_j||
/// exceeds alpha_threshold(d). Throws std::invalid_argument if the PVMs do not
/// commute, the basis is not orthonormal, or a label is out of range.
CloseEqualityCertificate close_pvm_equality(const PVM &p, const PVM &q, const CMatrix &basis,
                                            const std::vector<std::size_t> &labels,
                                            double tol = kDefaultTol);

/// Shared state plus one PVM per question. Alice's PVMs are indexed like the
/// classical answer tables and have |Y|^r outcomes in outcome_index order.
struct QuantumStrategy {
  std::size_t dimension = 1;
  /// Unit vector of length d^2; entry a*d + b pairs Alice's a with Bob's b.
  CVector state;
  std::vector<std::vector<PVM>> alice;
  std::vector<PVM> bob;
};

/// psi* (A (x) B) psi.
double joint_probability(const CVector &state, std::size_t d, const CMatrix &a, const CMatrix &b);

struct QuantumVerdict {
  bool perfect = true;
  std::optional<Counterexample> counterexample;
  /// Probability of the reported losing outcome.
  double losing_probability = 0;
};

/// Every question (R, x̄, x) in classical order; within a question losing
/// outcomes are scanned for plausibility first, then consistency. Perfect iff
/// every losing outcome has probability at most tol. Throws
/// std::invalid_argument on malformed tables or when a question's outcome
/// probabilities do not sum to 1 within tol.
QuantumVerdict verify_perfect_quantum(const RelationalStructure &x, const RelationalStructure &y,
                                      const QuantumStrategy &s, double tol = kDefaultTol);

/// Maximally entangled state with deterministic PVMs following h.
QuantumStrategy quantum_strategy_from_hom(const VertexMap &h, const RelationalStructure &x,
                                          const RelationalStructure &y, std::size_t d);

/// Haar-like random unitary from the QR decomposition of a complex Gaussian
/// matrix.
CMatrix random_unitary(std::size_t d, std::mt19937_64 &rng);
/// Rank-one projectors onto the columns of `basis`, grouped by labels[j].
PVM pvm_from_basis(const CMatrix &basis, const std::vector<std::size_t> &labels,
                   std::size_t outcomes);
/// Random eigenbasis with uniformly random outcome labels.
PVM random_pvm(std::size_t d, std::size_t outcomes, std::mt19937_64 &rng);

}  // namespace qcsp
