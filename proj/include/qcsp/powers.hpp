#pragma once

#include <cstddef>

#include "qcsp/structure.hpp"

namespace qcsp {

/// Default cap on the number of vertices of a materialized Alice power.
inline constexpr std::size_t kAlicePowerVertexCap = 100'000;
/// Cap on the number of candidate/generated tuples while materializing a power.
inline constexpr std::size_t kPowerTupleCap = 20'000'000;

/// Implicit k-fold Alice power: vertices are k-tuples over Y, encoded as
/// base-|Y| integers with the first coordinate most significant (so ids follow
/// the lexicographic order of Y^k). A tuple of vertices is related iff some
/// coordinate projects into the base relation.
class AlicePowerView {
 public:
  /// Keeps a reference to `base`. Throws SizeCapExceeded when |Y|^k does not
  /// fit in 62 bits.
  AlicePowerView(const RelationalStructure &base, std::size_t k);
  AlicePowerView(RelationalStructure &&, std::size_t) = delete;

  [[nodiscard]] const Signature &signature() const { return base_->signature(); }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] const RelationalStructure &base() const { return *base_; }
  [[nodiscard]] bool contains(std::size_t symbol, std::span<const Vertex> tuple) const;

  [[nodiscard]] Vertex encode(std::span<const Vertex> coordinates) const;
  [[nodiscard]] Tuple decode(Vertex v) const;
  /// Coordinate j (0-based) of vertex v.
  [[nodiscard]] Vertex coordinate(Vertex v, std::size_t j) const;

 private:
  const RelationalStructure *base_;
  std::size_t k_;
  std::size_t size_;
};

/// Implicit k-fold Bob power on [k] x Y; vertex (s, y) has id s*|Y| + y,
/// with message slots s numbered from 0.
class BobPowerView {
 public:
  /// Keeps a reference to `base`.
  BobPowerView(const RelationalStructure &base, std::size_t k);
  BobPowerView(RelationalStructure &&, std::size_t) = delete;

  [[nodiscard]] const Signature &signature() const { return base_->signature(); }
  [[nodiscard]] std::size_t size() const { return k_ * base_->size(); }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] const RelationalStructure &base() const { return *base_; }
  [[nodiscard]] bool contains(std::size_t symbol, std::span<const Vertex> tuple) const;

  [[nodiscard]] Vertex encode(std::size_t slot, Vertex y) const { return slot * base_->size() + y; }
  [[nodiscard]] std::size_t slot(Vertex v) const { return v / base_->size(); }
  [[nodiscard]] Vertex value(Vertex v) const { return v % base_->size(); }

 private:
  const RelationalStructure *base_;
  std::size_t k_;
};

/// Materialized Alice power. Throws SizeCapExceeded if |Y|^k exceeds
/// `vertex_cap` or the relations grow past kPowerTupleCap.
RelationalStructure alice_power(const RelationalStructure &y, std::size_t k,
                                std::size_t vertex_cap = kAlicePowerVertexCap);

/// Materialized Bob power.
RelationalStructure bob_power(const RelationalStructure &y, std::size_t k);

/// True iff the relation is the Cartesian product of its coordinate projections.
bool is_cartesian_product(const std::vector<Tuple> &relation, std::size_t arity);

/// One bit of Alice-to-Bob communication enlarges the CSP iff the core has
/// more than one vertex.
bool alice_one_bit_helps(const RelationalStructure &y);
/// One bit of Bob-to-Alice communication enlarges the CSP iff some relation of
/// the core is not a Cartesian product.
bool bob_one_bit_helps(const RelationalStructure &y);

/// The same questions answered directly: is there no homomorphism from the
/// 2-fold power back into Y?
bool alice_one_bit_helps_by_search(const RelationalStructure &y);
bool bob_one_bit_helps_by_search(const RelationalStructure &y);

/// y -> (y, ..., y) into the k-fold Alice power.
VertexMap alice_diagonal(const RelationalStructure &y, std::size_t k);
/// y -> (first slot, y) into the k-fold Bob power.
VertexMap bob_first_slot(const RelationalStructure &y, std::size_t k);
/// Coordinatewise lift of h: X -> Y to the k-fold Alice powers.
VertexMap lift_to_alice_powers(const VertexMap &h, const RelationalStructure &x,
                               const RelationalStructure &y, std::size_t k);
/// (s, x) -> (s, h(x)) between k-fold Bob powers.
VertexMap lift_to_bob_powers(const VertexMap &h, const RelationalStructure &x,
                             const RelationalStructure &y, std::size_t k);
/// k-fold -> (k+1)-fold Alice power by repeating the last coordinate.
VertexMap alice_power_step(const RelationalStructure &y, std::size_t k);
/// k-fold -> (k+1)-fold Bob power by slot inclusion.
VertexMap bob_power_step(const RelationalStructure &y, std::size_t k);

}  // namespace qcsp
