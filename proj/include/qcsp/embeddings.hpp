#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "qcsp/powers.hpp"
#include "qcsp/structure.hpp"

namespace qcsp {

/// A verified homomorphism from `source` into a k-fold power of some Y.
/// `map` uses the vertex ids of AlicePowerView / BobPowerView.
struct PowerEmbedding {
  std::size_t k = 0;
  RelationalStructure source;
  VertexMap map;
};

/// Complete structure of size n on ptn(Y) into an Alice power of Y.
///
/// For every symbol R and partition pi of ptn(Y)_R a covering array of
/// strength min(ar(R), n) is built over the entries of the least tuple of R^Y
/// coarser than pi; the arrays are concatenated column-wise and vertex i is
/// sent to row i. The witness is checked before returning.
PowerEmbedding clique_into_alice_power(const RelationalStructure &y, std::size_t n,
                                       std::uint64_t seed = 0);

/// Length of the balanced tuples used for K_m in a digraph's Alice power:
/// ceil(log2 m + log2 log2 m + 2), and 1 for m = 1.
std::size_t balanced_tuple_length(std::size_t m);

/// K_m into an Alice power of a digraph with an edge (a, b): vertex i goes to
/// the i-th k-tuple over {a, b} with exactly floor(k/2) entries equal to a.
/// Throws std::invalid_argument if Y is not a single binary relation or has
/// no edge.
PowerEmbedding clique_into_alice_power_digraph(const RelationalStructure &y, std::size_t m);

/// Complete structure of size n on ptn(Y) into the n-fold Bob power via
/// i -> (i, v) for the least central vertex v; nullopt when Y has no central
/// vertex.
std::optional<PowerEmbedding> complete_into_bob_power(const RelationalStructure &y, std::size_t n);

}  // namespace qcsp
