#include "qcsp/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "qcsp/covering_array.hpp"
#include "qcsp/patterns.hpp"

namespace qcsp {

PowerEmbedding clique_into_alice_power(const RelationalStructure &y, std::size_t n,
                                       std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("clique embedding needs n >= 1");
  const SigmaPattern pattern = pattern_of(y);
  std::mt19937_64 rng(seed);
  std::vector<Tuple> rows(n);
  for (std::size_t s = 0; s < y.signature().size(); ++s) {
    const std::size_t strength = std::min(y.signature()[s].arity, n);
    for (const Partition &pi : pattern.by_symbol[s]) {
      const auto witness = least_tuple_coarser_than(y.relation(s), pi);
      // pattern_of only lists partitions realized by some tuple.
      if (!witness) throw std::logic_error("pattern partition without a witness tuple");
      const CoveringArray array = covering_array(n, strength, *witness, rng);
      for (std::size_t i = 0; i < n; ++i) {
        const auto row = array.row(i);
        rows[i].insert(rows[i].end(), row.begin(), row.end());
      }
    }
  }
  PowerEmbedding out;
  out.k = rows[0].size();
  out.source = complete_structure(n, pattern);
  if (out.k == 0) {
    // Every relation is empty, so the source has no tuples either.
    out.k = 1;
    for (auto &row : rows) row.assign(1, 0);
    if (y.size() == 0) throw std::invalid_argument("clique embedding into an empty structure");
  }
  const AlicePowerView view(y, out.k);
  out.map.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.map[i] = view.encode(rows[i]);
  if (!is_homomorphism(out.map, out.source, view)) {
    throw std::logic_error("clique embedding failed verification");
  }
  return out;
}

std::size_t balanced_tuple_length(std::size_t m) {
  if (m == 0) throw std::invalid_argument("clique size must be positive");
  if (m == 1) return 1;
  const double lg = std::log2(static_cast<double>(m));
  return static_cast<std::size_t>(std::ceil(lg + std::log2(lg) + 2.0));
}

PowerEmbedding clique_into_alice_power_digraph(const RelationalStructure &y, std::size_t m) {
  if (y.signature().size() != 1 || y.signature()[0].arity != 2) {
    throw std::invalid_argument("expected a digraph");
  }
  const auto &edges = y.relation(0);
  if (edges.empty()) throw std::invalid_argument("digraph has no edge");
  auto edge = std::find_if(edges.begin(), edges.end(), [](const Tuple &t) { return t[0] != t[1]; });
  if (edge == edges.end()) edge = edges.begin();
  const Vertex a = (*edge)[0];
  const Vertex b = (*edge)[1];

  PowerEmbedding out;
  out.k = balanced_tuple_length(m);
  out.source = clique(m);
  const std::size_t ones = out.k / 2;
  std::vector<std::size_t> positions(ones);
  for (std::size_t i = 0; i < ones; ++i) positions[i] = i;
  const AlicePowerView view(y, out.k);
  for (std::size_t v = 0; v < m; ++v) {
    Tuple t(out.k, b);
    for (std::size_t p : positions) t[p] = a;
    out.map.push_back(view.encode(t));
    // Next ones-subset of [k] in lexicographic order.
    std::size_t i = ones;
    while (i > 0 && positions[i - 1] == out.k - ones + (i - 1)) --i;
    if (i == 0) {
      if (v + 1 < m) throw std::logic_error("not enough balanced tuples");
      break;
    }
    ++positions[i - 1];
    for (std::size_t j = i; j < ones; ++j) positions[j] = positions[j - 1] + 1;
  }
  if (!is_homomorphism(out.map, out.source, view)) {
    throw std::logic_error("balanced clique embedding failed verification");
  }
  return out;
}

std::optional<PowerEmbedding> complete_into_bob_power(const RelationalStructure &y, std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete structure needs n >= 1");
  const auto central = central_vertices(y);
  if (central.empty()) return std::nullopt;
  PowerEmbedding out;
  out.k = n;
  out.source = complete_structure(n, pattern_of(y));
  const BobPowerView view(y, n);
  for (std::size_t i = 0; i < n; ++i) out.map.push_back(view.encode(i, central.front()));
  if (!is_homomorphism(out.map, out.source, view)) {
    throw std::logic_error("central-vertex embedding failed verification");
  }
  return out;
}

}  // namespace qcsp
