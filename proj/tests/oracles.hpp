#pragma once

// Independent reference implementations used to cross-check the library.

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "qcsp/structure.hpp"

namespace oracle {

using qcsp::RelationalStructure;
using qcsp::Tuple;
using qcsp::Vertex;
using qcsp::VertexMap;

inline bool preserves(const VertexMap &f, const RelationalStructure &x, const RelationalStructure &y) {
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    std::set<Tuple> target(y.relation(s).begin(), y.relation(s).end());
    for (const Tuple &t : x.relation(s)) {
      Tuple image;
      for (Vertex v : t) image.push_back(f[v]);
      if (!target.count(image)) return false;
    }
  }
  return true;
}

/// Visits every map X -> Y in lexicographic order until `visit` returns true.
template <typename Visit>
bool for_each_map(std::size_t from, std::size_t to, Visit visit) {
  if (to == 0) return from == 0 && visit(VertexMap{});
  VertexMap f(from, 0);
  while (true) {
    if (visit(f)) return true;
    std::size_t i = from;
    while (i > 0) {
      --i;
      if (++f[i] < to) break;
      f[i] = 0;
      if (i == 0) return false;
    }
    if (from == 0) return false;
  }
}

/// Exhaustive homomorphism test over all |Y|^|X| maps.
inline std::optional<VertexMap> brute_force_hom(const RelationalStructure &x, const RelationalStructure &y,
                                                bool injective = false) {
  std::optional<VertexMap> found;
  for_each_map(x.size(), y.size(), [&](const VertexMap &f) {
    if (injective && std::set<Vertex>(f.begin(), f.end()).size() != f.size()) return false;
    if (preserves(f, x, y)) {
      found = f;
      return true;
    }
    return false;
  });
  return found;
}

inline RelationalStructure random_digraph(std::mt19937_64 &rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Tuple> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return qcsp::digraph(n, std::move(edges));
}

inline RelationalStructure random_structure(std::mt19937_64 &rng, const qcsp::Signature &sig, std::size_t n,
                                            std::size_t tuples_per_relation) {
  std::vector<std::vector<Tuple>> rels(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (std::size_t i = 0; i < tuples_per_relation; ++i) {
      Tuple t(sig[s].arity);
      for (auto &v : t) v = rng() % n;
      rels[s].push_back(std::move(t));
    }
  }
  return RelationalStructure(sig, n, std::move(rels));
}

/// Least number of colors in a proper vertex coloring of a loopless digraph.
inline std::size_t classical_chromatic_number(const RelationalStructure &g) {
  for (std::size_t c = 1; c <= g.size(); ++c) {
    bool ok = for_each_map(g.size(), c, [&](const VertexMap &f) {
      for (const Tuple &e : g.relation(0)) {
        if (f[e[0]] == f[e[1]]) return false;
      }
      return true;
    });
    if (ok) return c;
  }
  return g.size();
}

}  // namespace oracle
