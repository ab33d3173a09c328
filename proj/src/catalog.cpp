#include <stdexcept>

#include "qcsp/structure.hpp"

namespace qcsp {
namespace {

Signature ternary() { return Signature({{"R", 3}}); }

std::vector<Tuple> all_triples(std::size_t n) {
  std::vector<Tuple> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex c = 0; c < n; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

std::size_t positive(std::span<const long long> params, std::size_t index, const std::string &name,
                     long long minimum) {
  if (params.size() <= index) throw std::invalid_argument(name + " needs a size parameter");
  if (params[index] < minimum) {
    throw std::invalid_argument(name + " parameter must be at least " + std::to_string(minimum));
  }
  return static_cast<std::size_t>(params[index]);
}

}  // namespace

RelationalStructure digraph(std::size_t n, std::vector<Tuple> edges) {
  return {Signature::digraph(), n, {std::move(edges)}};
}

RelationalStructure single_relation(std::size_t n, std::size_t arity, std::vector<Tuple> tuples) {
  return {Signature({{"R", arity}}), n, {std::move(tuples)}};
}

RelationalStructure clique(std::size_t n) {
  if (n < 1) throw std::invalid_argument("clique needs n >= 1");
  std::vector<Tuple> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b) edges.push_back({a, b});
    }
  }
  return digraph(n, std::move(edges));
}

RelationalStructure nae(std::size_t n) {
  if (n < 1) throw std::invalid_argument("nae needs n >= 1");
  std::vector<Tuple> tuples;
  for (Tuple &t : all_triples(n)) {
    if (!(t[0] == t[1] && t[1] == t[2])) tuples.push_back(std::move(t));
  }
  return {ternary(), n, {std::move(tuples)}};
}

RelationalStructure rainbow(std::size_t n) {
  if (n < 1) throw std::invalid_argument("rainbow needs n >= 1");
  std::vector<Tuple> tuples;
  for (Tuple &t : all_triples(n)) {
    if (t[0] != t[1] && t[1] != t[2] && t[0] != t[2]) tuples.push_back(std::move(t));
  }
  return {ternary(), n, {std::move(tuples)}};
}

RelationalStructure directed_edge() { return digraph(2, {{0, 1}}); }

RelationalStructure directed_cycle(std::size_t n) {
  if (n < 1) throw std::invalid_argument("directed_cycle needs n >= 1");
  std::vector<Tuple> edges;
  for (Vertex a = 0; a < n; ++a) edges.push_back({a, (a + 1) % n});
  return digraph(n, std::move(edges));
}

RelationalStructure one_in_three() { return {ternary(), 2, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }

RelationalStructure loop() { return digraph(1, {{0, 0}}); }

RelationalStructure make_named(const std::string &name, std::span<const long long> params) {
  if (name == "clique") return clique(positive(params, 0, name, 1));
  if (name == "nae") return nae(positive(params, 0, name, 1));
  if (name == "rainbow") return rainbow(positive(params, 0, name, 1));
  if (name == "directed_cycle") return directed_cycle(positive(params, 0, name, 1));
  if (name == "directed_edge") return directed_edge();
  if (name == "one_in_three") return one_in_three();
  if (name == "loop") return loop();
  throw std::invalid_argument("unknown catalog structure '" + name + "'");
}

}  // namespace qcsp
