#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcsp {

using Vertex = std::size_t;
using Tuple = std::vector<Vertex>;
/// A total map between vertex sets, indexed by source vertex.
using VertexMap = std::vector<Vertex>;

/// Raised when two structures (or a structure and a strategy) disagree on
/// their signature, or a map is not total / leaves the target domain.
class SignatureMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a construction would exceed a configured size cap.
class SizeCapExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Symbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Symbol &, const Symbol &) = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  /// Single binary symbol "E"; the digraph signature.
  static Signature digraph();

  [[nodiscard]] std::size_t size() const { return symbols_.size(); }
  [[nodiscard]] const Symbol &operator[](std::size_t i) const { return symbols_[i]; }
  [[nodiscard]] const std::vector<Symbol> &symbols() const { return symbols_; }
  [[nodiscard]] std::optional<std::size_t> find(const std::string &name) const;

  friend bool operator==(const Signature &, const Signature &) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Finite relational structure on the vertex set {0, ..., size()-1}.
///
/// Relations are kept sorted and duplicate-free, so two structures with the
/// same tuples compare equal regardless of construction order. Instances are
/// immutable after construction.
class RelationalStructure {
 public:
  RelationalStructure() = default;
  /// Validates arities and vertex ranges; sorts and deduplicates each relation.
  RelationalStructure(Signature signature, std::size_t domain_size,
                      std::vector<std::vector<Tuple>> relations);

  [[nodiscard]] const Signature &signature() const { return signature_; }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] const std::vector<Tuple> &relation(std::size_t symbol) const {
    return relations_[symbol];
  }
  [[nodiscard]] const std::vector<std::vector<Tuple>> &relations() const { return relations_; }
  [[nodiscard]] bool contains(std::size_t symbol, std::span<const Vertex> tuple) const;
  [[nodiscard]] std::size_t tuple_count() const;

  friend bool operator==(const RelationalStructure &, const RelationalStructure &) = default;

 private:
  Signature signature_;
  std::size_t size_ = 0;
  std::vector<std::vector<Tuple>> relations_;
};

/// Substructure induced on `vertices` (renumbered 0.. in the given order).
RelationalStructure induced_substructure(const RelationalStructure &y,
                                         std::span<const Vertex> vertices);

/// Image of a tuple under a vertex map.
Tuple map_tuple(const VertexMap &f, std::span<const Vertex> tuple);

/// Anything that answers relation-membership queries over a finite vertex set:
/// materialized structures as well as implicit views of large powers.
template <typename T>
concept RelationalTarget = requires(const T &t, std::size_t symbol, std::span<const Vertex> tuple) {
  { t.signature() } -> std::convertible_to<const Signature &>;
  { t.size() } -> std::convertible_to<std::size_t>;
  { t.contains(symbol, tuple) } -> std::convertible_to<bool>;
};

void check_same_signature(const Signature &a, const Signature &b);

/// True iff `f` maps every tuple of every relation of `x` into the matching
/// relation of `y`. Throws SignatureMismatch when the signatures differ, or
/// when `f` is not total on x or leaves the domain of y.
template <RelationalTarget Target>
bool is_homomorphism(const VertexMap &f, const RelationalStructure &x, const Target &y) {
  check_same_signature(x.signature(), y.signature());
  if (f.size() != x.size()) {
    throw SignatureMismatch("vertex map is not total on the source structure");
  }
  for (Vertex v : f) {
    if (v >= y.size()) throw SignatureMismatch("vertex map leaves the target domain");
  }
  Tuple image;
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    for (const Tuple &t : x.relation(s)) {
      image.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = f[t[i]];
      if (!y.contains(s, image)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Homomorphism search

struct SearchOptions {
  /// Require the witness to be injective.
  bool injective = false;
  /// Optional per-source-vertex candidate lists; empty means "any vertex".
  std::vector<std::vector<Vertex>> allowed;
};

/// Complete backtracking search with generalized arc consistency. Variables
/// are branched in descending relation degree (ties by vertex id), values in
/// ascending order, so the returned witness is deterministic.
std::optional<VertexMap> find_homomorphism(const RelationalStructure &x,
                                           const RelationalStructure &y,
                                           const SearchOptions &options = {});

/// Vertex ids of a core of `y`, as an increasing list of original ids.
std::vector<Vertex> core_vertices(const RelationalStructure &y);
/// Induced substructure on core_vertices(y).
RelationalStructure core_of(const RelationalStructure &y);

/// A relation-preserving bijection with relation-preserving inverse, if any.
std::optional<VertexMap> find_isomorphism(const RelationalStructure &a,
                                          const RelationalStructure &b);
bool are_isomorphic(const RelationalStructure &a, const RelationalStructure &b);

bool homomorphically_equivalent(const RelationalStructure &a, const RelationalStructure &b);

// ---------------------------------------------------------------------------
// Catalog

/// Named structures: clique(n), nae(n), rainbow(n), directed_edge,
/// directed_cycle(n), one_in_three, loop. Throws std::invalid_argument on an
/// unknown name or bad parameter.
RelationalStructure make_named(const std::string &name, std::span<const long long> params = {});

RelationalStructure clique(std::size_t n);
RelationalStructure nae(std::size_t n);
RelationalStructure rainbow(std::size_t n);
RelationalStructure directed_edge();
RelationalStructure directed_cycle(std::size_t n);
RelationalStructure one_in_three();
RelationalStructure loop();

/// Digraph on n vertices with the given directed edges.
RelationalStructure digraph(std::size_t n, std::vector<Tuple> edges);
/// Structure with one relation "R" of the given arity.
RelationalStructure single_relation(std::size_t n, std::size_t arity, std::vector<Tuple> tuples);

}  // namespace qcsp
