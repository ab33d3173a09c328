#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qcsp/structure.hpp"

namespace qcsp {

/// Partition of the positions {0, ..., r-1}, stored as a restricted growth
/// string: labels()[i] is the block of position i, blocks numbered by first
/// occurrence. Equal partitions therefore have equal labels.
class Partition {
 public:
  Partition() = default;
  /// Canonicalizes arbitrary block labels.
  explicit Partition(std::span<const std::size_t> labels);
  /// Builds from explicit blocks of 0-based positions; throws if they do not
  /// partition {0, ..., r-1}.
  static Partition from_blocks(std::size_t r, const std::vector<std::vector<std::size_t>> &blocks);
  static Partition discrete(std::size_t r);
  static Partition single_block(std::size_t r);

  [[nodiscard]] std::size_t arity() const { return labels_.size(); }
  [[nodiscard]] std::size_t block_count() const;
  [[nodiscard]] const std::vector<std::size_t> &labels() const { return labels_; }
  /// Blocks of 0-based positions, in order of first element.
  [[nodiscard]] std::vector<std::vector<std::size_t>> blocks() const;
  [[nodiscard]] bool same_block(std::size_t i, std::size_t j) const {
    return labels_[i] == labels_[j];
  }
  /// 1-based rendering such as {{1,2},{3}}.
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Partition &, const Partition &) = default;

 private:
  std::vector<std::size_t> labels_;
};

/// Partition of positions into maximal runs of equal entries, under an
/// arbitrary equality predicate.
template <typename T, typename Equal>
Partition tuple_partition(std::span<const T> tuple, Equal equal) {
  if (tuple.empty()) throw std::invalid_argument("tuple_partition of an empty tuple");
  std::vector<std::size_t> labels(tuple.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    labels[i] = next;
    for (std::size_t j = 0; j < i; ++j) {
      if (equal(tuple[j], tuple[i])) {
        labels[i] = labels[j];
        break;
      }
    }
    if (labels[i] == next) ++next;
  }
  return Partition(labels);
}

Partition tuple_partition(std::span<const Vertex> tuple);

/// p is at least as fine as q: every block of p lies inside a block of q.
/// Throws std::invalid_argument if the arities differ.
bool refines(const Partition &p, const Partition &q);

/// Every partition of {0, ..., r-1}, in increasing label order.
std::vector<Partition> all_partitions(std::size_t r);

/// One set of partitions per relation symbol.
struct SigmaPattern {
  Signature signature;
  std::vector<std::set<Partition>> by_symbol;

  friend bool operator==(const SigmaPattern &, const SigmaPattern &) = default;
};

/// For each symbol, every partition refining the pattern of some tuple.
SigmaPattern pattern_of(const RelationalStructure &y);

/// Complete structure of size n on pattern p: a tuple is related iff its own
/// pattern refines some partition of p.
RelationalStructure complete_structure(std::size_t n, const SigmaPattern &p);

/// Least n with Y -> complete_structure(n, pattern_of(Y)); at most |Y|.
std::size_t chromatic_number(const RelationalStructure &y);

/// Vertices v such that every block of every pattern partition is realized
/// constantly equal to v by some tuple.
std::vector<Vertex> central_vertices(const RelationalStructure &y);

/// Least tuple of `relation` whose pattern is refined by `pi` (i.e. pi is at
/// least as fine as its pattern), if any.
std::optional<Tuple> least_tuple_coarser_than(const std::vector<Tuple> &relation,
                                              const Partition &pi);

}  // namespace qcsp
