#include "qcsp/patterns.hpp"

#include <algorithm>
#include <functional>

namespace qcsp {

Partition::Partition(std::span<const std::size_t> labels) : labels_(labels.size()) {
  std::vector<std::pair<std::size_t, std::size_t>> renamed;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(renamed.begin(), renamed.end(),
                           [&](const auto &p) { return p.first == labels[i]; });
    if (it == renamed.end()) {
      renamed.emplace_back(labels[i], renamed.size());
      labels_[i] = renamed.size() - 1;
    } else {
      labels_[i] = it->second;
    }
  }
}

Partition Partition::from_blocks(std::size_t r,
                                 const std::vector<std::vector<std::size_t>> &blocks) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(r, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("partition block is empty");
    for (std::size_t i : blocks[b]) {
      if (i >= r) throw std::invalid_argument("partition position out of range");
      if (labels[i] != unset) throw std::invalid_argument("partition blocks overlap");
      labels[i] = b;
    }
  }
  if (std::find(labels.begin(), labels.end(), unset) != labels.end()) {
    throw std::invalid_argument("partition blocks do not cover every position");
  }
  return Partition(labels);
}

Partition Partition::discrete(std::size_t r) {
  std::vector<std::size_t> labels(r);
  for (std::size_t i = 0; i < r; ++i) labels[i] = i;
  return Partition(labels);
}

Partition Partition::single_block(std::size_t r) {
  std::vector<std::size_t> labels(r, 0);
  return Partition(labels);
}

std::size_t Partition::block_count() const {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count());
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
  return out;
}

std::string Partition::to_string() const {
  std::string s = "{";
  bool first_block = true;
  for (const auto &block : blocks()) {
    if (!first_block) s += ",";
    first_block = false;
    s += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(block[i] + 1);
    }
    s += "}";
  }
  return s + "}";
}

Partition tuple_partition(std::span<const Vertex> tuple) {
  return tuple_partition(tuple, std::equal_to<>{});
}

bool refines(const Partition &p, const Partition &q) {
  if (p.arity() != q.arity()) throw std::invalid_argument("partitions of different arity");
  // Blocks of p are unions of label classes; each must map into one label of q.
  std::vector<std::size_t> target(p.block_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < p.arity(); ++i) {
    auto &t = target[p.labels()[i]];
    if (t == static_cast<std::size_t>(-1)) {
      t = q.labels()[i];
    } else if (t != q.labels()[i]) {
      return false;
    }
  }
  return true;
}

std::vector<Partition> all_partitions(std::size_t r) {
  std::vector<Partition> out;
  if (r == 0) return out;
  std::vector<std::size_t> labels(r, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == r) {
      out.emplace_back(labels);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      labels[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  labels[0] = 0;
  rec(1, 1);
  return out;
}

SigmaPattern pattern_of(const RelationalStructure &y) {
  SigmaPattern p{y.signature(), std::vector<std::set<Partition>>(y.signature().size())};
  for (std::size_t s = 0; s < y.signature().size(); ++s) {
    const auto candidates = all_partitions(y.signature()[s].arity);
    std::set<Partition> realized;
    for (const Tuple &t : y.relation(s)) realized.insert(tuple_partition(t));
    for (const Partition &pi : candidates) {
      for (const Partition &q : realized) {
        if (refines(pi, q)) {
          p.by_symbol[s].insert(pi);
          break;
        }
      }
    }
  }
  return p;
}

RelationalStructure complete_structure(std::size_t n, const SigmaPattern &p) {
  if (n == 0) throw std::invalid_argument("complete structure needs n >= 1");
  if (p.by_symbol.size() != p.signature.size()) {
    throw std::invalid_argument("pattern does not match its signature");
  }
  std::vector<std::vector<Tuple>> relations(p.signature.size());
  for (std::size_t s = 0; s < p.signature.size(); ++s) {
    const std::size_t r = p.signature[s].arity;
    for (const Partition &pi : p.by_symbol[s]) {
      if (pi.arity() != r) throw std::invalid_argument("pattern partition has the wrong arity");
    }
    if (p.by_symbol[s].empty()) continue;
    Tuple t(r, 0);
    while (true) {
      const Partition own = tuple_partition(t);
      if (std::any_of(p.by_symbol[s].begin(), p.by_symbol[s].end(),
                      [&](const Partition &pi) { return refines(own, pi); })) {
        relations[s].push_back(t);
      }
      std::size_t pos = r;
      while (pos > 0 && ++t[pos - 1] == n) t[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return {p.signature, n, std::move(relations)};
}

std::size_t chromatic_number(const RelationalStructure &y) {
  if (y.size() == 0) throw std::invalid_argument("chromatic number of an empty structure");
  const SigmaPattern p = pattern_of(y);
  for (std::size_t n = 1; n <= y.size(); ++n) {
    if (find_homomorphism(y, complete_structure(n, p))) return n;
  }
  // Unreachable: the identity maps Y into the complete structure of size |Y|.
  throw std::logic_error("no complete structure of size |Y| admits Y");
}

std::vector<Vertex> central_vertices(const RelationalStructure &y) {
  const SigmaPattern p = pattern_of(y);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < y.size(); ++v) {
    bool central = true;
    for (std::size_t s = 0; s < y.signature().size() && central; ++s) {
      for (const Partition &pi : p.by_symbol[s]) {
        for (const auto &block : pi.blocks()) {
          bool realized = std::any_of(y.relation(s).begin(), y.relation(s).end(),
                                      [&](const Tuple &t) {
                                        return std::all_of(block.begin(), block.end(),
                                                           [&](std::size_t i) { return t[i] == v; });
                                      });
          if (!realized) {
            central = false;
            break;
          }
        }
        if (!central) break;
      }
    }
    if (central) out.push_back(v);
  }
  return out;
}

std::optional<Tuple> least_tuple_coarser_than(const std::vector<Tuple> &relation,
                                              const Partition &pi) {
  for (const Tuple &t : relation) {  // relations are sorted
    if (refines(pi, tuple_partition(t))) return t;
  }
  return std::nullopt;
}

}  // namespace qcsp
