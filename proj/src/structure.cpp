#include "qcsp/structure.hpp"

#include <algorithm>
#include <set>

namespace qcsp {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const Symbol &s : symbols_) {
    if (s.arity == 0) throw std::invalid_argument("symbol '" + s.name + "' has arity 0");
    if (s.name.empty()) throw std::invalid_argument("empty symbol name");
    if (!seen.insert(s.name).second) {
      throw std::invalid_argument("duplicate symbol name '" + s.name + "'");
    }
  }
}

Signature Signature::digraph() { return Signature({{"E", 2}}); }

std::optional<std::size_t> Signature::find(const std::string &name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

RelationalStructure::RelationalStructure(Signature signature, std::size_t domain_size,
                                         std::vector<std::vector<Tuple>> relations)
    : signature_(std::move(signature)), size_(domain_size), relations_(std::move(relations)) {
  if (relations_.size() != signature_.size()) {
    throw std::invalid_argument("expected " + std::to_string(signature_.size()) +
                                " relations, got " + std::to_string(relations_.size()));
  }
  for (std::size_t s = 0; s < relations_.size(); ++s) {
    auto &rel = relations_[s];
    for (const Tuple &t : rel) {
      if (t.size() != signature_[s].arity) {
        throw std::invalid_argument("tuple of length " + std::to_string(t.size()) +
                                    " in relation '" + signature_[s].name + "' of arity " +
                                    std::to_string(signature_[s].arity));
      }
      for (Vertex v : t) {
        if (v >= size_) {
          throw std::invalid_argument("vertex " + std::to_string(v) + " in relation '" +
                                      signature_[s].name + "' outside domain of size " +
                                      std::to_string(size_));
        }
      }
    }
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  }
}

bool RelationalStructure::contains(std::size_t symbol, std::span<const Vertex> tuple) const {
  const auto &rel = relations_.at(symbol);
  auto it = std::lower_bound(rel.begin(), rel.end(), tuple,
                             [](const Tuple &a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                   b.end());
                             });
  return it != rel.end() && std::equal(it->begin(), it->end(), tuple.begin(), tuple.end());
}

std::size_t RelationalStructure::tuple_count() const {
  std::size_t n = 0;
  for (const auto &rel : relations_) n += rel.size();
  return n;
}

RelationalStructure induced_substructure(const RelationalStructure &y,
                                         std::span<const Vertex> vertices) {
  std::vector<std::size_t> index(y.size(), y.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= y.size()) throw std::invalid_argument("induced vertex out of range");
    index[vertices[i]] = i;
  }
  std::vector<std::vector<Tuple>> relations(y.signature().size());
  for (std::size_t s = 0; s < y.signature().size(); ++s) {
    for (const Tuple &t : y.relation(s)) {
      Tuple image;
      image.reserve(t.size());
      bool inside = true;
      for (Vertex v : t) {
        if (index[v] == y.size()) {
          inside = false;
          break;
        }
        image.push_back(index[v]);
      }
      if (inside) relations[s].push_back(std::move(image));
    }
  }
  return {y.signature(), vertices.size(), std::move(relations)};
}

Tuple map_tuple(const VertexMap &f, std::span<const Vertex> tuple) {
  Tuple out;
  out.reserve(tuple.size());
  for (Vertex v : tuple) out.push_back(f.at(v));
  return out;
}

void check_same_signature(const Signature &a, const Signature &b) {
  if (!(a == b)) throw SignatureMismatch("structures have different signatures");
}

}  // namespace qcsp
