#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "qcsp/structure.hpp"

namespace qcsp {
namespace {

class Bitset {
 public:
  Bitset() = default;
  Bitset(std::size_t n, bool full) : n_(n), words_((n + 63) / 64, full ? ~std::uint64_t{0} : 0) {
    if (full && n % 64 != 0) words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  }

  [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Intersects in place; returns true if anything was removed.
  bool intersect(const Bitset &other) {
    bool changed = false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i] & other.words_[i];
      changed |= w != words_[i];
      words_[i] = w;
    }
    return changed;
  }

  /// Index of the lowest set bit at or after `from`, or size() if none.
  [[nodiscard]] std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from / 64;
    auto w = words_[wi] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (w != 0) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return n_;
      w = words_[wi];
    }
  }

  [[nodiscard]] std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

using Domains = std::vector<Bitset>;

struct Constraint {
  std::size_t symbol;
  Tuple vars;
};

class Solver {
 public:
  Solver(const RelationalStructure &x, const RelationalStructure &y, const SearchOptions &options)
      : x_(x), y_(y), injective_(options.injective), allowed_(options.allowed) {
    constraints_of_.resize(x.size());
    std::vector<std::size_t> degree(x.size(), 0);
    for (std::size_t s = 0; s < x.signature().size(); ++s) {
      for (const Tuple &t : x.relation(s)) {
        std::size_t c = constraints_.size();
        constraints_.push_back({s, t});
        Tuple distinct = t;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (Vertex v : distinct) constraints_of_[v].push_back(c);
        for (Vertex v : t) ++degree[v];
      }
    }
    order_.resize(x.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
  }

  std::optional<VertexMap> solve() {
    if (x_.size() == 0) return VertexMap{};
    if (y_.size() == 0) return std::nullopt;
    if (injective_ && x_.size() > y_.size()) return std::nullopt;

    Domains domains(x_.size(), Bitset(y_.size(), true));
    if (!allowed_.empty()) {
      if (allowed_.size() != x_.size()) {
        throw std::invalid_argument("allowed lists must cover every source vertex");
      }
      for (std::size_t v = 0; v < x_.size(); ++v) {
        if (allowed_[v].empty()) continue;
        Bitset mask(y_.size(), false);
        for (Vertex w : allowed_[v]) {
          if (w >= y_.size()) throw std::invalid_argument("allowed vertex out of range");
          mask.set(w);
        }
        domains[v].intersect(mask);
      }
    }
    std::vector<std::size_t> all(constraints_.size());
    std::iota(all.begin(), all.end(), 0);
    if (!propagate(domains, all)) return std::nullopt;
    return search(std::move(domains));
  }

 private:
  // Generalized arc consistency for one constraint. Appends source vertices
  // whose domain shrank to `changed`; returns false on a wipe-out.
  bool revise(const Constraint &c, Domains &domains, std::vector<Vertex> &changed) const {
    const std::size_t r = c.vars.size();
    std::vector<Bitset> support(r, Bitset(y_.size(), false));
    bool any = false;
    for (const Tuple &t : y_.relation(c.symbol)) {
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        ok = domains[c.vars[i]].test(t[i]);
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (c.vars[i] == c.vars[j] && t[i] != t[j]) ok = false;
        }
      }
      if (!ok) continue;
      any = true;
      for (std::size_t i = 0; i < r; ++i) support[i].set(t[i]);
    }
    if (!any) return false;
    for (std::size_t i = 0; i < r; ++i) {
      if (domains[c.vars[i]].intersect(support[i])) changed.push_back(c.vars[i]);
    }
    return true;
  }

  bool propagate(Domains &domains, std::vector<std::size_t> queue) const {
    std::vector<bool> queued(constraints_.size(), false);
    for (auto c : queue) queued[c] = true;
    std::vector<bool> fixed_done(x_.size(), false);
    while (true) {
      while (!queue.empty()) {
        std::size_t c = queue.back();
        queue.pop_back();
        queued[c] = false;
        std::vector<Vertex> changed;
        if (!revise(constraints_[c], domains, changed)) return false;
        for (Vertex v : changed) {
          if (domains[v].count() == 0) return false;
          for (std::size_t d : constraints_of_[v]) {
            if (!queued[d]) {
              queued[d] = true;
              queue.push_back(d);
            }
          }
        }
      }
      if (!injective_) return true;
      // All-different forward checking on newly fixed variables.
      bool progress = false;
      for (Vertex v = 0; v < x_.size(); ++v) {
        if (fixed_done[v] || domains[v].count() != 1) continue;
        fixed_done[v] = true;
        std::size_t value = domains[v].next(0);
        for (Vertex w = 0; w < x_.size(); ++w) {
          if (w == v || !domains[w].test(value)) continue;
          domains[w].reset(value);
          if (domains[w].count() == 0) return false;
          progress = true;
          for (std::size_t d : constraints_of_[w]) {
            if (!queued[d]) {
              queued[d] = true;
              queue.push_back(d);
            }
          }
        }
      }
      if (!progress && queue.empty()) return true;
    }
  }

  std::optional<VertexMap> search(Domains domains) const {
    auto next = std::find_if(order_.begin(), order_.end(),
                             [&](Vertex v) { return domains[v].count() > 1; });
    if (next == order_.end()) {
      VertexMap f(x_.size());
      for (Vertex v = 0; v < x_.size(); ++v) f[v] = domains[v].next(0);
      if (!is_homomorphism(f, x_, y_)) return std::nullopt;
      if (injective_) {
        auto sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
      }
      return f;
    }
    const Vertex var = *next;
    for (std::size_t value = domains[var].next(0); value < y_.size();
         value = domains[var].next(value + 1)) {
      Domains child = domains;
      Bitset single(y_.size(), false);
      single.set(value);
      child[var].intersect(single);
      if (!propagate(child, constraints_of_[var])) continue;
      if (auto found = search(std::move(child))) return found;
    }
    return std::nullopt;
  }

  const RelationalStructure &x_;
  const RelationalStructure &y_;
  bool injective_;
  const std::vector<std::vector<Vertex>> &allowed_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> constraints_of_;
  std::vector<Vertex> order_;
};

}  // namespace

std::optional<VertexMap> find_homomorphism(const RelationalStructure &x,
                                           const RelationalStructure &y,
                                           const SearchOptions &options) {
  check_same_signature(x.signature(), y.signature());
  return Solver(x, y, options).solve();
}

std::vector<Vertex> core_vertices(const RelationalStructure &y) {
  std::vector<Vertex> current(y.size());
  std::iota(current.begin(), current.end(), 0);
  // Drop a vertex whenever the current substructure retracts onto the rest;
  // a structure with no such vertex has only surjective endomorphisms.
  bool shrunk = true;
  while (shrunk && current.size() > 1) {
    shrunk = false;
    const RelationalStructure sub = induced_substructure(y, current);
    for (std::size_t i = 0; i < current.size(); ++i) {
      std::vector<Vertex> rest;
      for (std::size_t j = 0; j < current.size(); ++j) {
        if (j != i) rest.push_back(j);
      }
      if (find_homomorphism(sub, induced_substructure(sub, rest))) {
        current.erase(current.begin() + static_cast<std::ptrdiff_t>(i));
        shrunk = true;
        break;
      }
    }
  }
  return current;
}

RelationalStructure core_of(const RelationalStructure &y) {
  auto vertices = core_vertices(y);
  return induced_substructure(y, vertices);
}

std::optional<VertexMap> find_isomorphism(const RelationalStructure &a,
                                          const RelationalStructure &b) {
  check_same_signature(a.signature(), b.signature());
  if (a.size() != b.size()) return std::nullopt;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    if (a.relation(s).size() != b.relation(s).size()) return std::nullopt;
  }
  // An injective homomorphism between equal-size structures with equal tuple
  // counts maps each relation bijectively, so its inverse preserves relations.
  SearchOptions options;
  options.injective = true;
  return find_homomorphism(a, b, options);
}

bool are_isomorphic(const RelationalStructure &a, const RelationalStructure &b) {
  return find_isomorphism(a, b).has_value();
}

bool homomorphically_equivalent(const RelationalStructure &a, const RelationalStructure &b) {
  return find_homomorphism(a, b).has_value() && find_homomorphism(b, a).has_value();
}

}  // namespace qcsp
