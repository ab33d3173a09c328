#include "qcsp/powers.hpp"

#include <algorithm>
#include <set>

namespace qcsp {
namespace {

constexpr std::size_t kMaxEncoded = std::size_t{1} << 62;

// Saturating integer power.
std::size_t checked_pow(std::size_t base, std::size_t exponent, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

}  // namespace

AlicePowerView::AlicePowerView(const RelationalStructure &base, std::size_t k)
    : base_(&base), k_(k) {
  if (k == 0) throw std::invalid_argument("power exponent must be positive");
  size_ = checked_pow(base.size(), k, kMaxEncoded);
  if (size_ > kMaxEncoded) {
    throw SizeCapExceeded("Alice power |Y|^k = " + std::to_string(base.size()) + "^" +
                          std::to_string(k) + " does not fit the vertex encoding");
  }
}

Vertex AlicePowerView::encode(std::span<const Vertex> coordinates) const {
  if (coordinates.size() != k_) throw std::invalid_argument("expected a k-tuple");
  Vertex id = 0;
  for (Vertex c : coordinates) {
    if (c >= base_->size()) throw std::invalid_argument("coordinate outside base domain");
    id = id * base_->size() + c;
  }
  return id;
}

Tuple AlicePowerView::decode(Vertex v) const {
  Tuple out(k_);
  for (std::size_t j = k_; j-- > 0;) {
    out[j] = v % base_->size();
    v /= base_->size();
  }
  return out;
}

Vertex AlicePowerView::coordinate(Vertex v, std::size_t j) const {
  for (std::size_t i = j + 1; i < k_; ++i) v /= base_->size();
  return v % base_->size();
}

bool AlicePowerView::contains(std::size_t symbol, std::span<const Vertex> tuple) const {
  Tuple projection(tuple.size());
  for (std::size_t j = 0; j < k_; ++j) {
    for (std::size_t i = 0; i < tuple.size(); ++i) projection[i] = coordinate(tuple[i], j);
    if (base_->contains(symbol, projection)) return true;
  }
  return false;
}

BobPowerView::BobPowerView(const RelationalStructure &base, std::size_t k) : base_(&base), k_(k) {
  if (k == 0) throw std::invalid_argument("power exponent must be positive");
}

bool BobPowerView::contains(std::size_t symbol, std::span<const Vertex> tuple) const {
  const auto &rel = base_->relation(symbol);
  if (rel.empty()) return false;
  std::vector<bool> used(k_, false);
  for (Vertex v : tuple) used[slot(v)] = true;
  for (std::size_t s = 0; s < k_; ++s) {
    if (!used[s]) continue;  // any tuple of the nonempty relation agrees vacuously
    bool witnessed = std::any_of(rel.begin(), rel.end(), [&](const Tuple &t) {
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (slot(tuple[j]) == s && value(tuple[j]) != t[j]) return false;
      }
      return true;
    });
    if (!witnessed) return false;
  }
  return true;
}

RelationalStructure alice_power(const RelationalStructure &y, std::size_t k,
                                std::size_t vertex_cap) {
  if (k == 0) throw std::invalid_argument("power exponent must be positive");
  if (checked_pow(y.size(), k, vertex_cap) > vertex_cap) {
    throw SizeCapExceeded("Alice power would have more than " + std::to_string(vertex_cap) +
                          " vertices");
  }
  const AlicePowerView view(y, k);
  const std::size_t n = y.size();
  std::vector<std::vector<Tuple>> relations(y.signature().size());
  for (std::size_t s = 0; s < y.signature().size(); ++s) {
    const std::size_t r = y.signature()[s].arity;
    const std::size_t free_digits = r * (k - 1);
    const std::size_t per_tuple = checked_pow(n, free_digits, kPowerTupleCap);
    if (per_tuple > kPowerTupleCap ||
        per_tuple * k * std::max<std::size_t>(y.relation(s).size(), 1) > kPowerTupleCap) {
      throw SizeCapExceeded("Alice power relation '" + y.signature()[s].name + "' is too large");
    }
    std::set<Tuple> generated;
    std::vector<Tuple> coords(r, Tuple(k));
    for (const Tuple &t : y.relation(s)) {
      for (std::size_t j = 0; j < k; ++j) {
        // Odometer over the coordinates other than j of every tuple entry.
        std::vector<Vertex> digits(free_digits, 0);
        while (true) {
          std::size_t d = 0;
          for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t c = 0; c < k; ++c) coords[i][c] = (c == j) ? t[i] : digits[d++];
          }
          Tuple image(r);
          for (std::size_t i = 0; i < r; ++i) image[i] = view.encode(coords[i]);
          generated.insert(std::move(image));
          std::size_t pos = 0;
          while (pos < free_digits && ++digits[pos] == n) digits[pos++] = 0;
          if (pos == free_digits) break;
        }
      }
    }
    relations[s].assign(generated.begin(), generated.end());
  }
  return {y.signature(), view.size(), std::move(relations)};
}

RelationalStructure bob_power(const RelationalStructure &y, std::size_t k) {
  const BobPowerView view(y, k);
  const std::size_t n = view.size();
  std::vector<std::vector<Tuple>> relations(y.signature().size());
  for (std::size_t s = 0; s < y.signature().size(); ++s) {
    const std::size_t r = y.signature()[s].arity;
    if (checked_pow(n, r, kPowerTupleCap) > kPowerTupleCap) {
      throw SizeCapExceeded("Bob power relation '" + y.signature()[s].name + "' is too large");
    }
    if (n == 0) continue;
    Tuple t(r, 0);
    while (true) {
      if (view.contains(s, t)) relations[s].push_back(t);
      std::size_t pos = r;
      while (pos > 0 && ++t[pos - 1] == n) t[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return {y.signature(), n, std::move(relations)};
}

bool is_cartesian_product(const std::vector<Tuple> &relation, std::size_t arity) {
  if (relation.empty()) return true;
  std::size_t product = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    std::set<Vertex> projection;
    for (const Tuple &t : relation) projection.insert(t[i]);
    product *= projection.size();
    if (product > relation.size()) return false;
  }
  return product == relation.size();
}

bool alice_one_bit_helps(const RelationalStructure &y) { return core_vertices(y).size() > 1; }

bool bob_one_bit_helps(const RelationalStructure &y) {
  const RelationalStructure core = core_of(y);
  for (std::size_t s = 0; s < core.signature().size(); ++s) {
    if (!is_cartesian_product(core.relation(s), core.signature()[s].arity)) return true;
  }
  return false;
}

bool alice_one_bit_helps_by_search(const RelationalStructure &y) {
  return !find_homomorphism(alice_power(y, 2), y).has_value();
}

bool bob_one_bit_helps_by_search(const RelationalStructure &y) {
  return !find_homomorphism(bob_power(y, 2), y).has_value();
}

VertexMap alice_diagonal(const RelationalStructure &y, std::size_t k) {
  const AlicePowerView view(y, k);
  VertexMap f(y.size());
  for (Vertex v = 0; v < y.size(); ++v) f[v] = view.encode(Tuple(k, v));
  return f;
}

VertexMap bob_first_slot(const RelationalStructure &y, std::size_t k) {
  const BobPowerView view(y, k);
  VertexMap f(y.size());
  for (Vertex v = 0; v < y.size(); ++v) f[v] = view.encode(0, v);
  return f;
}

VertexMap lift_to_alice_powers(const VertexMap &h, const RelationalStructure &x,
                               const RelationalStructure &y, std::size_t k) {
  const AlicePowerView from(x, k);
  const AlicePowerView to(y, k);
  VertexMap f(from.size());
  for (Vertex v = 0; v < from.size(); ++v) f[v] = to.encode(map_tuple(h, from.decode(v)));
  return f;
}

VertexMap lift_to_bob_powers(const VertexMap &h, const RelationalStructure &x,
                             const RelationalStructure &y, std::size_t k) {
  const BobPowerView from(x, k);
  const BobPowerView to(y, k);
  VertexMap f(from.size());
  for (Vertex v = 0; v < from.size(); ++v) f[v] = to.encode(from.slot(v), h.at(from.value(v)));
  return f;
}

VertexMap alice_power_step(const RelationalStructure &y, std::size_t k) {
  const AlicePowerView from(y, k);
  const AlicePowerView to(y, k + 1);
  VertexMap f(from.size());
  for (Vertex v = 0; v < from.size(); ++v) {
    Tuple c = from.decode(v);
    c.push_back(c.back());
    f[v] = to.encode(c);
  }
  return f;
}

VertexMap bob_power_step(const RelationalStructure &y, std::size_t k) {
  const BobPowerView from(y, k);
  VertexMap f(from.size());
  for (Vertex v = 0; v < from.size(); ++v) f[v] = v;
  return f;
}

}  // namespace qcsp
