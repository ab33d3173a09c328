#include "qcsp/games.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qcsp {
namespace {

void check_table(bool ok, const char *what) {
  if (!ok) throw SignatureMismatch(std::string("strategy table does not fit the game: ") + what);
}

void check_answers(const std::vector<std::vector<Tuple>> &answers, const RelationalStructure &x,
                   const RelationalStructure &y, std::size_t per_tuple) {
  check_table(answers.size() == x.signature().size(), "answer tables per symbol");
  for (std::size_t s = 0; s < answers.size(); ++s) {
    check_table(answers[s].size() == x.relation(s).size() * per_tuple, "answers per tuple");
    for (const Tuple &a : answers[s]) {
      check_table(a.size() == x.signature()[s].arity, "answer arity");
      for (Vertex v : a) check_table(v < y.size(), "answer vertex");
    }
  }
}

void check_shape(const RelationalStructure &x, const RelationalStructure &y, const Strategy &s) {
  check_same_signature(x.signature(), y.signature());
  std::visit(
      [&](const auto &st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, NoChannelStrategy>) {
          check_answers(st.answers, x, y, 1);
          check_table(st.bob.size() == x.size(), "Bob table size");
          for (Vertex v : st.bob) check_table(v < y.size(), "Bob reply");
        } else if constexpr (std::is_same_v<T, AliceChannelStrategy>) {
          check_table(st.k >= 1, "message count");
          check_answers(st.answers, x, y, 1);
          check_table(st.messages.size() == x.signature().size(), "message tables per symbol");
          for (std::size_t sym = 0; sym < st.messages.size(); ++sym) {
            check_table(st.messages[sym].size() == x.relation(sym).size(), "messages per tuple");
            for (std::size_t m : st.messages[sym]) check_table(m < st.k, "message value");
          }
          check_table(st.bob.size() == x.size() * st.k, "Bob table size");
          for (Vertex v : st.bob) check_table(v < y.size(), "Bob reply");
        } else {
          check_table(st.k >= 1, "message count");
          check_answers(st.answers, x, y, st.k);
          check_table(st.bob.size() == x.size(), "Bob table size");
          check_table(st.messages.size() == x.size(), "Bob message table size");
          for (Vertex v : st.bob) check_table(v < y.size(), "Bob reply");
          for (std::size_t m : st.messages) check_table(m < st.k, "message value");
        }
      },
      s);
}

// Calls visit(t) for every t in Y^r in lexicographic order until it returns true.
bool for_each_tuple(std::size_t base, std::size_t r, const std::function<bool(const Tuple &)> &visit) {
  if (base == 0) return false;
  Tuple t(r, 0);
  while (true) {
    if (visit(t)) return true;
    std::size_t pos = r;
    while (pos > 0 && ++t[pos - 1] == base) t[--pos] = 0;
    if (pos == 0) return false;
  }
}

// Advances an odometer of `digits` over [0, base); false after the last value.
bool next_table(std::vector<std::size_t> &digits, std::size_t base) {
  std::size_t pos = digits.size();
  while (pos > 0 && ++digits[pos - 1] == base) digits[--pos] = 0;
  return pos != 0;
}

std::optional<Strategy> search_none(const RelationalStructure &x, const RelationalStructure &y) {
  NoChannelStrategy st;
  st.bob.assign(x.size(), 0);
  st.answers.resize(x.signature().size());
  do {
    bool ok = true;
    for (std::size_t s = 0; s < x.signature().size() && ok; ++s) {
      st.answers[s].clear();
      for (const Tuple &q : x.relation(s)) {
        Tuple found;
        ok = for_each_tuple(y.size(), q.size(), [&](const Tuple &a) {
          if (!y.contains(s, a)) return false;
          for (std::size_t i = 0; i < q.size(); ++i) {
            if (a[i] != st.bob[q[i]]) return false;
          }
          found = a;
          return true;
        });
        if (!ok) break;
        st.answers[s].push_back(found);
      }
    }
    if (ok) return st;
  } while (next_table(st.bob, y.size()));
  return std::nullopt;
}

std::optional<Strategy> search_alice(const RelationalStructure &x, const RelationalStructure &y,
                                     std::size_t k) {
  AliceChannelStrategy st;
  st.k = k;
  st.bob.assign(x.size() * k, 0);
  st.answers.resize(x.signature().size());
  st.messages.resize(x.signature().size());
  do {
    bool ok = true;
    for (std::size_t s = 0; s < x.signature().size() && ok; ++s) {
      st.answers[s].clear();
      st.messages[s].clear();
      for (const Tuple &q : x.relation(s)) {
        ok = false;
        for (std::size_t j = 0; j < k && !ok; ++j) {
          ok = for_each_tuple(y.size(), q.size(), [&](const Tuple &a) {
            if (!y.contains(s, a)) return false;
            for (std::size_t i = 0; i < q.size(); ++i) {
              if (a[i] != st.reply(q[i], j)) return false;
            }
            st.answers[s].push_back(a);
            st.messages[s].push_back(j);
            return true;
          });
        }
        if (!ok) break;
      }
    }
    if (ok) return st;
  } while (next_table(st.bob, y.size()));
  return std::nullopt;
}

std::optional<Strategy> search_bob(const RelationalStructure &x, const RelationalStructure &y,
                                   std::size_t k) {
  BobChannelStrategy st;
  st.k = k;
  st.bob.assign(x.size(), 0);
  st.messages.assign(x.size(), 0);
  st.answers.resize(x.signature().size());
  // Bob's entry for vertex v is the digit m * |Y| + b.
  std::vector<std::size_t> digits(x.size(), 0);
  do {
    for (Vertex v = 0; v < x.size(); ++v) {
      st.messages[v] = digits[v] / y.size();
      st.bob[v] = digits[v] % y.size();
    }
    bool ok = true;
    for (std::size_t s = 0; s < x.signature().size() && ok; ++s) {
      st.answers[s].clear();
      const std::size_t r = x.signature()[s].arity;
      for (const Tuple &q : x.relation(s)) {
        for (std::size_t m = 0; m < k && ok; ++m) {
          const bool reachable = std::find(st.messages.begin(), st.messages.end(), m) !=
                                 st.messages.end();
          if (!reachable) {
            // Never read by the referee; any entry will do.
            const auto &rel = y.relation(s);
            st.answers[s].push_back(rel.empty() ? Tuple(r, 0) : rel.front());
            continue;
          }
          ok = for_each_tuple(y.size(), r, [&](const Tuple &a) {
            if (!y.contains(s, a)) return false;
            for (std::size_t i = 0; i < r; ++i) {
              if (st.messages[q[i]] == m && a[i] != st.bob[q[i]]) return false;
            }
            st.answers[s].push_back(a);
            return true;
          });
        }
        if (!ok) break;
      }
    }
    if (ok) return st;
  } while (next_table(digits, y.size() * k));
  return std::nullopt;
}

}  // namespace

std::string to_string(Channel c) {
  switch (c) {
    case Channel::none: return "none";
    case Channel::alice: return "alice";
    case Channel::bob: return "bob";
  }
  return "?";
}

Channel channel_from_string(const std::string &name) {
  if (name == "none") return Channel::none;
  if (name == "alice") return Channel::alice;
  if (name == "bob") return Channel::bob;
  throw std::invalid_argument("unknown channel '" + name + "'");
}

std::string to_string(FailureReason r) {
  return r == FailureReason::plausibility ? "plausibility" : "consistency";
}

Channel channel_of(const Strategy &s) { return static_cast<Channel>(s.index()); }

std::size_t message_count(const Strategy &s) {
  return std::visit(
      [](const auto &st) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(st)>, NoChannelStrategy>) {
          return 1;
        } else {
          return st.k;
        }
      },
      s);
}

Verdict verify_perfect(const RelationalStructure &x, const RelationalStructure &y,
                       const Strategy &s) {
  check_shape(x, y, s);
  for (std::size_t sym = 0; sym < x.signature().size(); ++sym) {
    const auto &rel = x.relation(sym);
    for (std::size_t idx = 0; idx < rel.size(); ++idx) {
      const Tuple &q = rel[idx];
      for (Vertex v = 0; v < x.size(); ++v) {
        const Tuple *answer = nullptr;
        Vertex reply = 0;
        if (const auto *st = std::get_if<NoChannelStrategy>(&s)) {
          answer = &st->answers[sym][idx];
          reply = st->bob[v];
        } else if (const auto *st = std::get_if<AliceChannelStrategy>(&s)) {
          answer = &st->answers[sym][idx];
          reply = st->reply(v, st->messages[sym][idx]);
        } else {
          const auto &bs = std::get<BobChannelStrategy>(s);
          answer = &bs.answer(sym, idx, bs.messages[v]);
          reply = bs.bob[v];
        }
        Counterexample cx{sym, q, v, FailureReason::plausibility, *answer, reply};
        if (!y.contains(sym, *answer)) return {false, cx};
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (q[i] == v && (*answer)[i] != reply) {
            cx.reason = FailureReason::consistency;
            return {false, cx};
          }
        }
      }
    }
  }
  return {};
}

NoChannelStrategy strategy_from_hom(const VertexMap &h, const RelationalStructure &x,
                                    const RelationalStructure &y) {
  if (!is_homomorphism(h, x, y)) throw std::invalid_argument("map is not a homomorphism");
  NoChannelStrategy st;
  st.bob = h;
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    st.answers.emplace_back();
    for (const Tuple &q : x.relation(s)) st.answers[s].push_back(map_tuple(h, q));
  }
  return st;
}

AliceChannelStrategy alice_strategy_from_hom(const VertexMap &h, const RelationalStructure &x,
                                             const RelationalStructure &y, std::size_t k) {
  const AlicePowerView view(y, k);
  if (h.size() != x.size()) throw SignatureMismatch("vertex map is not total on the source");
  for (Vertex v : h) {
    if (v >= view.size()) throw SignatureMismatch("vertex map leaves the Alice power");
  }
  check_same_signature(x.signature(), y.signature());
  AliceChannelStrategy st;
  st.k = k;
  st.answers.resize(x.signature().size());
  st.messages.resize(x.signature().size());
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    for (const Tuple &q : x.relation(s)) {
      Tuple projection(q.size());
      bool found = false;
      for (std::size_t j = 0; j < k && !found; ++j) {
        for (std::size_t i = 0; i < q.size(); ++i) projection[i] = view.coordinate(h[q[i]], j);
        if (y.contains(s, projection)) {
          st.answers[s].push_back(projection);
          st.messages[s].push_back(j);
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("map is not a homomorphism into the Alice power");
    }
  }
  st.bob.resize(x.size() * k);
  for (Vertex v = 0; v < x.size(); ++v) {
    for (std::size_t j = 0; j < k; ++j) st.bob[v * k + j] = view.coordinate(h[v], j);
  }
  return st;
}

VertexMap hom_from_alice_strategy(const AliceChannelStrategy &s, const RelationalStructure &x,
                                  const RelationalStructure &y) {
  if (!verify_perfect(x, y, s).perfect) throw std::invalid_argument("strategy is not perfect");
  const AlicePowerView view(y, s.k);
  VertexMap h(x.size());
  for (Vertex v = 0; v < x.size(); ++v) {
    h[v] = view.encode(std::span<const Vertex>(s.bob).subspan(v * s.k, s.k));
  }
  return h;
}

BobChannelStrategy bob_strategy_from_hom(const VertexMap &h, const RelationalStructure &x,
                                         const RelationalStructure &y, std::size_t k) {
  const BobPowerView view(y, k);
  if (!is_homomorphism(h, x, view)) {
    throw std::invalid_argument("map is not a homomorphism into the Bob power");
  }
  BobChannelStrategy st;
  st.k = k;
  for (Vertex v = 0; v < x.size(); ++v) {
    st.bob.push_back(view.value(h[v]));
    st.messages.push_back(view.slot(h[v]));
  }
  st.answers.resize(x.signature().size());
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    const auto &rel = y.relation(s);
    for (const Tuple &q : x.relation(s)) {
      for (std::size_t m = 0; m < k; ++m) {
        auto agrees = [&](const Tuple &t) {
          for (std::size_t i = 0; i < q.size(); ++i) {
            if (view.slot(h[q[i]]) == m && view.value(h[q[i]]) != t[i]) return false;
          }
          return true;
        };
        auto it = std::find_if(rel.begin(), rel.end(), agrees);
        // The homomorphism check guarantees a witness for every slot in use.
        st.answers[s].push_back(*it);
      }
    }
  }
  return st;
}

VertexMap hom_from_bob_strategy(const BobChannelStrategy &s, const RelationalStructure &x,
                                const RelationalStructure &y) {
  if (!verify_perfect(x, y, s).perfect) throw std::invalid_argument("strategy is not perfect");
  const BobPowerView view(y, s.k);
  VertexMap h(x.size());
  for (Vertex v = 0; v < x.size(); ++v) h[v] = view.encode(s.messages[v], s.bob[v]);
  return h;
}

double strategy_space_size(const RelationalStructure &x, const RelationalStructure &y,
                           std::size_t k, Channel channel) {
  const double ny = static_cast<double>(y.size());
  const double nx = static_cast<double>(x.size());
  const double kk = static_cast<double>(channel == Channel::none ? 1 : k);
  double size = 0;
  switch (channel) {
    case Channel::none: size = std::pow(ny, nx); break;
    case Channel::alice: size = std::pow(ny, nx * kk); break;
    case Channel::bob: size = std::pow(ny * kk, nx); break;
  }
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    const double r = static_cast<double>(x.signature()[s].arity);
    const double tuples = static_cast<double>(x.relation(s).size());
    double per_tuple = std::pow(ny, r);
    if (channel == Channel::alice) per_tuple *= kk;
    if (channel == Channel::bob) per_tuple = std::pow(per_tuple, kk);
    size *= std::pow(per_tuple, tuples);
  }
  return size;
}

std::optional<Strategy> brute_force_search(const RelationalStructure &x,
                                           const RelationalStructure &y, std::size_t k,
                                           Channel channel, double cap) {
  check_same_signature(x.signature(), y.signature());
  if (k == 0) throw std::invalid_argument("message count must be positive");
  const double size = strategy_space_size(x, y, k, channel);
  if (size > cap) {
    throw SizeCapExceeded("strategy space has " + std::to_string(size) +
                          " tables, above the cap of " + std::to_string(cap));
  }
  if (y.size() == 0 && x.size() > 0) return std::nullopt;
  switch (channel) {
    case Channel::none: return search_none(x, y);
    case Channel::alice: return search_alice(x, y, k);
    case Channel::bob: return search_bob(x, y, k);
  }
  return std::nullopt;
}

}  // namespace qcsp
