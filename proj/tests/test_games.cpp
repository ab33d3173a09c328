#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "qcsp/demos.hpp"
#include "qcsp/games.hpp"
#include "qcsp/io.hpp"
#include "qcsp/powers.hpp"

using namespace qcsp;

namespace {

std::vector<Tuple> all_tuples(std::size_t base, std::size_t r) {
  std::vector<Tuple> out;
  oracle::for_each_map(r, base, [&](const VertexMap &t) {
    out.push_back(t);
    return false;
  });
  return out;
}

// Plays every referee question against the given answer rules.
bool wins(const RelationalStructure &x, const RelationalStructure &y,
          const std::function<Tuple(std::size_t, std::size_t, Vertex)> &alice_answer,
          const std::function<Vertex(std::size_t, std::size_t, Vertex)> &bob_reply) {
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    for (std::size_t i = 0; i < x.relation(s).size(); ++i) {
      const Tuple &q = x.relation(s)[i];
      for (Vertex v = 0; v < x.size(); ++v) {
        Tuple a = alice_answer(s, i, v);
        if (!y.contains(s, a)) return false;
        Vertex b = bob_reply(s, i, v);
        for (std::size_t p = 0; p < q.size(); ++p) {
          if (q[p] == v && a[p] != b) return false;
        }
      }
    }
  }
  return true;
}

// Mixed-radix odometer over whole strategy tables; no per-entry shortcuts.
bool naive_search(const RelationalStructure &x, const RelationalStructure &y, std::size_t k, Channel c) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (symbol, tuple index)
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    for (std::size_t i = 0; i < x.relation(s).size(); ++i) slots.push_back({s, i});
  }
  std::vector<std::vector<Tuple>> answers_by_symbol;
  for (std::size_t s = 0; s < x.signature().size(); ++s) {
    answers_by_symbol.push_back(all_tuples(y.size(), x.signature()[s].arity));
  }
  // Digit layout: Alice entries first, then Bob entries.
  std::vector<std::size_t> radix;
  const std::size_t per_question = c == Channel::bob ? k : 1;
  for (auto [s, i] : slots) {
    for (std::size_t m = 0; m < per_question; ++m) {
      radix.push_back(answers_by_symbol[s].size() * (c == Channel::alice ? k : 1));
    }
  }
  const std::size_t alice_digits = radix.size();
  for (Vertex v = 0; v < x.size(); ++v) {
    if (c == Channel::alice) {
      for (std::size_t m = 0; m < k; ++m) radix.push_back(y.size());
    } else {
      radix.push_back(y.size() * (c == Channel::bob ? k : 1));
    }
  }
  std::vector<std::size_t> digits(radix.size(), 0);
  std::vector<std::size_t> slot_offset(x.signature().size(), 0);
  for (std::size_t s = 1; s < x.signature().size(); ++s) {
    slot_offset[s] = slot_offset[s - 1] + x.relation(s - 1).size();
  }
  while (true) {
    auto alice_digit = [&](std::size_t s, std::size_t i, std::size_t m) {
      return digits[(slot_offset[s] + i) * per_question + m];
    };
    auto answer = [&](std::size_t s, std::size_t i, Vertex v) -> Tuple {
      if (c == Channel::alice) return answers_by_symbol[s][alice_digit(s, i, 0) / k];
      if (c == Channel::bob) {
        std::size_t sent = digits[alice_digits + v] / y.size();
        return answers_by_symbol[s][alice_digit(s, i, sent)];
      }
      return answers_by_symbol[s][alice_digit(s, i, 0)];
    };
    auto reply = [&](std::size_t s, std::size_t i, Vertex v) -> Vertex {
      if (c == Channel::alice) {
        std::size_t msg = alice_digit(s, i, 0) % k;
        return digits[alice_digits + v * k + msg];
      }
      return digits[alice_digits + v] % y.size();
    };
    if (wins(x, y, answer, reply)) return true;
    std::size_t d = 0;
    while (d < digits.size() && ++digits[d] == radix[d]) digits[d++] = 0;
    if (d == digits.size()) return false;
  }
}

}  // namespace

TEST(Referee, TruthfulStrategies) {
  auto k3 = clique(3);
  EXPECT_TRUE(verify_perfect(k3, k3, strategy_from_hom({0, 1, 2}, k3, k3)).perfect);
  auto x = directed_cycle(6);
  auto h = find_homomorphism(x, clique(2));
  ASSERT_TRUE(h);
  EXPECT_TRUE(verify_perfect(x, clique(2), strategy_from_hom(*h, x, clique(2))).perfect);
}

TEST(Referee, FirstCounterexampleInFixedOrder) {
  auto x = clique(2);
  auto y = directed_edge();
  NoChannelStrategy s{{{Tuple{0, 1}, Tuple{0, 1}}}, {0, 1}};
  auto v = verify_perfect(x, y, s);
  ASSERT_FALSE(v.perfect);
  ASSERT_TRUE(v.counterexample);
  // Question (E, (1,0), 0): Alice says (0,1), so position 1 claims 1 but Bob says 0.
  EXPECT_EQ(v.counterexample->tuple, (Tuple{1, 0}));
  EXPECT_EQ(v.counterexample->vertex, 0u);
  EXPECT_EQ(v.counterexample->reason, FailureReason::consistency);

  NoChannelStrategy implausible{{{Tuple{1, 0}, Tuple{0, 1}}}, {0, 1}};
  auto w = verify_perfect(x, y, implausible);
  ASSERT_TRUE(w.counterexample);
  EXPECT_EQ(w.counterexample->reason, FailureReason::plausibility);
  EXPECT_EQ(w.counterexample->tuple, (Tuple{0, 1}));
}

TEST(Referee, ShapeErrors) {
  NoChannelStrategy wrong{{{Tuple{0, 1}}}, {0, 1}};
  EXPECT_THROW(verify_perfect(clique(2), clique(2), wrong), SignatureMismatch);
  NoChannelStrategy out_of_range{{{Tuple{0, 1}, Tuple{1, 0}}}, {0, 7}};
  EXPECT_THROW(verify_perfect(clique(2), clique(2), out_of_range), SignatureMismatch);
}

TEST(Strategies, AliceFromHomAndBack) {
  auto x = clique(2);
  auto y = directed_edge();
  auto h = find_homomorphism(x, alice_power(y, 2));
  ASSERT_TRUE(h);
  auto s = alice_strategy_from_hom(*h, x, y, 2);
  EXPECT_TRUE(verify_perfect(x, y, s).perfect);
  auto back = hom_from_alice_strategy(s, x, y);
  EXPECT_TRUE(is_homomorphism(back, x, AlicePowerView(y, 2)));

  // Identity K4 -> K4 = Alice power of K2 with one bit.
  auto k4 = clique(4);
  VertexMap id{0, 1, 2, 3};
  ASSERT_TRUE(is_homomorphism(id, k4, alice_power(clique(2), 2)));
  EXPECT_TRUE(verify_perfect(k4, clique(2), alice_strategy_from_hom(id, k4, clique(2), 2)).perfect);

  // Diagonal embedding: constant message, truthful answers.
  auto c6 = directed_cycle(6);
  auto g = *find_homomorphism(c6, clique(2));
  auto diag = alice_diagonal(clique(2), 2);
  VertexMap composed;
  for (Vertex v : g) composed.push_back(diag[v]);
  auto t = alice_strategy_from_hom(composed, c6, clique(2), 2);
  auto truthful = strategy_from_hom(g, c6, clique(2));
  EXPECT_EQ(t.answers, truthful.answers);
  for (const auto &m : t.messages) {
    for (std::size_t msg : m) EXPECT_EQ(msg, 0u);
  }
}

TEST(Strategies, ImperfectStrategyIsRejected) {
  auto x = clique(2);
  auto y = directed_edge();
  AliceChannelStrategy bad{2, {{Tuple{0, 1}, Tuple{0, 1}}}, {{0, 0}}, {0, 0, 0, 0}};
  EXPECT_FALSE(verify_perfect(x, y, bad).perfect);
  EXPECT_THROW(hom_from_alice_strategy(bad, x, y), std::invalid_argument);
  BobChannelStrategy worse{2, {0, 0}, {0, 0}, {{Tuple{0, 1}, Tuple{0, 1}, Tuple{0, 1}, Tuple{0, 1}}}};
  EXPECT_THROW(hom_from_bob_strategy(worse, x, y), std::invalid_argument);
}

TEST(Strategies, BobAdvantageFixture) {
  auto x = bob_advantage_instance();
  auto y = bob_advantage_template();
  auto h = find_homomorphism(x, bob_power(y, 2));
  ASSERT_TRUE(h);
  auto s = bob_strategy_from_hom(*h, x, y, 2);
  EXPECT_TRUE(verify_perfect(x, y, s).perfect);
  for (Vertex b : s.bob) EXPECT_EQ(b, 1u);
  EXPECT_TRUE(is_homomorphism(hom_from_bob_strategy(s, x, y), x, BobPowerView(y, 2)));
  auto found = brute_force_search(x, y, 2, Channel::bob);
  ASSERT_TRUE(found);
  EXPECT_TRUE(is_homomorphism(hom_from_bob_strategy(std::get<BobChannelStrategy>(*found), x, y), x,
                              BobPowerView(y, 2)));
  for (std::size_t k = 1; k <= 3; ++k) {
    EXPECT_FALSE(find_homomorphism(x, alice_power(y, k))) << k;
    EXPECT_FALSE(brute_force_search(x, y, k, Channel::alice)) << k;
  }
}

TEST(Strategies, BobFromHomSelfCertifies) {
  auto k4 = clique(4);
  auto k2 = clique(2);
  auto iso = find_isomorphism(k4, bob_power(k2, 2));
  ASSERT_TRUE(iso);
  auto s = bob_strategy_from_hom(*iso, k4, k2, 2);
  EXPECT_TRUE(verify_perfect(k4, k2, s).perfect);
  // First-slot embedding of a homomorphism into Y: constant message.
  auto c4 = directed_cycle(4);
  auto g = *find_homomorphism(c4, k2);
  auto slot = bob_first_slot(k2, 3);
  VertexMap composed;
  for (Vertex v : g) composed.push_back(slot[v]);
  auto t = bob_strategy_from_hom(composed, c4, k2, 3);
  EXPECT_TRUE(verify_perfect(c4, k2, t).perfect);
  for (std::size_t m : t.messages) EXPECT_EQ(m, 0u);
  EXPECT_EQ(t.bob, g);
  EXPECT_THROW(bob_strategy_from_hom({0, 0, 0, 0}, k4, k2, 2), std::invalid_argument);
}

TEST(BruteForce, WorkedExample) {
  auto x = clique(2);
  auto y = directed_edge();
  EXPECT_FALSE(brute_force_search(x, y, 2, Channel::bob));
  auto alice = brute_force_search(x, y, 2, Channel::alice);
  ASSERT_TRUE(alice);
  EXPECT_TRUE(verify_perfect(x, y, *alice).perfect);
  EXPECT_DOUBLE_EQ(strategy_space_size(x, y, 2, Channel::alice), 64.0 * 16.0);
  auto edge = digraph(2, {{0, 1}});
  EXPECT_TRUE(brute_force_search(edge, y, 1, Channel::none));
  auto from_edge = brute_force_search(edge, y, 2, Channel::alice);
  ASSERT_TRUE(from_edge);
  EXPECT_TRUE(is_homomorphism(hom_from_alice_strategy(std::get<AliceChannelStrategy>(*from_edge), edge, y),
                              edge, AlicePowerView(y, 2)));
}

TEST(BruteForce, AgreesWithNaiveProductSpace) {
  for (const auto &y : {directed_edge(), clique(2)}) {
    for (const auto &x : small_digraphs(2, 2)) {
      EXPECT_EQ(brute_force_search(x, y, 1, Channel::none).has_value(), naive_search(x, y, 1, Channel::none));
      for (std::size_t k = 1; k <= 2; ++k) {
        for (Channel c : {Channel::alice, Channel::bob}) {
          auto found = brute_force_search(x, y, k, c);
          ASSERT_EQ(found.has_value(), naive_search(x, y, k, c)) << to_string(c) << " k=" << k;
          if (found) {
            EXPECT_TRUE(verify_perfect(x, y, *found).perfect);
          }
        }
      }
    }
  }
}

TEST(BruteForce, OracleEquivalenceWithPowers) {
  for (const auto &y : {directed_edge(), clique(2)}) {
    for (std::size_t k = 1; k <= 2; ++k) {
      auto ap = alice_power(y, k);
      auto bp = bob_power(y, k);
      for (const auto &x : small_digraphs(2, 2)) {
        EXPECT_EQ(brute_force_search(x, y, k, Channel::alice).has_value(), oracle::brute_force_hom(x, ap).has_value());
        EXPECT_EQ(brute_force_search(x, y, k, Channel::bob).has_value(), oracle::brute_force_hom(x, bp).has_value());
      }
    }
  }
}

TEST(BruteForce, MonotoneInMessageCount) {
  for (const auto &x : small_digraphs(2, 2)) {
    for (const auto &y : {directed_edge(), clique(2)}) {
      auto h = find_homomorphism(x, alice_power(y, 1));
      if (!h) continue;
      auto step = alice_power_step(y, 1);
      VertexMap lifted;
      for (Vertex v : *h) lifted.push_back(step[v]);
      EXPECT_TRUE(verify_perfect(x, y, alice_strategy_from_hom(lifted, x, y, 2)).perfect);
    }
  }
}

TEST(BruteForce, SizeCap) {
  EXPECT_THROW(brute_force_search(clique(4), clique(3), 3, Channel::bob, 1e4), SizeCapExceeded);
}

TEST(Io, StrategyRoundTrip) {
  auto x = bob_advantage_instance();
  auto y = bob_advantage_template();
  for (std::size_t k = 1; k <= 2; ++k) {
    for (Channel c : {Channel::alice, Channel::bob}) {
      auto s = brute_force_search(clique(2), directed_edge(), k, c);
      if (!s) continue;
      auto j = strategy_to_json(*s, clique(2));
      auto back = strategy_from_json(Json::parse(j.dump()), clique(2), directed_edge());
      EXPECT_EQ(strategy_to_json(back, clique(2)), j);
    }
  }
  auto s = brute_force_search(x, y, 2, Channel::bob);
  ASSERT_TRUE(s);
  auto j = strategy_to_json(*s, x);
  EXPECT_EQ(j["variant"], "bob");
  EXPECT_EQ(strategy_to_json(strategy_from_json(j, x, y), x), j);
  j["bob"].erase(0);
  EXPECT_THROW(strategy_from_json(j, x, y), InputError);
}
