#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcsp/demos.hpp"
#include "qcsp/powers.hpp"

using namespace qcsp;

namespace {

// Alice power built straight from the definition: a tuple of k-tuples is
// related iff some coordinate projection lies in the base relation.
bool alice_related(const RelationalStructure &y, std::size_t s, const std::vector<Tuple> &points) {
  const std::size_t k = points.front().size();
  for (std::size_t j = 0; j < k; ++j) {
    Tuple proj;
    for (const auto &p : points) proj.push_back(p[j]);
    if (y.contains(s, proj)) return true;
  }
  return false;
}

}  // namespace

TEST(AlicePower, WorkedIdentities) {
  for (std::size_t n = 2; n <= 3; ++n) {
    EXPECT_TRUE(are_isomorphic(alice_power(clique(n), 2), clique(n * n)));
  }
  EXPECT_TRUE(are_isomorphic(alice_power(clique(2), 3), clique(8)));
  EXPECT_TRUE(are_isomorphic(alice_power(nae(2), 2), nae(4)));
  EXPECT_TRUE(are_isomorphic(alice_power(nae(2), 3), nae(8)));
  for (const auto &[name, y] : demo_catalog()) {
    EXPECT_TRUE(are_isomorphic(alice_power(y, 1), y)) << name;
  }
}

TEST(AlicePower, MatchesDefinitionAndView) {
  for (const auto &[name, y] : demo_catalog()) {
    const std::size_t k = 2;
    auto p = alice_power(y, k);
    AlicePowerView view(y, k);
    ASSERT_EQ(p.size(), view.size());
    for (std::size_t s = 0; s < y.signature().size(); ++s) {
      const std::size_t arity = y.signature()[s].arity;
      std::size_t total = 1;
      for (std::size_t i = 0; i < arity; ++i) total *= p.size();
      for (std::size_t idx = 0; idx < total; ++idx) {
        Tuple t(arity);
        std::size_t rest = idx;
        for (std::size_t i = arity; i-- > 0;) {
          t[i] = rest % p.size();
          rest /= p.size();
        }
        std::vector<Tuple> points;
        for (Vertex v : t) points.push_back(view.decode(v));
        bool expected = alice_related(y, s, points);
        ASSERT_EQ(p.contains(s, t), expected) << name;
        ASSERT_EQ(view.contains(s, t), expected) << name;
      }
    }
  }
}

TEST(AlicePower, ViewEncoding) {
  const auto k3 = clique(3);
  AlicePowerView view(k3, 3);
  EXPECT_EQ(view.size(), 27u);
  EXPECT_EQ(view.encode(Tuple{1, 0, 2}), 11u);
  EXPECT_EQ(view.decode(11), (Tuple{1, 0, 2}));
  EXPECT_EQ(view.coordinate(11, 2), 2u);
}

TEST(AlicePower, SizeCap) {
  EXPECT_THROW(alice_power(clique(2), 20), SizeCapExceeded);
  const auto k3 = clique(3);
  EXPECT_THROW(AlicePowerView(k3, 40), SizeCapExceeded);
}

TEST(BobPower, WorkedIdentities) {
  EXPECT_TRUE(are_isomorphic(bob_power(clique(3), 2), clique(6)));
  EXPECT_TRUE(are_isomorphic(bob_power(clique(2), 3), clique(6)));
  EXPECT_TRUE(are_isomorphic(bob_power(nae(2), 3), nae(6)));
  EXPECT_TRUE(are_isomorphic(bob_power(rainbow(3), 2), rainbow(6)));
  for (std::size_t k = 2; k <= 3; ++k) {
    EXPECT_TRUE(homomorphically_equivalent(bob_power(directed_edge(), k), directed_edge()));
  }
}

TEST(BobPower, ViewMatchesMaterialized) {
  for (const auto &[name, y] : demo_catalog()) {
    auto p = bob_power(y, 2);
    BobPowerView view(y, 2);
    for (std::size_t s = 0; s < y.signature().size(); ++s) {
      const std::size_t arity = y.signature()[s].arity;
      std::size_t total = 1;
      for (std::size_t i = 0; i < arity; ++i) total *= p.size();
      for (std::size_t idx = 0; idx < total; ++idx) {
        Tuple t(arity);
        std::size_t rest = idx;
        for (std::size_t i = arity; i-- > 0;) {
          t[i] = rest % p.size();
          rest /= p.size();
        }
        // Definition: for every slot used, some base tuple agrees with t on
        // the positions carrying that slot.
        bool expected = true;
        for (std::size_t slot = 0; slot < 2 && expected; ++slot) {
          bool found = false;
          for (const Tuple &b : y.relation(s)) {
            bool agree = true;
            for (std::size_t i = 0; i < arity; ++i) {
              if (view.slot(t[i]) == slot && view.value(t[i]) != b[i]) agree = false;
            }
            found = found || agree;
          }
          bool used = false;
          for (Vertex v : t) used = used || view.slot(v) == slot;
          if (used && !found) expected = false;
        }
        ASSERT_EQ(p.contains(s, t), expected) << name;
        ASSERT_EQ(view.contains(s, t), expected) << name;
      }
    }
  }
}

TEST(OneBit, PredicatesAgreeWithSearch) {
  for (const auto &[name, y] : demo_catalog()) {
    EXPECT_EQ(alice_one_bit_helps(y), !oracle::brute_force_hom(alice_power(y, 2), y).has_value()) << name;
    EXPECT_EQ(bob_one_bit_helps(y), !oracle::brute_force_hom(bob_power(y, 2), y).has_value()) << name;
    EXPECT_EQ(alice_one_bit_helps(y), alice_one_bit_helps_by_search(y)) << name;
    EXPECT_EQ(bob_one_bit_helps(y), bob_one_bit_helps_by_search(y)) << name;
  }
  EXPECT_FALSE(alice_one_bit_helps(loop()));
  EXPECT_TRUE(alice_one_bit_helps(clique(2)));
  EXPECT_TRUE(alice_one_bit_helps(directed_edge()));
  EXPECT_FALSE(bob_one_bit_helps(directed_edge()));
  EXPECT_TRUE(bob_one_bit_helps(clique(2)));
  EXPECT_FALSE(bob_one_bit_helps(RelationalStructure(Signature({{"U", 1}}), 3, {{{0}, {2}}})));
}

TEST(OneBit, RandomDigraphsAgreeWithSearch) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto y = oracle::random_digraph(rng, 1 + rng() % 3, 0.45);
    if (y.tuple_count() == 0) continue;
    EXPECT_EQ(alice_one_bit_helps(y), alice_one_bit_helps_by_search(y));
    EXPECT_EQ(bob_one_bit_helps(y), bob_one_bit_helps_by_search(y));
  }
}

TEST(CartesianProduct, Detection) {
  EXPECT_TRUE(is_cartesian_product({{0, 1}}, 2));
  EXPECT_TRUE(is_cartesian_product({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 2));
  EXPECT_FALSE(is_cartesian_product({{0, 1}, {1, 0}}, 2));
}

TEST(PowerMaps, AreHomomorphisms) {
  for (const auto &[name, y] : demo_catalog()) {
    for (std::size_t k = 1; k <= 2; ++k) {
      auto ap = alice_power(y, k);
      auto bp = bob_power(y, k);
      EXPECT_TRUE(is_homomorphism(alice_diagonal(y, k), y, ap)) << name;
      EXPECT_TRUE(is_homomorphism(bob_first_slot(y, k), y, bp)) << name;
      EXPECT_TRUE(is_homomorphism(alice_power_step(y, k), ap, alice_power(y, k + 1))) << name;
      EXPECT_TRUE(is_homomorphism(bob_power_step(y, k), bp, bob_power(y, k + 1))) << name;
    }
  }
  // Lifting h: C6 -> K2 coordinatewise.
  auto x = directed_cycle(6);
  auto y = clique(2);
  auto h = find_homomorphism(x, y);
  ASSERT_TRUE(h);
  EXPECT_TRUE(is_homomorphism(lift_to_alice_powers(*h, x, y, 2), alice_power(x, 2), alice_power(y, 2)));
  EXPECT_TRUE(is_homomorphism(lift_to_bob_powers(*h, x, y, 2), bob_power(x, 2), bob_power(y, 2)));
}
