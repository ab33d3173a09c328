#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcsp/io.hpp"
#include "qcsp/powers.hpp"
#include "qcsp/structure.hpp"

using namespace qcsp;

TEST(Structure, CanonicalOrderingAndEquality) {
  auto a = digraph(3, {{2, 0}, {0, 1}, {0, 1}});
  auto b = digraph(3, {{0, 1}, {2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.tuple_count(), 2u);
  EXPECT_TRUE(a.contains(0, Tuple{2, 0}));
  EXPECT_FALSE(a.contains(0, Tuple{1, 0}));
}

TEST(Structure, RejectsBadTuples) {
  EXPECT_THROW(digraph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(single_relation(2, 3, {{0, 1}}), std::invalid_argument);
}

TEST(Catalog, NamedStructures) {
  long long two = 2;
  auto k2 = make_named("clique", std::span<const long long>(&two, 1));
  EXPECT_EQ(k2.size(), 2u);
  EXPECT_EQ(k2.relation(0), (std::vector<Tuple>{{0, 1}, {1, 0}}));
  EXPECT_EQ(make_named("nae", std::span<const long long>(&two, 1)).relation(0).size(), 6u);
  EXPECT_EQ(make_named("one_in_three").relation(0).size(), 3u);
  EXPECT_EQ(rainbow(3).relation(0).size(), 6u);
  EXPECT_EQ(loop().relation(0), (std::vector<Tuple>{{0, 0}}));
  EXPECT_THROW(make_named("nonsense"), std::invalid_argument);
  long long zero = 0;
  EXPECT_THROW(make_named("clique", std::span<const long long>(&zero, 1)), std::invalid_argument);
}

TEST(Homomorphism, BasicCases) {
  auto k3 = clique(3);
  EXPECT_TRUE(is_homomorphism(VertexMap{0, 1, 2}, k3, k3));
  EXPECT_FALSE(is_homomorphism(VertexMap{0, 1}, clique(2), directed_edge()));
  EXPECT_TRUE(find_homomorphism(k3, k3).has_value());
  EXPECT_FALSE(find_homomorphism(k3, clique(2)).has_value());
  EXPECT_TRUE(find_homomorphism(clique(2), alice_power(directed_edge(), 2)).has_value());
}

TEST(Homomorphism, SignatureAndTotalityErrors) {
  EXPECT_THROW(is_homomorphism(VertexMap{0, 0, 0}, nae(2), clique(2)), SignatureMismatch);
  EXPECT_THROW(is_homomorphism(VertexMap{0}, clique(2), clique(2)), SignatureMismatch);
  EXPECT_THROW(is_homomorphism(VertexMap{0, 5}, clique(2), clique(2)), SignatureMismatch);
}

TEST(Homomorphism, AgreesWithExhaustiveEnumeration) {
  std::mt19937_64 rng(11);
  std::size_t positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto x = oracle::random_digraph(rng, 1 + rng() % 5, 0.3);
    auto y = oracle::random_digraph(rng, 1 + rng() % 4, 0.4);
    auto found = find_homomorphism(x, y);
    auto expected = oracle::brute_force_hom(x, y);
    ASSERT_EQ(found.has_value(), expected.has_value()) << "trial " << trial;
    if (found) {
      EXPECT_TRUE(oracle::preserves(*found, x, y));
      ++positives;
    }
  }
  EXPECT_GT(positives, 50u);
  EXPECT_LT(positives, 350u);
}

TEST(Homomorphism, TernaryAgreesWithExhaustiveEnumeration) {
  std::mt19937_64 rng(5);
  Signature sig({{"R", 3}, {"U", 1}});
  for (int trial = 0; trial < 200; ++trial) {
    auto x = oracle::random_structure(rng, sig, 1 + rng() % 5, 1 + rng() % 3);
    auto y = oracle::random_structure(rng, sig, 1 + rng() % 3, 1 + rng() % 6);
    ASSERT_EQ(find_homomorphism(x, y).has_value(), oracle::brute_force_hom(x, y).has_value());
  }
}

TEST(Homomorphism, InjectiveAndAllowedLists) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    auto x = oracle::random_digraph(rng, 1 + rng() % 4, 0.3);
    auto y = oracle::random_digraph(rng, 1 + rng() % 5, 0.5);
    auto h = find_homomorphism(x, y, SearchOptions{true, {}});
    ASSERT_EQ(h.has_value(), oracle::brute_force_hom(x, y, true).has_value());
  }
  SearchOptions pinned;
  pinned.allowed = {{1}, {0, 1, 2}};
  auto h = find_homomorphism(clique(2), clique(3), pinned);
  ASSERT_TRUE(h);
  EXPECT_EQ((*h)[0], 1u);
}

TEST(Homomorphism, DeterministicWitness) {
  auto x = directed_cycle(6);
  auto y = clique(3);
  auto a = find_homomorphism(x, y);
  auto b = find_homomorphism(x, y);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, *b);
}

TEST(Core, Examples) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_TRUE(are_isomorphic(core_of(clique(n)), clique(n)));
  }
  // A looped vertex with extra vertices mapping into it.
  auto star = digraph(4, {{0, 0}, {1, 0}, {2, 1}, {3, 3}});
  EXPECT_TRUE(are_isomorphic(core_of(star), loop()));
  // Disjoint union of K2 and K3.
  auto u = digraph(5, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {2, 4}, {4, 2}});
  EXPECT_TRUE(are_isomorphic(core_of(u), clique(3)));
}

TEST(Core, IsMinimalRetractOnRandomDigraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto y = oracle::random_digraph(rng, 1 + rng() % 5, 0.35);
    auto c = core_of(y);
    ASSERT_TRUE(homomorphically_equivalent(c, y));
    // No proper substructure of the core is equivalent: every endomorphism is onto.
    oracle::for_each_map(c.size(), c.size(), [&](const VertexMap &f) {
      if (oracle::preserves(f, c, c)) {
        EXPECT_EQ(std::set<Vertex>(f.begin(), f.end()).size(), c.size());
      }
      return false;
    });
  }
}

TEST(Isomorphism, Examples) {
  auto k4 = clique(4);
  EXPECT_TRUE(are_isomorphic(k4, k4));
  auto k3_minus = digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}});
  EXPECT_FALSE(are_isomorphic(clique(3), k3_minus));
  EXPECT_TRUE(are_isomorphic(alice_power(clique(2), 2), k4));
  auto c = directed_cycle(4);
  auto relabeled = digraph(4, {{2, 0}, {0, 3}, {3, 1}, {1, 2}});
  auto iso = find_isomorphism(c, relabeled);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_homomorphism(*iso, c, relabeled));
}

TEST(Io, SchemaExampleAndRoundTrip) {
  auto k2 = load_structure(R"({"signature":[{"name":"E","arity":2}],"domain":2,"relations":{"E":[[1,0],[0,1]]}})");
  EXPECT_EQ(k2, clique(2));
  for (const auto &y : {clique(3), nae(2), one_in_three(), directed_edge(), loop()}) {
    EXPECT_EQ(structure_from_json(Json::parse(structure_to_json(y).dump())), y);
  }
}

TEST(Io, ValidationErrors) {
  EXPECT_THROW(load_structure(R"({"signature":[{"name":"E","arity":2}],"domain":2,"relations":{"E":[[0,2]]}})"),
               InputError);
  EXPECT_THROW(load_structure(R"({"signature":[{"name":"E","arity":2}],"domain":2,"relations":{"E":[[0]]}})"),
               InputError);
  EXPECT_THROW(load_structure(R"({"signature":[{"name":"E","arity":2}],"domain":2,"relations":{"F":[]}})"),
               InputError);
  try {
    load_structure("{\"signature\": [],\n \"domain\": 2,,}");
    FAIL();
  } catch (const InputError &e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
}
