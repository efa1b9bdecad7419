#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sgc/errors.hpp"
#include "sgc/group.hpp"
#include "sgc/perm.hpp"

using namespace sgc;

TEST(Perm, CycleRoundTrip) {
  Perm g = Perm::from_cycles("(1,2,3)(4,5)", 6);
  EXPECT_EQ(g.to_cycles(), "(1,2,3)(4,5)");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(Perm::from_cycles("()", 3).to_cycles(), "()");
  EXPECT_EQ(Perm::from_cycles("( 1, 2, 3)", 3).to_cycles(), "(1,2,3)");
}

TEST(Perm, RejectsMalformed) {
  EXPECT_THROW(Perm::from_cycles("(1,2,2)", 3), InputError);
  EXPECT_THROW(Perm::from_cycles("(1,4)", 3), InputError);
  EXPECT_THROW(Perm::from_cycles("(1,2", 3), InputError);
  EXPECT_THROW(Perm::from_images({0, 0, 1}), InputError);
}

TEST(Perm, RightActionAndInverse) {
  Perm a = Perm::from_cycles("(1,2)", 3), b = Perm::from_cycles("(2,3)", 3);
  // apply a, then b: 1 -> 2 -> 3
  EXPECT_EQ((a * b)[0], 2);
  Perm c = a * b;
  EXPECT_TRUE((c * c.inverse()).is_identity());
  EXPECT_EQ(c.pow(-1), c.inverse());
  EXPECT_EQ(a.conjugate(b), b.inverse() * a * b);
}

TEST(Group, TrivialAndSymmetric) {
  EXPECT_EQ(Group::build({}, 5).order(), 1);
  Group s5 = Group::build({Perm::from_cycles("(1,2,3,4,5)", 5), Perm::from_cycles("(1,2)", 5)}, 5);
  auto brute = oracle::closure(s5.generators(), 5);
  EXPECT_EQ(s5.order(), static_cast<unsigned long>(brute.size()));
  EXPECT_EQ(s5.order(), 120);
  EXPECT_EQ(Group::alternating(6).order(), 360);
  EXPECT_EQ(Group::alternating(7).order(), 2520);
  EXPECT_EQ(Group::symmetric(7).order(), 5040);
}

TEST(Group, RankIsBijective) {
  Group g = Group::symmetric(5);
  std::vector<char> seen(120, 0);
  for (std::uint64_t r = 0; r < 120; ++r) {
    Perm x = g.element(r);
    EXPECT_EQ(g.rank(x), r);
    seen[r] = 1;
  }
  EXPECT_EQ(g.rank(g.identity()), 0u);
}

TEST(Group, RandomGroupsMatchClosure) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + rng() % 6;
    auto gens = oracle::random_generators(rng, n, 1 + static_cast<int>(rng() % 3));
    Group G = Group::build(gens, n);
    auto brute = oracle::closure(gens, n);
    ASSERT_EQ(G.order(), static_cast<unsigned long>(brute.size()));
    BigInt prod = 1;
    for (auto len : G.chain().orbit_lengths()) prod *= static_cast<unsigned long>(len);
    EXPECT_EQ(prod, G.order());
    for (const Perm& x : brute) EXPECT_TRUE(G.contains(x));
  }
}
