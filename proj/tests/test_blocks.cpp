#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sgc/blocks.hpp"
#include "sgc/errors.hpp"
#include "sgc/io.hpp"
#include "sgc/subgroups.hpp"

using namespace sgc;

namespace {

struct Loaded {
  Group G;
  ClassData cd;
  TablePtr t;
};

Loaded load(const std::string& name) {
  auto f = catalog_group(name);
  Group G = build_group(f);
  auto cd = pinned_class_data(f, G);
  return {G, cd, pinned_table(f, cd)};
}

// Osima: blocks are the connected components of chi ~ psi when the p-regular part of their inner product is nonzero.
std::vector<std::set<std::size_t>> osima_blocks(const CharacterTable& t, std::uint64_t p) {
  const std::size_t n = t.num_characters();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Cyclotomic s;
      for (std::size_t c = 0; c < t.num_classes(); ++c)
        if (t.classes[c].element_order % p != 0) s += Cyclotomic(Rational(t.classes[c].size)) * t.irr[i][c] * t.irr[j][c].conj();
      if (!s.is_zero()) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::set<std::size_t>> comp;
  for (std::size_t i = 0; i < n; ++i) comp[find(i)].insert(i);
  std::vector<std::set<std::size_t>> out;
  for (auto& [r, s] : comp) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::set<std::size_t>> as_sets(const BlockPartition& bp) {
  std::vector<std::set<std::size_t>> out;
  for (const auto& b : bp.blocks) out.emplace_back(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::string> block_labels(const CharacterTable& t, const std::vector<std::size_t>& b) {
  std::set<std::string> s;
  for (std::size_t i : b) s.insert(t.labels[i]);
  return s;
}

// Closure under products of distinct commuting members, by scanning all pairs of G.
std::set<std::size_t> brute_closure(const ClassData& cd, std::set<std::size_t> cls, std::uint64_t p) {
  auto elems = cd.group().elements();
  for (bool grew = true; grew;) {
    grew = false;
    for (const Perm& a : elems) {
      if (!cls.count(cd.class_of(a))) continue;
      for (const Perm& b : elems) {
        if (!cls.count(cd.class_of(b)) || !a.commutes_with(b)) continue;
        Perm ab = a * b;
        if (ab.order() == p && cls.insert(cd.class_of(ab)).second) grew = true;
      }
    }
  }
  return cls;
}

}  // namespace

TEST(CyclotomicFactors, ProductAndDegrees) {
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 2}, {21, 2}, {13, 3}, {15, 2}, {60, 7}, {11, 3}, {63, 5}}) {
    auto fs = cyclotomic_factors_mod_p(n, p);
    const std::size_t d = mult_order(p % n, n);
    std::size_t total = 0;
    for (const auto& f : fs) {
      EXPECT_EQ(f.size() - 1, d);
      EXPECT_EQ(f.back(), 1u);
      total += d;
    }
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= n; ++k) phi += gcd_u64(k, n) == 1;
    EXPECT_EQ(total, phi) << n << " mod " << p;
    EXPECT_TRUE(std::is_sorted(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    }));
    std::set<std::vector<std::uint64_t>> distinct(fs.begin(), fs.end());
    EXPECT_EQ(distinct.size(), fs.size());
  }
}

TEST(Blocks, CoprimePrimeGivesDefectZeroSingletons) {
  auto t = character_table(ClassData::compute(Group::symmetric(4)));
  auto bp = p_blocks(*t, 5);
  EXPECT_EQ(bp.blocks.size(), t->num_characters());
  for (int d : bp.defects) EXPECT_EQ(d, 0);
}

TEST(Blocks, MatchOsimaComponents) {
  std::vector<Group> groups{Group::symmetric(4), Group::alternating(5), Group::symmetric(5), Group::alternating(6),
                            Group::symmetric(6)};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Group G = Group::build(oracle::random_generators(rng, 7, 2), 7);
    if (G.order() >= 12 && G.order() <= 2000) groups.push_back(G);
  }
  int tested = 0;
  for (const Group& G : groups) {
    auto t = character_table(ClassData::compute(G));
    for (const auto& [q, e] : factorize(G.order_u64())) {
      auto bp = p_blocks(*t, q);
      EXPECT_EQ(as_sets(bp), osima_blocks(*t, q)) << G.describe() << " p=" << q;
      EXPECT_TRUE(std::find(bp.blocks[0].begin(), bp.blocks[0].end(), 0) != bp.blocks[0].end());
      EXPECT_EQ(bp.defects[0], nu_p(G.order(), q));
      ++tested;
    }
  }
  EXPECT_GE(tested, 15);
}

TEST(Blocks, A7AtSeven) {
  auto L = load("A7");
  auto bp = p_blocks(*L.t, 7);
  ASSERT_EQ(bp.blocks.size(), 5u);
  EXPECT_EQ(bp.defects, (std::vector<int>{1, 0, 0, 0, 0}));
  std::set<std::set<std::string>> zero;
  for (std::size_t b = 0; b < bp.blocks.size(); ++b)
    if (bp.defects[b] == 0) zero.insert(block_labels(*L.t, bp.blocks[b]));
  EXPECT_TRUE(zero.count({"14b"}));
  EXPECT_TRUE(zero.count({"21a"}));
  EXPECT_TRUE(zero.count({"35a"}));
}

TEST(Blocks, L33AtThirteen) {
  auto L = load("L3_3");
  auto bp = p_blocks(*L.t, 13);
  ASSERT_EQ(bp.blocks.size(), 6u);
  EXPECT_EQ(bp.defects, (std::vector<int>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(bp.defects[bp.block_of[L.t->char_index("13a")]], 0);
  EXPECT_EQ(bp.defects[bp.block_of[L.t->char_index("39a")]], 0);
}

TEST(ClosedClassCheck, MatchesBruteForceOnSmallGroups) {
  int tested = 0;
  for (Group G : {Group::alternating(5), Group::symmetric(4), Group::symmetric(5), Group::alternating(6)}) {
    auto cd = ClassData::compute(G);
    auto t = character_table(cd);
    for (std::size_t c = 1; c < cd.size(); ++c) {
      std::uint64_t p = cd[c].element_order;
      if (!is_prime(p)) continue;
      auto r = closed_class_check(cd, {c}, t);
      auto want = brute_closure(cd, {c}, p);
      EXPECT_EQ(r.closure, want) << G.describe() << " " << cd[c].label;
      EXPECT_EQ(r.closed, want.size() == 1);
      if (r.xi == ClosureResult::XiCertificate::kHolds) EXPECT_TRUE(r.closed);
      ++tested;
    }
  }
  EXPECT_GE(tested, 8);
}

TEST(ClosedClassCheck, A5InvolutionsClosed) {
  auto cd = ClassData::compute(Group::alternating(5));
  auto r = closed_class_check(cd, {1});
  EXPECT_TRUE(r.closed);
}

TEST(ClosedClassCheck, M12CentralInvolutionsClosed) {
  auto L = load("M12");
  std::size_t c = L.cd.find("2B");
  EXPECT_EQ(L.cd[c].centralizer_order, 192u);
  auto r = closed_class_check(L.cd, {c}, L.t);
  EXPECT_TRUE(r.closed);
}
