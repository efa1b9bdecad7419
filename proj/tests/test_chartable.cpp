#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sgc/chartable.hpp"
#include "sgc/errors.hpp"
#include "sgc/io.hpp"
#include "sgc/subgroups.hpp"

using namespace sgc;

namespace {

TablePtr table_of(const Group& G) { return character_table(ClassData::compute(G)); }

std::vector<std::string> strs(const std::vector<Cyclotomic>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

// Number of pairs (x, y) in C_i x C_j with xy = z for a fixed z in C_k, counted directly.
std::uint64_t brute_structure_constant(const ClassData& cd, std::size_t i, std::size_t j, std::size_t k) {
  const Group& G = cd.group();
  const Perm z = cd[k].representative;
  std::uint64_t n = 0;
  for (std::uint32_t r : cd.members(i)) {
    Perm x = G.element(r);
    if (cd.class_of(x.inverse() * z) == j) ++n;
  }
  return n;
}

// Fixed points of g on the right cosets of H, by listing the cosets.
std::vector<std::uint64_t> coset_fixed_counts(const ClassData& cd, const Group& H) {
  const Group& G = cd.group();
  auto h = H.elements();
  std::set<std::set<Perm>> cosets;
  for (const Perm& x : G.elements()) {
    std::set<Perm> c;
    for (const Perm& y : h) c.insert(y * x);
    cosets.insert(c);
  }
  std::vector<std::uint64_t> out;
  for (const auto& cls : cd.classes()) {
    std::uint64_t f = 0;
    for (const auto& c : cosets) {
      Perm moved = *c.begin() * cls.representative;
      if (c.count(moved)) ++f;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(CharacterTable, S3) {
  auto t = table_of(Group::symmetric(3));
  ASSERT_EQ(t->num_characters(), 3u);
  EXPECT_EQ(t->labels, (std::vector<std::string>{"1a", "1b", "2a"}));
  EXPECT_EQ(strs(t->irr[1]), (std::vector<std::string>{"1", "-1", "1"}));
  EXPECT_EQ(strs(t->irr[2]), (std::vector<std::string>{"2", "0", "-1"}));
}

TEST(CharacterTable, S4MatchesExplicitRepresentations) {
  Group G = Group::symmetric(4);
  auto cd = ClassData::compute(G);
  auto t = character_table(cd);
  // Standard representation: fixed points minus one; its twist by the sign.
  std::vector<Cyclotomic> std_rep, twisted, sign;
  for (const auto& c : cd.classes()) {
    long fix = 0;
    for (std::size_t i = 0; i < 4; ++i) fix += c.representative[i] == i;
    long sg = 1;
    for (auto len : c.representative.cycle_type())
      if (len % 2 == 0) sg = -sg;
    std_rep.emplace_back(fix - 1);
    twisted.emplace_back((fix - 1) * sg);
    sign.emplace_back(sg);
  }
  std::set<std::vector<std::string>> rows;
  for (const auto& r : t->irr) rows.insert(strs(r));
  EXPECT_TRUE(rows.count(strs(std_rep)));
  EXPECT_TRUE(rows.count(strs(twisted)));
  EXPECT_TRUE(rows.count(strs(sign)));
  std::multiset<long> degs;
  for (std::size_t i = 0; i < t->num_characters(); ++i) degs.insert(t->degree(i).get_si());
  EXPECT_EQ(degs, (std::multiset<long>{1, 1, 2, 3, 3}));
}

TEST(CharacterTable, A5HasIrrationalities) {
  auto t = table_of(Group::alternating(5));
  std::set<std::string> values;
  for (const auto& r : t->irr)
    for (const auto& v : r) values.insert(v.str());
  EXPECT_TRUE(values.count("-E(5)-E(5)^4"));
  EXPECT_TRUE(values.count("-E(5)^2-E(5)^3"));
}

TEST(CharacterTable, CyclicGroupNeedsRootsOfUnity) {
  auto t = table_of(Group::build({Perm::from_cycles("(1,2,3,4,5,6,7)", 7)}, 7));
  ASSERT_EQ(t->num_characters(), 7u);
  std::set<std::string> seen;
  for (const auto& r : t->irr) seen.insert(r[1].str());
  EXPECT_EQ(seen.size(), 7u);
}

TEST(CharacterTable, StructureConstantsMatchBruteForce) {
  for (Group G : {Group::symmetric(4), Group::alternating(5), Group::symmetric(5)}) {
    auto cd = ClassData::compute(G);
    auto t = character_table(cd);
    for (std::size_t i = 0; i < cd.size(); ++i)
      for (std::size_t j = 0; j < cd.size(); ++j)
        for (std::size_t k = 0; k < cd.size(); ++k)
          EXPECT_EQ(class_mult_coefficient(*t, i, j, k), brute_structure_constant(cd, i, j, k));
  }
}

TEST(CharacterTable, RandomGroupsTablesVerifyAndInductionMatchesCosets) {
  std::mt19937_64 rng(7);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 10; ++trial) {
    auto gens = oracle::random_generators(rng, 6, 2);
    Group G = Group::build(gens, 6);
    if (G.order() > 720 || G.order() < 6) continue;
    auto cd = ClassData::compute(G);
    auto t = character_table(cd);
    EXPECT_NO_THROW(t->verify());
    BigInt sq = 0;
    for (std::size_t i = 0; i < t->num_characters(); ++i) sq += t->degree(i) * t->degree(i);
    EXPECT_EQ(sq, G.order());
    // A cyclic subgroup: induced trivial character equals the coset permutation character.
    Group H = Group::build({G.random(rng)}, 6);
    auto th = table_of(H);
    auto fm = fusion_map(t, th);
    auto ind = induce(ClassFunction::trivial(th), fm);
    auto fixed = coset_fixed_counts(cd, H);
    for (std::size_t c = 0; c < cd.size(); ++c) EXPECT_EQ(ind[c], Cyclotomic(static_cast<long>(fixed[c])));
    EXPECT_EQ(permutation_character(t, H), ind);
    // Frobenius reciprocity against every irreducible.
    for (std::size_t i = 0; i < t->num_characters(); ++i) {
      auto chi = ClassFunction::irreducible(t, i);
      EXPECT_EQ(inner_product(ind, chi), inner_product(ClassFunction::trivial(th), restrict_to(chi, fm)));
    }
    ++tested;
  }
  EXPECT_GE(tested, 8);
}

TEST(CharacterTable, M12Degrees) {
  auto f = catalog_group("M12");
  Group G = build_group(f);
  auto cd = pinned_class_data(f, G);
  auto t = pinned_table(f, cd);
  std::multiset<long> degs;
  for (std::size_t i = 0; i < t->num_characters(); ++i) degs.insert(t->degree(i).get_si());
  EXPECT_EQ(degs, (std::multiset<long>{1, 11, 11, 16, 16, 45, 54, 55, 55, 55, 66, 99, 120, 144, 176}));
  EXPECT_EQ(t->classes[t->class_index("2A")].size, 396);
  EXPECT_EQ(t->classes[t->class_index("2B")].size, 495);
}

TEST(CharacterTable, A7InducedFromFrobenius21) {
  auto f = catalog_group("A7");
  Group G = build_group(f);
  auto cd = pinned_class_data(f, G);
  auto t = pinned_table(f, cd);
  Group H = normalizer(G, sylow(G, 7).group).group;
  ASSERT_EQ(H.order(), 21);
  auto ind = permutation_character(t, H);
  EXPECT_EQ(strs(ind.values()), (std::vector<std::string>{"120", "0", "0", "6", "0", "0", "0", "1", "1"}));
  EXPECT_EQ(format_decomposition(*t, decompose(ind)), "1a+10a+10b+2*14b+15a+21a+35a");
  EXPECT_EQ(strs(t->irr[t->char_index("14b")])[2], "-1");
}

TEST(CharacterTable, PinsRejectAmbiguity) {
  auto cd = ClassData::compute(Group::symmetric(4));
  auto base = character_table(cd);
  CharacterTable t = *base;
  EXPECT_THROW(apply_character_pins(t, {{"3a", "1A", Cyclotomic(3)}}), ValidationError);
}

TEST(ClassFunction, DecomposeRejectsNonCharacters) {
  auto t = table_of(Group::symmetric(3));
  ClassFunction f(t, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)});
  EXPECT_THROW(decompose(f), DomainError);
  auto reg = ClassFunction(t, {Cyclotomic(6), Cyclotomic(0), Cyclotomic(0)});
  EXPECT_EQ(format_decomposition(*t, decompose(reg)), "1a+1b+2*2a");
}
