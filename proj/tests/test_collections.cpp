#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sgc/collections.hpp"
#include "sgc/errors.hpp"
#include "sgc/io.hpp"

using namespace sgc;

namespace {

bool is_p_power(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Brute-force G-classes of nontrivial p-subgroups of a small group: (order, class size) multiset.
std::multiset<std::pair<std::size_t, std::size_t>> brute_p_classes(const std::vector<Perm>& G, std::uint64_t p) {
  std::set<std::vector<Perm>> seen;
  std::multiset<std::pair<std::size_t, std::size_t>> out;
  for (const auto& H : oracle::all_subgroups(G)) {
    if (H.size() == 1 || !is_p_power(H.size(), p) || seen.count(H)) continue;
    std::set<std::vector<Perm>> orbit;
    for (const Perm& g : G) {
      std::vector<Perm> c;
      for (const Perm& h : H) c.push_back(h.conjugate(g));
      std::sort(c.begin(), c.end());
      orbit.insert(c);
    }
    seen.insert(orbit.begin(), orbit.end());
    out.emplace(H.size(), orbit.size());
  }
  return out;
}

std::vector<Perm> elements_of(const Group& G) { return G.elements(); }

bool brute_radical(const std::vector<Perm>& G, const std::vector<Perm>& Q, std::uint64_t p) {
  auto N = oracle::normalizer(G, Q);
  std::set<Perm> ns(N.begin(), N.end());
  std::size_t best = 1;
  for (const auto& H : oracle::all_subgroups(N))
    if (is_p_power(H.size(), p) && oracle::is_normal(N, H)) best = std::max(best, H.size());
  return best == Q.size();
}

}  // namespace

TEST(PSubgroupClasses, A4AtTwo) {
  auto L = p_subgroup_classes(Group::alternating(4), 2);
  ASSERT_EQ(L.classes.size(), 2u);
  EXPECT_EQ(L.classes[0].order, 2u);
  EXPECT_EQ(L.classes[1].order, 4u);
  EXPECT_EQ(L.classes[0].orbit_size, 3);
}

TEST(PSubgroupClasses, CoprimePrimeIsEmpty) {
  auto L = p_subgroup_classes(Group::symmetric(4), 5);
  EXPECT_TRUE(L.classes.empty());
}

TEST(PSubgroupClasses, SylowBoundIsEnforced) {
  Context ctx;
  ctx.bounds.max_sylow_order = 8;
  EXPECT_THROW(p_subgroup_classes(Group::symmetric(6), 2, ctx), ResourceError);
}

TEST(PSubgroupClasses, RandomGroupsMatchBruteForce) {
  std::mt19937_64 rng(11);
  int tested = 0;
  std::vector<Group> groups{Group::symmetric(4), Group::alternating(5)};
  for (int i = 0; i < 80 && groups.size() < 16; ++i) {
    Group G = Group::build(oracle::random_generators(rng, 6, 2), 6);
    if (G.order() >= 6 && G.order() <= 120) groups.push_back(G);
  }
  for (const Group& G : groups) {
    auto elems = elements_of(G);
    auto cd = ClassData::compute(G);
    for (const auto& [p, e] : factorize(G.order_u64())) {
      if (p_part(G.order(), p) > 27) continue;
      auto L = p_subgroup_classes(G, p, {}, &cd);
      std::multiset<std::pair<std::size_t, std::size_t>> got;
      for (const auto& c : L.classes) got.emplace(c.order, c.orbit_size.get_ui());
      EXPECT_EQ(got, brute_p_classes(elems, p)) << G.describe() << " p=" << p;
      // Every subgroup of the Sylow maps onto its class representative.
      for (std::size_t s = 0; s < L.subgroups.size(); ++s) {
        const auto& sub = L.subgroups[s];
        auto k = conjugate_key(G, L.small(s).elements, sub.to_rep);
        EXPECT_EQ(k, L.classes[sub.cls].rep.key);
      }
      ++tested;
    }
  }
  EXPECT_GE(tested, 15);
}

TEST(Collections, FlagsMatchBruteForceAndContainments) {
  std::mt19937_64 rng(5);
  std::vector<Group> groups{Group::symmetric(4), Group::alternating(5), Group::symmetric(5)};
  for (int i = 0; i < 80 && groups.size() < 12; ++i) {
    Group G = Group::build(oracle::random_generators(rng, 6, 2), 6);
    if (G.order() >= 8 && G.order() <= 120) groups.push_back(G);
  }
  int tested = 0;
  for (const Group& G : groups) {
    auto elems = elements_of(G);
    auto cd = ClassData::compute(G);
    for (const auto& [p, e] : factorize(G.order_u64())) {
      auto L = std::make_shared<const PSubgroupLattice>(p_subgroup_classes(G, p, {}, &cd));
      auto pc = p_central_classes(cd, p);
      auto bouc = build_collection(cd, {p, CollectionKind::kBouc}, L, pc);
      auto dist = build_collection(cd, {p, CollectionKind::kDistinguishedBouc}, L, pc);
      auto cr = build_collection(cd, {p, CollectionKind::kCentricRadical}, L, pc);
      auto benson = build_collection(cd, {p, CollectionKind::kBenson}, L, pc);
      for (std::size_t c = 0; c < L->classes.size(); ++c) {
        Group Q = L->classes[c].rep.group();
        const auto& f = bouc.flags[c];
        EXPECT_EQ(f.radical, is_p_radical(G, Q, p));
        EXPECT_EQ(f.radical, brute_radical(elems, L->classes[c].rep.elements, p));
        EXPECT_EQ(f.centric, is_p_centric(G, Q, p));
        EXPECT_EQ(f.distinguished, is_distinguished(cd, Q, pc));
        if (cr.contains_class(c)) EXPECT_TRUE(dist.contains_class(c)) << G.describe();
        if (dist.contains_class(c)) EXPECT_TRUE(bouc.contains_class(c));
      }
      // Benson collection is closed under nontrivial subgroups.
      for (std::size_t s = 0; s < L->subgroups.size(); ++s) {
        if (!benson.contains_class(L->subgroups[s].cls)) continue;
        for (std::size_t t = 0; t < L->subgroups.size(); ++t)
          if (L->contains(s, t)) EXPECT_TRUE(benson.contains_class(L->subgroups[t].cls));
      }
      EXPECT_TRUE(pc.closure.closed || pc.benson.size() > pc.central.size());
      for (std::size_t c : pc.central) EXPECT_TRUE(pc.benson.count(c));
      ++tested;
    }
  }
  EXPECT_GE(tested, 12);
}

TEST(Collections, PredicatesRejectNonPGroups) {
  Group G = Group::symmetric(4);
  EXPECT_THROW(is_p_radical(G, Group::build({}, 4), 2), DomainError);
  EXPECT_THROW(is_p_centric(G, Group::build({Perm::from_cycles("(1,2,3)", 4)}, 4), 2), DomainError);
}

TEST(Collections, M12AtThree) {
  auto f = catalog_group("M12");
  Group G = build_group(f);
  auto cd = pinned_class_data(f, G);
  auto L = std::make_shared<const PSubgroupLattice>(p_subgroup_classes(G, 3, {}, &cd));
  auto pc = p_central_classes(cd, 3);
  ASSERT_EQ(pc.central.size(), 1u);
  EXPECT_EQ(cd[*pc.central.begin()].label, "3A");
  auto bouc = build_collection(cd, {3, CollectionKind::kBouc}, L, pc);
  auto dist = build_collection(cd, {3, CollectionKind::kDistinguishedBouc}, L, pc);
  EXPECT_EQ(bouc.members.size(), 4u);
  EXPECT_EQ(dist.members.size(), 3u);
  for (std::size_t c = 0; c < L->classes.size(); ++c) {
    const auto& cls = L->classes[c];
    if (cls.order != 3) continue;
    std::string lab = cd[cd.class_of(cls.rep.generators[0])].label;
    if (lab == "3A") EXPECT_FALSE(bouc.flags[c].radical);
    if (lab == "3B") {
      EXPECT_TRUE(bouc.flags[c].radical);
      EXPECT_FALSE(bouc.flags[c].distinguished);
    }
  }
  for (std::size_t c : dist.members) {
    if (L->classes[c].order == 9) EXPECT_TRUE(dist.flags[c].purely_central && dist.flags[c].elementary_abelian);
  }
}

TEST(Collections, J2AtThree) {
  auto f = catalog_group("J2");
  Group G = build_group(f);
  auto cd = pinned_class_data(f, G);
  auto L = std::make_shared<const PSubgroupLattice>(p_subgroup_classes(G, 3, {}, &cd));
  auto pc = p_central_classes(cd, 3);
  std::size_t a = cd.find("3A"), b = cd.find("3B");
  EXPECT_EQ(pc.central, (std::set<std::size_t>{a}));
  int na = 0, nb = 0;
  for (std::uint64_t r : L->ranks) {
    std::size_t c = cd.class_of_rank(r);
    na += c == a;
    nb += c == b;
  }
  EXPECT_EQ(na, 2);
  EXPECT_EQ(nb, 24);
  auto benson = build_collection(cd, {3, CollectionKind::kBenson}, L, pc);
  ASSERT_EQ(benson.members.size(), 1u);
  EXPECT_EQ(benson.total_size(), 280);
  EXPECT_EQ(L->classes[benson.members[0]].order, 3u);
  auto cr = build_collection(cd, {3, CollectionKind::kCentricRadical}, L, pc);
  for (std::size_t c = 0; c < L->classes.size(); ++c)
    if (L->classes[c].order == 3 && L->classes[c].class_counts[a] == 2) {
      EXPECT_TRUE(cr.flags[c].radical);
      EXPECT_FALSE(cr.flags[c].centric);
    }
}
