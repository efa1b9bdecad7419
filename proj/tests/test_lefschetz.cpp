#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sgc/errors.hpp"
#include "sgc/io.hpp"
#include "sgc/lefschetz.hpp"
#include "sgc/subgroups.hpp"

using namespace sgc;

namespace {

CollectionSpec spec(std::uint64_t p, CollectionKind kind) {
  CollectionSpec s;
  s.p = p;
  s.kind = kind;
  return s;
}

struct Setup {
  Group G;
  ClassData cd;
  TablePtr t;
};

Setup load(const std::string& name) {
  auto f = catalog_group(name);
  Group G = build_group(f);
  auto cd = pinned_class_data(f, G);
  return {G, cd, pinned_table(f, cd)};
}

std::shared_ptr<const OrderComplex> complex_of(const ClassData& cd, std::uint64_t p, CollectionKind kind,
                                               ComplexMode mode = ComplexMode::kFull) {
  auto L = std::make_shared<const PSubgroupLattice>(p_subgroup_classes(cd.group(), p, {}, &cd));
  auto c = std::make_shared<const Collection>(build_collection(cd, spec(p, kind), L, p_central_classes(cd, p)));
  return std::make_shared<const OrderComplex>(order_complex(c, mode));
}

}  // namespace

TEST(Lefschetz, EmptyComplexIsMinusTrivial) {
  auto G = Group::symmetric(3);
  auto cd = ClassData::compute(G);
  auto t = character_table(cd);
  auto K = complex_of(cd, 5, CollectionKind::kQuillen);
  auto L = lefschetz_character(t, *K);
  EXPECT_EQ(L.character, -ClassFunction::trivial(t));
  EXPECT_EQ(L.degree_from_counts, -1);
  EXPECT_EQ(euler_crosscheck(L, K).size(), cd.size());
  EXPECT_THROW(lefschetz_character(nullptr, *K), DependencyError);
}

TEST(Lefschetz, QuillenEulerCrosscheckOnRandomGroups) {
  std::mt19937_64 rng(17);
  std::vector<Group> groups{Group::symmetric(5), Group::alternating(6)};
  for (int i = 0; i < 200 && groups.size() < 12; ++i) {
    Group G = Group::build(oracle::random_generators(rng, 7, 2), 7);
    if (G.order() >= 12 && G.order() <= 2000) groups.push_back(G);
  }
  int tested = 0;
  for (const Group& G : groups) {
    auto cd = ClassData::compute(G);
    auto t = character_table(cd);
    for (std::uint64_t p : {2u, 3u}) {
      if (G.order_u64() % p || p_part(G.order_u64(), p) > 64) continue;
      auto K = complex_of(cd, p, CollectionKind::kQuillen);
      auto L = lefschetz_character(t, *K);
      std::vector<EulerRow> rows;
      EXPECT_NO_THROW(rows = euler_crosscheck(L, K)) << G.describe() << " p=" << p;
      // The orbit-level character agrees with the full complex's Euler characteristic.
      EXPECT_EQ(L.character.degree(), Cyclotomic(Rational(components_and_euler(K->complex).reduced_euler)));
      ++tested;
    }
  }
  EXPECT_GE(tested, 12);
}

TEST(Lefschetz, M12DistinguishedBoucAtThree) {
  auto s = load("M12");
  auto K = complex_of(s.cd, 3, CollectionKind::kDistinguishedBouc);
  auto L = lefschetz_character(s.t, *K);
  EXPECT_EQ(L.degree_from_counts, -441);
  auto rows = euler_crosscheck(L, K);
  EXPECT_EQ(rows[s.t->class_index("3B")].reduced_euler, 3);

  // Ind_{H1} + Ind_{H2} - Ind_{H12} - 1 with H1, H2 the normalizers of the two classes of 3^2 and
  // H12 the Sylow normalizer.
  const auto& lat = *K->collection->lattice;
  std::vector<Group> H;
  Group H12;
  for (std::size_t m : K->collection->members) {
    if (lat.classes[m].order == 9) H.push_back(lat.classes[m].normalizer);
    if (lat.classes[m].order == 27) H12 = lat.classes[m].normalizer;
  }
  ASSERT_EQ(H.size(), 2u);
  EXPECT_EQ(H12.order(), 108);
  auto combo = permutation_character(s.t, H[0]) + permutation_character(s.t, H[1]) - permutation_character(s.t, H12) -
               ClassFunction::trivial(s.t);
  EXPECT_EQ(L.character, combo);

  for (const Group& H1 : H) {
    ASSERT_TRUE(H1.contains(H12));
    auto tH = character_table(ClassData::compute(H1));
    EXPECT_EQ(format_decomposition(*tH, decompose(permutation_character(tH, H12))), "1a+3b");
  }
}

TEST(Lefschetz, BlockDistributionOfA7CosetCharacter) {
  auto s = load("A7");
  Group F = make_subgroup(s.G, {Perm::from_cycles("(1,2,3,4,5,6,7)", 7), Perm::from_cycles("(2,3,5)(4,7,6)", 7)}).group;
  ASSERT_EQ(F.order(), 21);
  auto ind = permutation_character(s.t, F);
  auto bp = p_blocks(*s.t, 7);
  auto r = block_distribution(ind, bp);
  ClassFunction sum = ClassFunction::zero(s.t);
  for (const auto& c : r.components) {
    sum = sum + c.character;
    if (c.defect == 0) {
      EXPECT_FALSE(c.p_singular_witness.has_value());
      EXPECT_TRUE(projective_part_test(c.character, 7).vanishes);
    } else {
      EXPECT_EQ(format_decomposition(*s.t, c.multiplicities), "1a+10a+10b+15a");
      EXPECT_FALSE(projective_part_test(c.character, 7).vanishes);
    }
  }
  EXPECT_EQ(sum, ind);
  EXPECT_EQ(r.components.size(), 4u);
  EXPECT_TRUE(block_distribution(ClassFunction::zero(s.t), bp).components.empty());
}

TEST(Lefschetz, ProjectivePartTest) {
  auto s = load("L3_2");
  EXPECT_TRUE(projective_part_test(ClassFunction::irreducible(s.t, s.t->char_index("8a")), 2).vanishes);
  auto r = projective_part_test(ClassFunction::trivial(s.t), 2);
  EXPECT_FALSE(r.vanishes);
  EXPECT_EQ(s.t->classes[*r.witness].element_order % 2, 0u);
  auto regular = permutation_character(s.t, Group::build({}, 7));
  EXPECT_TRUE(projective_part_test(regular, 2).vanishes);
  EXPECT_TRUE(projective_part_test(regular, 7).vanishes);
}

TEST(Projectivity, RobinsonWebbScreen) {
  EXPECT_EQ(robinson_webb_screen(BigInt(64), 2, {1, 10, 16, 16, 44, 144}), (std::vector<std::uint64_t>{144}));
  EXPECT_EQ(robinson_webb_screen(BigInt(192), 2, {1, 10, 16, 16, 44, 144}), (std::vector<std::uint64_t>{144}));
  EXPECT_EQ(robinson_webb_screen(BigInt(15), 2, {1, 3, 3}), (std::vector<std::uint64_t>{1, 3, 3}));
  EXPECT_THROW(robinson_webb_screen(BigInt(2), 2, {}), DependencyError);
}

TEST(Projectivity, DoubleCosetBoundAgainstBruteForce) {
  // H = G with p coprime: one double coset, trivially coprime.
  auto G = Group::alternating(5);
  auto r = robinson_double_coset_bound(G, G, 7);
  EXPECT_EQ(r.double_cosets, 1u);
  EXPECT_EQ(r.coprime, 1u);
  // S5 over a Sylow 2: brute-force intersections.
  auto S = Group::symmetric(5);
  auto P = sylow(S, 2).group;
  auto r2 = robinson_double_coset_bound(S, P, 2, 1);
  auto pe = P.elements();
  std::set<std::vector<Perm>> seen;
  std::size_t dc = 0, coprime = 0;
  for (const Perm& g : S.elements()) {
    std::vector<Perm> d;
    for (const Perm& a : pe)
      for (const Perm& b : pe) d.push_back(a * g * b);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (!seen.insert(d).second) continue;
    ++dc;
    if (pe.size() * pe.size() / d.size() % 2) ++coprime;
  }
  EXPECT_EQ(r2.double_cosets, dc);
  EXPECT_EQ(r2.coprime, coprime);
  ASSERT_TRUE(r2.max_multiplicity.has_value());
  EXPECT_LE(*r2.max_multiplicity * *r2.max_multiplicity, coprime);
}

TEST(Projectivity, M12AtTwo) {
  auto s = load("M12");
  auto K = complex_of(s.cd, 2, CollectionKind::kDistinguishedBouc, ComplexMode::kOrbit);
  int n192 = 0;
  for (std::size_t m : K->collection->members) {
    const auto& cls = K->collection->lattice->classes[m];
    if (cls.order != 32) continue;
    ASSERT_EQ(cls.normalizer.order(), 192);
    auto r = robinson_double_coset_bound(s.G, cls.normalizer, 2);
    EXPECT_EQ(r.double_cosets, 11u);
    EXPECT_EQ(r.coprime, 0u);
    ++n192;
  }
  EXPECT_EQ(n192, 2);
  auto r = robinson_double_coset_bound(s.G, sylow(s.G, 2).group, 2, 2);
  EXPECT_EQ(r.double_cosets, 44u);
  EXPECT_EQ(r.trivial, 12u);
  EXPECT_EQ(r.coprime, 12u);
  EXPECT_EQ(r.statement, "2m² ≤ 12");
  EXPECT_EQ(r.max_multiplicity, 2u);
}

TEST(Landrock, VacuousCases) {
  auto S3 = Group::symmetric(3);
  auto r = landrock_test(ClassData::compute(S3), 3);
  EXPECT_TRUE(r.vacuous);
  EXPECT_TRUE(r.projective_free);
  auto C4 = Group::build({Perm::from_cycles("(1,2,3,4)", 4)}, 4);
  EXPECT_TRUE(landrock_test(ClassData::compute(C4), 2).vacuous);
}

TEST(Landrock, M12AtTwo) {
  auto s = load("M12");
  auto r = landrock_test(s.cd, 2);
  EXPECT_FALSE(r.projective_free);
  EXPECT_EQ(r.trivial_cosets, 12u);
  bool found = false;
  for (const auto& c : r.counts) {
    // Conjugation preserves both the section and the double coset.
    if (s.cd[c.section].element_order == 11 && c.orbits == 5) found = true;
  }
  EXPECT_TRUE(found);
  // Left multiplication is free on these cosets, so it never detects anything.
  auto left = landrock_test(s.cd, 2, LandrockAction::kLeftMultiplication);
  EXPECT_TRUE(left.projective_free);
}

TEST(VertexReport, M12BensonAtTwo) {
  auto s = load("M12");
  auto K = complex_of(s.cd, 2, CollectionKind::kBenson);
  auto rows = vertex_report(K, s.cd);
  bool found = false;
  for (const auto& r : rows) {
    if (r.certificate.level >= CertificateLevel::kFpAcyclic) {
      EXPECT_TRUE(r.excluded);
    }
    // Noncentral 2^2: three contractible components.
    if (r.order == 4 && r.summary.components == 3) {
      EXPECT_FALSE(r.excluded);
      for (auto l : r.component_levels) EXPECT_GE(static_cast<int>(l), static_cast<int>(CertificateLevel::kCollapsible));
      EXPECT_EQ(r.conclusion, "candidate vertex: fixed set is homotopy equivalent to 3 points");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}
