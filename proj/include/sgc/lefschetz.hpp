#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgc/blocks.hpp"
#include "sgc/chartable.hpp"
#include "sgc/complex.hpp"

namespace sgc {

// Reduced Lefschetz virtual character: sum over simplex orbits of (-1)^dim Ind_{G_s}(1), minus 1.
struct LefschetzCharacter {
  ClassFunction character;
  std::vector<BigInt> multiplicities;
  BigInt degree_from_counts;  // sum (-1)^dim |simplices of dim| - 1
  std::vector<std::pair<int, BigInt>> stabilizers;  // (dim, |G_s|) per simplex orbit
};

// Throws DependencyError without a table computed from the group, InternalError if the two degree
// computations disagree.
LefschetzCharacter lefschetz_character(const TablePtr& t, const OrderComplex& K, const Context& ctx = {});

struct EulerRow {
  std::size_t cls = 0;
  Cyclotomic value;
  BigInt reduced_euler;
  std::size_t fixed_vertices = 0;
};

// L(g) against the reduced Euler characteristic of the fixed set of each class representative.
// Throws ValidationError naming the first class that disagrees.
std::vector<EulerRow> euler_crosscheck(const LefschetzCharacter& L, std::shared_ptr<const OrderComplex> K,
                                       const Bounds& b = {});

struct BlockComponent {
  std::size_t block = 0;
  int defect = 0;
  std::vector<BigInt> multiplicities;  // full length, zero outside the block
  ClassFunction character;
  std::optional<std::size_t> p_singular_witness;  // class where the component does not vanish
};

struct ProjectivityReport {
  std::uint64_t p = 0;
  std::vector<BlockComponent> components;  // nonzero components only, in block order
};

// f must be a virtual character of the table B was computed from.
ProjectivityReport block_distribution(const ClassFunction& f, const BlockPartition& B);
inline ProjectivityReport block_distribution(const LefschetzCharacter& L, const BlockPartition& B) {
  return block_distribution(L.character, B);
}

struct ProjectivePartResult {
  bool vanishes = true;
  std::optional<std::size_t> witness;
};

// Characters of projective modules vanish on p-singular classes.
ProjectivePartResult projective_part_test(const ClassFunction& f, std::uint64_t p);

// Simple module dimensions at least |H|_p.
std::vector<std::uint64_t> robinson_webb_screen(const BigInt& subgroup_order, std::uint64_t p,
                                                const std::vector<std::uint64_t>& degrees);

struct DoubleCosetBound {
  std::size_t double_cosets = 0;
  std::size_t coprime = 0;  // d: cosets HgH with p not dividing |H ∩ H^g|
  std::size_t trivial = 0;  // cosets with H ∩ H^g = 1
  std::optional<std::uint64_t> cartan;
  std::optional<std::uint64_t> max_multiplicity;
  std::string statement;
};

DoubleCosetBound robinson_double_coset_bound(const Group& G, const Group& H, std::uint64_t p,
                                             std::optional<std::uint64_t> cartan = std::nullopt,
                                             const Context& ctx = {});

enum class LandrockAction { kConjugation, kLeftMultiplication };
std::string to_string(LandrockAction a);

struct LandrockCount {
  Perm coset_rep;
  std::size_t section = 0;  // p-regular class of G
  std::size_t elements = 0;  // |C ∩ PgP|
  std::size_t orbits = 0;
};

struct LandrockReport {
  std::uint64_t p = 0;
  LandrockAction action = LandrockAction::kConjugation;
  bool vacuous = false;  // no double coset with trivial intersection
  bool projective_free = true;
  std::size_t trivial_cosets = 0;
  std::vector<LandrockCount> counts;  // nonempty intersections only
  std::optional<LandrockCount> witness;  // first count not divisible by p
};

// P a Sylow p-subgroup. Under left multiplication the count is the number of cosets Px (x in PgP)
// meeting C, since P ∩ P^g = 1 makes the action free.
LandrockReport landrock_test(const ClassData& cd, std::uint64_t p, LandrockAction action = LandrockAction::kConjugation,
                             const Context& ctx = {});

struct VertexRow {
  std::size_t lattice_class = 0;
  std::uint64_t order = 0;
  BigInt normalizer_order;
  std::string description;  // order-p elements by G-class
  std::size_t fixed_vertices = 0;
  ComponentSummary summary;
  Certificate certificate;
  std::vector<CertificateLevel> component_levels;
  bool excluded = false;
  std::string conclusion;
};

// Every class of purely noncentral p-subgroups (no p-central element), with the fixed set of Q.
std::vector<VertexRow> vertex_report(std::shared_ptr<const OrderComplex> K, const ClassData& cd, const Context& ctx = {});

}  // namespace sgc
