#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sgc/classes.hpp"
#include "sgc/subgroups.hpp"

namespace sgc {

// One G-class of nontrivial p-subgroups, represented inside the fixed Sylow subgroup.
struct PSubgroupClass {
  std::size_t rep_sub = 0;  // index into PSubgroupLattice::subgroups (least key in the class)
  SmallSubgroup rep;
  Group normalizer;
  BigInt orbit_size;  // |G : N_G(rep)|
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  bool elementary_abelian = false;
  std::vector<std::uint32_t> class_counts;  // elements per G-class, when class data was supplied
};

// All subgroups of a Sylow p-subgroup S, grouped into G-classes.
struct PSubgroupLattice {
  struct Sub {
    std::vector<std::uint64_t> bits;   // over S's element indices
    std::vector<std::uint16_t> members;
    std::size_t cls = 0;
    Perm to_rep;  // this^to_rep = classes[cls].rep
  };

  Group G;
  std::uint64_t p = 0;
  Group sylow;
  std::vector<Perm> elements;        // S, sorted by rank in G
  std::vector<std::uint64_t> ranks;  // ranks in G, ascending
  std::vector<std::uint16_t> mult;   // |S| x |S| product table
  std::vector<Sub> subgroups;        // nontrivial subgroups of S, by (order, key)
  std::vector<PSubgroupClass> classes;

  std::size_t sylow_order() const { return elements.size(); }
  SubgroupKey key(std::size_t sub) const;
  SmallSubgroup small(std::size_t sub) const;
  // b is a subgroup of a
  bool contains(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find(const SubgroupKey& key) const;
  std::optional<std::size_t> element_index(std::uint64_t rank) const;

  std::unordered_map<SubgroupKey, std::size_t, KeyHash> by_key;
  std::unordered_map<std::uint64_t, std::uint16_t> by_rank;
};

// Nontrivial p-subgroups up to G-conjugacy. cd (optional) sharpens the invariant fingerprint.
PSubgroupLattice p_subgroup_classes(const Group& G, std::uint64_t p, const Context& ctx = {}, const ClassData* cd = nullptr);

}  // namespace sgc
