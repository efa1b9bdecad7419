#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sgc/context.hpp"
#include "sgc/numtheory.hpp"
#include "sgc/perm.hpp"
#include "sgc/stabchain.hpp"

namespace sgc {

// Immutable permutation group handle; copies share the stabilizer chain.
class Group {
 public:
  Group();  // trivial group of degree 0
  // build_group: throws InputError for generators of the wrong degree.
  static Group build(std::vector<Perm> generators, std::size_t degree);
  static Group symmetric(std::size_t n);
  static Group alternating(std::size_t n);

  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  const StabChain& chain() const;
  BigInt order() const;
  std::uint64_t order_u64() const;
  bool contains(const Perm& g) const;
  bool contains(const Group& h) const;  // every generator of h is a member
  std::uint64_t rank(const Perm& g) const { return chain().rank(g); }
  Perm element(std::uint64_t r) const { return chain().unrank(r); }
  Perm random(Rng& rng) const { return chain().random(rng); }
  Perm identity() const { return Perm(degree()); }
  bool is_trivial() const { return order() == 1; }
  // All elements, in rank order (bounded by max_subgroup_elements).
  std::vector<Perm> elements(const Bounds& b = {}) const;
  // Sorted ranks of this group's elements inside universe.
  std::vector<std::uint64_t> element_key(const Group& universe, const Bounds& b = {}) const;
  std::string describe() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// A subgroup together with the ambient group it lives in.
struct SubgroupRef {
  Group group;
  Group parent;
  BigInt order() const { return group.order(); }
  BigInt index() const { return parent.order() / group.order(); }
};

// Subgroup generated by gens (asserted to lie in parent).
SubgroupRef make_subgroup(const Group& parent, std::vector<Perm> gens);

}  // namespace sgc
