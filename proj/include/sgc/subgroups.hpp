#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgc/classes.hpp"
#include "sgc/context.hpp"
#include "sgc/group.hpp"
#include "sgc/orbit.hpp"

namespace sgc {

// A subgroup small enough to hold all its elements; key = sorted ranks in the universe.
struct SmallSubgroup {
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  SubgroupKey key;

  std::uint64_t order() const { return elements.size(); }
  bool contains_rank(std::uint64_t r) const;
  Group group() const;
};

SmallSubgroup make_small(const Group& universe, const Group& sub, const Bounds& b = {});
SmallSubgroup make_small(const Group& universe, std::vector<Perm> gens, const Bounds& b = {});
// Conjugate by u, keeping canonical (greedy) generators.
SmallSubgroup conjugate_small(const Group& universe, const SmallSubgroup& Q, const Perm& u);
// Greedy generators: smallest-rank elements not in the span so far (deterministic).
std::vector<Perm> canonical_generators(const Group& universe, const std::vector<Perm>& elements);
// Key of Q^u computed from base images only.
SubgroupKey conjugate_key(const Group& universe, const std::vector<Perm>& elements, const Perm& u);
std::uint64_t conjugate_rank(const Group& universe, const Perm& x, const Perm& u, const Perm& u_inv);

SubgroupRef centralizer(const Group& G, const Perm& g, const Context& ctx = {});
// Centralizer of every element of gens.
SubgroupRef centralizer(const Group& G, const std::vector<Perm>& gens, const Context& ctx = {});
SubgroupRef normalizer(const Group& G, const Group& H, const Context& ctx = {});
Group normalizer_small(const Group& G, const SmallSubgroup& Q, const Context& ctx = {});
// Orbit of a small subgroup under conjugation by acting, keys ranked in universe.
Orbit<SubgroupKey, KeyHash> subgroup_orbit(const Group& acting, const Group& universe, const SmallSubgroup& Q,
                                           const Bounds& b);

SubgroupRef sylow(const Group& G, std::uint64_t p, const Context& ctx = {});
SubgroupRef p_core(const Group& H, std::uint64_t p, const Context& ctx = {});
SubgroupRef center_omega1(const Group& Q, std::uint64_t p, const Context& ctx = {});
Perm p_prime_part(const Perm& g, std::uint64_t p);
Perm p_part_of(const Perm& g, std::uint64_t p);
bool is_p_group(const BigInt& order, std::uint64_t p);

struct DoubleCoset {
  Perm representative;
  BigInt size;
  std::optional<BigInt> intersection;  // |H ∩ H^g| when H = K
};

struct DoubleCosetDecomp {
  Group H, K;
  std::vector<DoubleCoset> entries;  // entry 0 is HK
};

DoubleCosetDecomp double_cosets(const Group& G, const Group& H, const Group& K, const Context& ctx = {});
// Canonical element of the right coset Hx: least images of H's base points, level by level.
Perm canonical_right_coset_rep(const Group& H, const Perm& x);

}  // namespace sgc
