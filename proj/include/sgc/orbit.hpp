#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgc/errors.hpp"
#include "sgc/group.hpp"

namespace sgc {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (std::uint64_t x : v) {
      h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using SubgroupKey = std::vector<std::uint64_t>;

// Orbit of a root object under right action; reps[i] carries the root to keys[i].
template <class Key, class Hash = std::hash<Key>>
struct Orbit {
  std::vector<Key> keys;
  std::vector<Perm> reps;
  std::unordered_map<Key, std::uint32_t, Hash> index;

  std::size_t size() const { return keys.size(); }
  const Perm* rep_of(const Key& k) const {
    auto it = index.find(k);
    return it == index.end() ? nullptr : &reps[it->second];
  }
  // Position of the smallest key, used for canonical conjugates.
  std::size_t min_position() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < keys.size(); ++i)
      if (keys[i] < keys[best]) best = i;
    return best;
  }
};

// key_of(u) must return the key of root^u for any u in the acting group.
template <class Key, class Hash = std::hash<Key>, class KeyOf>
Orbit<Key, Hash> enumerate_orbit(const Group& acting, KeyOf&& key_of, std::size_t bound) {
  Orbit<Key, Hash> o;
  Perm id = acting.identity();
  Key k0 = key_of(id);
  o.index.emplace(k0, 0);
  o.keys.push_back(std::move(k0));
  o.reps.push_back(std::move(id));
  for (std::size_t i = 0; i < o.keys.size(); ++i) {
    for (const Perm& s : acting.generators()) {
      Perm v = o.reps[i] * s;
      Key k = key_of(v);
      if (o.index.find(k) != o.index.end()) continue;
      if (o.keys.size() >= bound)
        throw ResourceError("orbit exceeds bound orbit=" + std::to_string(bound));
      o.index.emplace(k, static_cast<std::uint32_t>(o.keys.size()));
      o.keys.push_back(std::move(k));
      o.reps.push_back(std::move(v));
    }
  }
  return o;
}

// Stabilizer of the root: random g times the inverse orbit representative of root^g,
// accumulated until the order reaches |acting| / |orbit|.
template <class Key, class Hash, class KeyOf>
Group orbit_stabilizer(const Group& acting, const Orbit<Key, Hash>& orb, KeyOf&& key_of, Rng& rng,
                       std::vector<Perm> known = {}) {
  BigInt target = acting.order() / static_cast<unsigned long>(orb.size());
  StabChain chain(acting.degree());
  std::vector<Perm> gens;
  for (Perm& k : known) {
    if (!chain.contains(k)) {
      chain.add_generator(k);
      gens.push_back(std::move(k));
    }
  }
  std::size_t attempts = 0;
  while (chain.order() < target) {
    Perm g = acting.random(rng);
    const Perm* u = orb.rep_of(key_of(g));
    if (!u) throw InternalError("orbit is not closed under the acting group");
    Perm h = g * u->inverse();
    if (!chain.contains(h)) {
      chain.add_generator(h);
      gens.push_back(std::move(h));
    }
    if (++attempts > 100000) throw InternalError("stabilizer search did not converge");
  }
  if (chain.order() != target) throw InternalError("stabilizer order exceeds orbit-stabilizer bound");
  return Group::build(std::move(gens), acting.degree());
}

}  // namespace sgc
