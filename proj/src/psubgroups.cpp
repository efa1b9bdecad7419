#include "sgc/psubgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgc/errors.hpp"

namespace sgc {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= 1ULL << (i & 63); }

struct Fingerprint {
  std::uint64_t order, exponent, center, derived;
  std::vector<std::uint32_t> counts;
  auto operator<=>(const Fingerprint&) const = default;
};

}  // namespace

SubgroupKey PSubgroupLattice::key(std::size_t sub) const {
  SubgroupKey k;
  for (auto m : subgroups[sub].members) k.push_back(ranks[m]);
  return k;
}

SmallSubgroup PSubgroupLattice::small(std::size_t sub) const {
  SmallSubgroup Q;
  for (auto m : subgroups[sub].members) Q.elements.push_back(elements[m]);
  Q.key = key(sub);
  Q.generators = canonical_generators(G, Q.elements);
  return Q;
}

bool PSubgroupLattice::contains(std::size_t a, std::size_t b) const {
  const Bits &x = subgroups[a].bits, &y = subgroups[b].bits;
  for (std::size_t w = 0; w < x.size(); ++w)
    if ((y[w] & ~x[w]) != 0) return false;
  return true;
}

std::optional<std::size_t> PSubgroupLattice::find(const SubgroupKey& k) const {
  auto it = by_key.find(k);
  if (it == by_key.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PSubgroupLattice::element_index(std::uint64_t rank) const {
  auto it = by_rank.find(rank);
  if (it == by_rank.end()) return std::nullopt;
  return it->second;
}

PSubgroupLattice p_subgroup_classes(const Group& G, std::uint64_t p, const Context& ctx, const ClassData* cd) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  PSubgroupLattice L;
  L.G = G;
  L.p = p;
  BigInt sp = p_part(G.order(), p);
  if (sp == 1) {
    L.sylow = Group::build({}, G.degree());
    L.elements = {G.identity()};
    L.ranks = {G.rank(G.identity())};
    return L;
  }
  if (sp > ctx.bounds.max_sylow_order)
    throw ResourceError("Sylow " + std::to_string(p) + "-subgroup of order " + sp.get_str() + " exceeds bound sylow=" +
                        std::to_string(ctx.bounds.max_sylow_order));
  L.sylow = sylow(G, p, ctx).group;
  {
    std::vector<std::pair<std::uint64_t, Perm>> tmp;
    for (Perm& x : L.sylow.elements(ctx.bounds)) tmp.emplace_back(G.rank(x), std::move(x));
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [r, x] : tmp) {
      L.by_rank.emplace(r, static_cast<std::uint16_t>(L.ranks.size()));
      L.ranks.push_back(r);
      L.elements.push_back(std::move(x));
    }
  }
  const std::size_t n = L.elements.size();
  const std::size_t words = (n + 63) / 64;
  L.mult.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) L.mult[i * n + j] = L.by_rank.at(G.rank(L.elements[i] * L.elements[j]));
  const std::uint16_t e = L.by_rank.at(G.rank(G.identity()));
  std::vector<std::uint16_t> inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (L.mult[i * n + j] == e) inv[i] = static_cast<std::uint16_t>(j);
  auto pow_idx = [&](std::uint16_t x, std::uint64_t k) {
    std::uint16_t r = e;
    for (std::uint64_t i = 0; i < k; ++i) r = L.mult[r * n + x];
    return r;
  };

  // Layers: every subgroup of a p-group is <U, x> with U of index p, x normalizing U, x^p in U.
  std::vector<Bits> all;
  std::vector<Bits> layer;
  {
    Bits triv(words, 0);
    set(triv, e);
    layer.push_back(triv);
  }
  while (!layer.empty()) {
    std::set<Bits> next;
    for (const Bits& U : layer) {
      std::vector<std::uint16_t> um;
      for (std::size_t i = 0; i < n; ++i)
        if (test(U, i)) um.push_back(static_cast<std::uint16_t>(i));
      for (std::size_t x = 0; x < n; ++x) {
        if (test(U, x) || !test(U, pow_idx(static_cast<std::uint16_t>(x), p))) continue;
        bool normalizes = true;
        for (auto u : um)
          if (!test(U, L.mult[L.mult[inv[x] * n + u] * n + x])) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        Bits V = U;
        std::uint16_t xi = e;
        for (std::uint64_t k = 1; k < p; ++k) {
          xi = L.mult[xi * n + x];
          for (auto u : um) set(V, L.mult[u * n + xi]);
        }
        next.insert(std::move(V));
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(all.end(), layer.begin(), layer.end());
  }

  for (Bits& b : all) {
    PSubgroupLattice::Sub s;
    for (std::size_t i = 0; i < n; ++i)
      if (test(b, i)) s.members.push_back(static_cast<std::uint16_t>(i));
    s.bits = std::move(b);
    L.subgroups.push_back(std::move(s));
  }
  std::sort(L.subgroups.begin(), L.subgroups.end(), [](const auto& a, const auto& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;  // member indices follow rank order, so this is key order
  });
  for (std::size_t i = 0; i < L.subgroups.size(); ++i) L.by_key.emplace(L.key(i), i);

  auto fingerprint = [&](const PSubgroupLattice::Sub& s) {
    Fingerprint f{s.members.size(), 1, 0, 0, {}};
    for (auto x : s.members) {
      std::uint64_t o = 1;
      for (std::uint16_t y = x; y != e; y = L.mult[y * n + x]) ++o;
      f.exponent = std::max(f.exponent, o);
      bool central = true;
      for (auto y : s.members)
        if (L.mult[x * n + y] != L.mult[y * n + x]) {
          central = false;
          break;
        }
      f.center += central;
    }
    std::set<std::uint16_t> derived{e};
    std::vector<std::uint16_t> frontier;
    for (auto x : s.members)
      for (auto y : s.members) {
        std::uint16_t c = L.mult[L.mult[L.mult[inv[x] * n + inv[y]] * n + x] * n + y];
        if (derived.insert(c).second) frontier.push_back(c);
      }
    std::vector<std::uint16_t> gens(derived.begin(), derived.end());
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (auto g : gens) {
        std::uint16_t c = L.mult[frontier[i] * n + g];
        if (derived.insert(c).second) frontier.push_back(c);
      }
    f.derived = derived.size();
    if (cd) {
      f.counts.assign(cd->size(), 0);
      for (auto x : s.members) ++f.counts[cd->class_of_rank(L.ranks[x])];
    }
    return f;
  };

  std::map<Fingerprint, std::vector<std::size_t>> groups;
  std::vector<Fingerprint> prints;
  for (std::size_t i = 0; i < L.subgroups.size(); ++i) {
    prints.push_back(fingerprint(L.subgroups[i]));
    groups[prints.back()].push_back(i);
  }
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  for (auto& s : L.subgroups) s.cls = kUnassigned;
  Rng rng = ctx.rng(0x9C);
  // Process subgroups in (order, key) order so class numbering is deterministic.
  for (std::size_t i = 0; i < L.subgroups.size(); ++i) {
    if (L.subgroups[i].cls != kUnassigned) continue;
    SmallSubgroup Q = L.small(i);
    auto key_of = [&](const Perm& u) { return conjugate_key(G, Q.elements, u); };
    auto orb = enumerate_orbit<SubgroupKey, KeyHash>(G, key_of, ctx.bounds.max_orbit);
    const std::size_t c = L.classes.size();
    for (std::size_t j : groups[prints[i]]) {
      if (L.subgroups[j].cls != kUnassigned) continue;
      const Perm* r = orb.rep_of(L.key(j));
      if (!r) continue;
      L.subgroups[j].cls = c;
      L.subgroups[j].to_rep = r->inverse();
    }
    PSubgroupClass pc;
    pc.rep_sub = i;
    pc.normalizer = orbit_stabilizer(G, orb, key_of, rng, Q.generators);
    pc.orbit_size = BigInt(static_cast<unsigned long>(orb.size()));
    const Fingerprint& f = prints[i];
    pc.order = f.order;
    pc.exponent = f.exponent;
    pc.center_order = f.center;
    pc.derived_order = f.derived;
    pc.elementary_abelian = f.center == f.order && f.exponent == p;
    pc.class_counts = f.counts;
    pc.rep = std::move(Q);
    L.classes.push_back(std::move(pc));
  }
  return L;
}

}  // namespace sgc
