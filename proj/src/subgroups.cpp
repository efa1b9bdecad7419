#include "sgc/subgroups.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <numeric>
#include <unordered_set>

#include "sgc/errors.hpp"

namespace sgc {

bool SmallSubgroup::contains_rank(std::uint64_t r) const { return std::binary_search(key.begin(), key.end(), r); }

Group SmallSubgroup::group() const {
  std::size_t n = elements.empty() ? 0 : elements.front().degree();
  return Group::build(generators, n);
}

std::uint64_t conjugate_rank(const Group& universe, const Perm& x, const Perm& u, const Perm& u_inv) {
  const StabChain& ch = universe.chain();
  std::vector<Point> img = ch.base();
  for (Point& b : img) b = u[x[u_inv[b]]];
  return ch.rank_from_base_images(img);
}

SubgroupKey conjugate_key(const Group& universe, const std::vector<Perm>& elements, const Perm& u) {
  Perm u_inv = u.inverse();
  SubgroupKey key;
  key.reserve(elements.size());
  for (const Perm& x : elements) key.push_back(conjugate_rank(universe, x, u, u_inv));
  std::sort(key.begin(), key.end());
  return key;
}

namespace {

// Ranks of the subgroup generated by gens (BFS closure).
std::vector<Perm> closure(const Group& universe, const std::vector<Perm>& gens, std::size_t degree) {
  std::vector<Perm> elts{Perm(degree)};
  std::unordered_set<std::uint64_t> seen{universe.rank(elts[0])};
  for (std::size_t i = 0; i < elts.size(); ++i) {
    for (const Perm& s : gens) {
      Perm y = elts[i] * s;
      if (seen.insert(universe.rank(y)).second) elts.push_back(std::move(y));
    }
  }
  return elts;
}

}  // namespace

std::vector<Perm> canonical_generators(const Group& universe, const std::vector<Perm>& elements) {
  if (elements.empty()) return {};
  std::vector<std::pair<std::uint64_t, const Perm*>> sorted;
  for (const Perm& x : elements) sorted.emplace_back(universe.rank(x), &x);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> gens;
  std::unordered_set<std::uint64_t> span{universe.rank(Perm(elements.front().degree()))};
  for (auto& [r, x] : sorted) {
    if (span.count(r)) continue;
    gens.push_back(*x);
    span.clear();
    for (const Perm& y : closure(universe, gens, x->degree())) span.insert(universe.rank(y));
    if (span.size() == elements.size()) break;
  }
  return gens;
}

SmallSubgroup make_small(const Group& universe, const Group& sub, const Bounds& b) {
  SmallSubgroup Q;
  Q.elements = sub.elements(b);
  for (const Perm& x : Q.elements) Q.key.push_back(universe.rank(x));
  std::sort(Q.key.begin(), Q.key.end());
  Q.generators = canonical_generators(universe, Q.elements);
  return Q;
}

SmallSubgroup make_small(const Group& universe, std::vector<Perm> gens, const Bounds& b) {
  std::size_t n = universe.degree();
  std::vector<Perm> elts = closure(universe, gens, n);
  if (elts.size() > b.max_subgroup_elements)
    throw ResourceError("subgroup exceeds bound subgroup-elements=" + std::to_string(b.max_subgroup_elements));
  SmallSubgroup Q;
  Q.elements = std::move(elts);
  for (const Perm& x : Q.elements) Q.key.push_back(universe.rank(x));
  std::sort(Q.key.begin(), Q.key.end());
  Q.generators = canonical_generators(universe, Q.elements);
  return Q;
}

SmallSubgroup conjugate_small(const Group& universe, const SmallSubgroup& Q, const Perm& u) {
  SmallSubgroup R;
  for (const Perm& x : Q.elements) R.elements.push_back(x.conjugate(u));
  for (const Perm& x : R.elements) R.key.push_back(universe.rank(x));
  std::sort(R.key.begin(), R.key.end());
  R.generators = canonical_generators(universe, R.elements);
  return R;
}

namespace {

Group element_centralizer(const Group& acting, const Group& universe, const Perm& x, const Context& ctx) {
  auto key_of = [&](const Perm& u) { return conjugate_rank(universe, x, u, u.inverse()); };
  auto orb = enumerate_orbit<std::uint64_t>(acting, key_of, ctx.bounds.max_orbit);
  Rng rng = ctx.rng(0xC3);
  std::vector<Perm> known;
  if (acting.contains(x) && !x.is_identity()) known.push_back(x);
  return orbit_stabilizer(acting, orb, key_of, rng, std::move(known));
}

}  // namespace

SubgroupRef centralizer(const Group& G, const Perm& g, const Context& ctx) {
  if (!G.contains(g)) throw DomainError("element " + g.to_cycles() + " is not in the group");
  return SubgroupRef{element_centralizer(G, G, g, ctx), G};
}

SubgroupRef centralizer(const Group& G, const std::vector<Perm>& gens, const Context& ctx) {
  Group C = G;
  for (const Perm& g : gens) {
    if (!G.contains(g)) throw DomainError("element " + g.to_cycles() + " is not in the group");
    C = element_centralizer(C, G, g, ctx);
  }
  return SubgroupRef{C, G};
}

Orbit<SubgroupKey, KeyHash> subgroup_orbit(const Group& acting, const Group& universe, const SmallSubgroup& Q,
                                           const Bounds& b) {
  return enumerate_orbit<SubgroupKey, KeyHash>(
      acting, [&](const Perm& u) { return conjugate_key(universe, Q.elements, u); }, b.max_orbit);
}

Group normalizer_small(const Group& G, const SmallSubgroup& Q, const Context& ctx) {
  auto key_of = [&](const Perm& u) { return conjugate_key(G, Q.elements, u); };
  auto orb = enumerate_orbit<SubgroupKey, KeyHash>(G, key_of, ctx.bounds.max_orbit);
  Rng rng = ctx.rng(0x4E);
  return orbit_stabilizer(G, orb, key_of, rng, Q.generators);
}

SubgroupRef normalizer(const Group& G, const Group& H, const Context& ctx) {
  if (!G.contains(H)) throw DomainError("subgroup is not contained in the group");
  if (H.order() == G.order()) return SubgroupRef{G, G};
  SmallSubgroup Q = make_small(G, H, ctx.bounds);
  return SubgroupRef{normalizer_small(G, Q, ctx), G};
}

bool is_p_group(const BigInt& order, std::uint64_t p) { return p_part(order, p) == order; }

Perm p_part_of(const Perm& g, std::uint64_t p) {
  std::uint64_t n = g.order();
  std::uint64_t pa = p_part(n, p), m = n / pa;
  if (pa == 1) return Perm(g.degree());
  if (m == 1) return g;
  std::uint64_t u = m * invmod(m % pa, pa);
  return g.pow(static_cast<std::int64_t>(u % n));
}

Perm p_prime_part(const Perm& g, std::uint64_t p) {
  std::uint64_t n = g.order();
  std::uint64_t pa = p_part(n, p), m = n / pa;
  if (pa == 1) return g;
  if (m == 1) return Perm(g.degree());
  std::uint64_t u = pa * invmod(pa % m, m);
  return g.pow(static_cast<std::int64_t>(u % n));
}

namespace {

SmallSubgroup sylow_small(const Group& G, std::uint64_t p, const Context& ctx, bool canonical) {
  BigInt target = p_part(G.order(), p);
  if (target == 1) return make_small(G, std::vector<Perm>{}, ctx.bounds);
  if (target > ctx.bounds.max_subgroup_elements)
    throw ResourceError("Sylow subgroup of order " + target.get_str() + " exceeds bound subgroup-elements");
  Rng rng = ctx.rng(0x5F + p);
  Perm x;
  while (true) {
    Perm g = G.random(rng);
    if (g.order() % p == 0) {
      x = p_part_of(g, p);
      break;
    }
  }
  SmallSubgroup P = make_small(G, std::vector<Perm>{x}, ctx.bounds);
  while (P.order() < target) {
    Group N = normalizer_small(G, P, ctx);
    while (true) {
      Perm y = p_part_of(N.random(rng), p);
      if (y.is_identity() || P.contains_rank(G.rank(y))) continue;
      std::vector<Perm> gens = P.generators;
      gens.push_back(y);
      P = make_small(G, std::move(gens), ctx.bounds);
      break;
    }
  }
  if (!canonical) return P;
  auto orb = subgroup_orbit(G, G, P, ctx.bounds);
  return conjugate_small(G, P, orb.reps[orb.min_position()]);
}

}  // namespace

SubgroupRef sylow(const Group& G, std::uint64_t p, const Context& ctx) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  SmallSubgroup P = sylow_small(G, p, ctx, true);
  return SubgroupRef{Group::build(P.generators, G.degree()), G};
}

SubgroupRef p_core(const Group& H, std::uint64_t p, const Context& ctx) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  SmallSubgroup P = sylow_small(H, p, ctx, false);
  std::vector<Perm> cur = P.elements;
  bool changed = true;
  while (changed && cur.size() > 1) {
    changed = false;
    for (const Perm& h : H.generators()) {
      Perm hi = h.inverse();
      std::vector<std::uint64_t> own, conj;
      for (const Perm& x : cur) {
        own.push_back(H.rank(x));
        conj.push_back(conjugate_rank(H, x, h, hi));
      }
      std::sort(conj.begin(), conj.end());
      std::vector<Perm> next;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (std::binary_search(conj.begin(), conj.end(), own[i])) next.push_back(cur[i]);
      if (next.size() != cur.size()) {
        cur = std::move(next);
        changed = true;
      }
    }
  }
  return SubgroupRef{Group::build(canonical_generators(H, cur), H.degree()), H};
}

SubgroupRef center_omega1(const Group& Q, std::uint64_t p, const Context& ctx) {
  if (!is_p_group(Q.order(), p)) throw DomainError("center_omega1 needs a p-group");
  std::vector<Perm> z;
  for (const Perm& x : Q.elements(ctx.bounds)) {
    bool central = true;
    for (const Perm& g : Q.generators())
      if (!x.commutes_with(g)) {
        central = false;
        break;
      }
    if (central && x.pow(static_cast<std::int64_t>(p)).is_identity()) z.push_back(x);
  }
  return SubgroupRef{Group::build(canonical_generators(Q, z), Q.degree()), Q};
}

Perm canonical_right_coset_rep(const Group& H, const Perm& x) {
  const StabChain& ch = H.chain();
  Perm y = x;
  for (std::size_t l = 0; l < ch.length(); ++l) {
    const auto& orb = ch.orbit(l);
    Point best = orb[0];
    for (Point d : orb)
      if (y[d] < y[best]) best = d;
    y = ch.transversal(l, best) * y;
  }
  return y;
}

DoubleCosetDecomp double_cosets(const Group& G, const Group& H, const Group& K, const Context& ctx) {
  if (!G.contains(H) || !G.contains(K)) throw DomainError("subgroup not contained in the group");
  auto key_of = [&](const Perm& u) { return G.rank(canonical_right_coset_rep(H, u)); };
  auto orb = enumerate_orbit<std::uint64_t>(G, key_of, ctx.bounds.max_orbit);
  const std::size_t m = orb.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (const Perm& k : K.generators()) {
      std::size_t j = orb.index.at(key_of(orb.reps[i] * k));
      std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Components ordered by their least coset key; the identity coset's component first.
  std::map<std::size_t, std::pair<std::uint64_t, std::size_t>> comp;  // root -> (min key, count)
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, fresh] = comp.try_emplace(find(i), orb.keys[i], 0);
    it->second.first = std::min(it->second.first, orb.keys[i]);
    ++it->second.second;
  }
  std::size_t id_root = find(0);
  std::vector<std::tuple<int, std::uint64_t, std::size_t>> order;
  for (auto& [root, info] : comp) order.emplace_back(root == id_root ? 0 : 1, info.first, info.second);
  std::sort(order.begin(), order.end());
  bool same = H.order() == K.order() && H.contains(K);
  DoubleCosetDecomp dec{H, K, {}};
  BigInt hord = H.order();
  for (auto& [isnt_id, minkey, count] : order) {
    DoubleCoset dc;
    dc.representative = isnt_id ? G.element(minkey) : G.identity();
    dc.size = hord * static_cast<unsigned long>(count);
    if (same) dc.intersection = hord * hord / dc.size;
    dec.entries.push_back(std::move(dc));
  }
  return dec;
}

}  // namespace sgc
