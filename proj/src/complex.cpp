#include "sgc/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "sgc/errors.hpp"

namespace sgc {

namespace {

using Simplex = std::vector<std::uint32_t>;

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::unordered_map<Simplex, std::uint32_t, VecHash>> simplex_index(const SimplicialComplex& K) {
  std::vector<std::unordered_map<Simplex, std::uint32_t, VecHash>> idx(K.simplices.size());
  for (std::size_t d = 0; d < K.simplices.size(); ++d)
    for (std::size_t i = 0; i < K.simplices[d].size(); ++i) idx[d].emplace(K.simplices[d][i], static_cast<std::uint32_t>(i));
  return idx;
}

// Rank of a sparse matrix given by columns, by column reduction with lowest-row pivots.
template <class T, class Ops>
std::size_t column_rank(std::vector<std::vector<std::pair<std::uint32_t, T>>> cols, const Ops& ops) {
  std::unordered_map<std::uint32_t, std::size_t> pivot_of;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    while (!col.empty()) {
      auto it = pivot_of.find(col.back().first);
      if (it == pivot_of.end()) break;
      const auto& piv = cols[it->second];
      T factor = ops.div(col.back().second, piv.back().second);
      std::vector<std::pair<std::uint32_t, T>> out;
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          out.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
          out.emplace_back(piv[j].first, ops.neg(ops.mul(factor, piv[j].second)));
          ++j;
        } else {
          T v = ops.sub(col[i].second, ops.mul(factor, piv[j].second));
          if (!ops.is_zero(v)) out.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col = std::move(out);
    }
    if (!col.empty()) {
      pivot_of.emplace(col.back().first, c);
      ++rank;
    }
  }
  return rank;
}

struct ModPOps {
  std::uint64_t p;
  std::uint64_t from_int(long v) const { return static_cast<std::uint64_t>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)); }
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mulmod(a, invmod(b, p), p); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, p); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  bool is_zero(std::uint64_t a) const { return a == 0; }
};

struct RationalOps {
  Rational from_int(long v) const { return Rational(v); }
  Rational div(const Rational& a, const Rational& b) const { return a / b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  bool is_zero(const Rational& a) const { return a == 0; }
};

template <class T, class Ops>
std::size_t boundary_rank(const SimplicialComplex& K, std::size_t k, const std::unordered_map<Simplex, std::uint32_t, VecHash>& faces,
                          const Ops& ops) {
  std::vector<std::vector<std::pair<std::uint32_t, T>>> cols;
  cols.reserve(K.count(k));
  for (const Simplex& s : K.simplices[k]) {
    std::vector<std::pair<std::uint32_t, T>> col;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      col.emplace_back(faces.at(f), ops.from_int(i % 2 ? -1 : 1));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cols.push_back(std::move(col));
  }
  return column_rank<T>(std::move(cols), ops);
}

}  // namespace

std::size_t SimplicialComplex::total() const {
  std::size_t t = 0;
  for (const auto& s : simplices) t += s.size();
  return t;
}

bool SimplicialComplex::face_closed() const {
  auto idx = simplex_index(*this);
  for (std::size_t d = 1; d < simplices.size(); ++d)
    for (const Simplex& s : simplices[d])
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) f.push_back(s[j]);
        if (!idx[d - 1].count(f)) return false;
      }
  return true;
}

SimplicialComplex chain_complex(std::size_t n, const std::vector<std::vector<std::uint32_t>>& above, const Bounds& b) {
  SimplicialComplex K;
  K.num_vertices = n;
  std::size_t total = 0;
  std::vector<std::uint32_t> chain;
  std::function<void()> extend = [&]() {
    Simplex s = chain;
    std::sort(s.begin(), s.end());
    if (K.simplices.size() < s.size()) K.simplices.resize(s.size());
    K.simplices[s.size() - 1].push_back(std::move(s));
    if (++total > b.max_simplices)
      throw ResourceError("order complex exceeds bound simplices=" + std::to_string(b.max_simplices) +
                          "; use orbit-level mode for Lefschetz characters");
    for (std::uint32_t w : above[chain.back()]) {
      chain.push_back(w);
      extend();
      chain.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    chain = {v};
    extend();
  }
  for (auto& d : K.simplices) std::sort(d.begin(), d.end());
  return K;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<std::uint32_t>& keep) {
  std::vector<std::int64_t> pos(K.num_vertices, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos.at(keep[i]) = static_cast<std::int64_t>(i);
  SimplicialComplex out;
  out.num_vertices = keep.size();
  for (std::size_t d = 0; d < K.simplices.size(); ++d) {
    std::vector<Simplex> kept;
    for (const Simplex& s : K.simplices[d]) {
      Simplex t;
      for (auto v : s) {
        if (pos[v] < 0) break;
        t.push_back(static_cast<std::uint32_t>(pos[v]));
      }
      if (t.size() == s.size()) kept.push_back(std::move(t));
    }
    if (kept.empty()) break;
    std::sort(kept.begin(), kept.end());
    out.simplices.push_back(std::move(kept));
  }
  return out;
}

ComponentSummary components_and_euler(const SimplicialComplex& K) {
  ComponentSummary s;
  UnionFind uf(K.num_vertices);
  if (K.simplices.size() > 1)
    for (const Simplex& e : K.simplices[1]) uf.unite(e[0], e[1]);
  std::map<std::uint32_t, std::size_t> comp;
  for (std::uint32_t v = 0; v < K.num_vertices; ++v) comp.try_emplace(uf.find(v), comp.size());
  s.components = comp.size();
  s.per_component.assign(s.components, std::vector<std::size_t>(K.simplices.size(), 0));
  s.euler = 0;
  for (std::size_t d = 0; d < K.simplices.size(); ++d) {
    for (const Simplex& x : K.simplices[d]) ++s.per_component[comp[uf.find(x[0])]][d];
    BigInt c(static_cast<unsigned long>(K.simplices[d].size()));
    s.euler += d % 2 ? BigInt(-c) : c;
  }
  s.reduced_euler = s.euler - 1;
  return s;
}

std::vector<SimplicialComplex> component_complexes(const SimplicialComplex& K) {
  UnionFind uf(K.num_vertices);
  if (K.simplices.size() > 1)
    for (const Simplex& e : K.simplices[1]) uf.unite(e[0], e[1]);
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t v = 0; v < K.num_vertices; ++v) groups[uf.find(v)].push_back(v);
  std::vector<SimplicialComplex> out;
  for (auto& [r, vs] : groups) out.push_back(induced_subcomplex(K, vs));
  return out;
}

std::vector<std::size_t> homology_ranks(const SimplicialComplex& K, std::uint64_t p, const Bounds& b) {
  if (p != 0 && !is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (K.total() > b.max_homology_cells)
    throw ResourceError("complex with " + std::to_string(K.total()) + " simplices exceeds bound homology=" +
                        std::to_string(b.max_homology_cells));
  if (K.num_vertices == 0) return {};
  auto idx = simplex_index(K);
  const std::size_t top = K.simplices.size();
  std::vector<std::size_t> rank(top + 1, 0);
  rank[0] = 1;  // augmentation
  for (std::size_t k = 1; k < top; ++k)
    rank[k] = p == 0 ? boundary_rank<Rational>(K, k, idx[k - 1], RationalOps{}) : boundary_rank<std::uint64_t>(K, k, idx[k - 1], ModPOps{p});
  std::vector<std::size_t> betti(top);
  for (std::size_t k = 0; k < top; ++k) betti[k] = K.count(k) - rank[k] - rank[k + 1];
  return betti;
}

std::string to_string(CertificateLevel l) {
  switch (l) {
    case CertificateLevel::kCone: return "CONE";
    case CertificateLevel::kCollapsible: return "COLLAPSIBLE";
    case CertificateLevel::kFpAcyclic: return "FP-ACYCLIC";
    case CertificateLevel::kNone: return "NONE";
  }
  return "?";
}

std::optional<std::uint32_t> cone_vertex(const SimplicialComplex& K) {
  if (K.num_vertices == 0) return std::nullopt;
  auto idx = simplex_index(K);
  for (std::uint32_t v = 0; v < K.num_vertices; ++v) {
    bool ok = true;
    for (std::size_t d = 0; d < K.simplices.size() && ok; ++d)
      for (const Simplex& s : K.simplices[d]) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        if (d + 1 >= K.simplices.size()) {
          ok = false;
          break;
        }
        Simplex t = s;
        t.insert(std::upper_bound(t.begin(), t.end(), v), v);
        if (!idx[d + 1].count(t)) {
          ok = false;
          break;
        }
      }
    if (ok) return v;
  }
  return std::nullopt;
}

bool greedy_collapse(const SimplicialComplex& K, std::size_t* steps) {
  if (K.num_vertices == 0) return false;
  auto idx = simplex_index(K);
  const std::size_t top = K.simplices.size();
  // cofaces[d][i]: indices of (d+1)-simplices containing simplex i of dimension d.
  std::vector<std::vector<std::vector<std::uint32_t>>> cofaces(top);
  std::vector<std::vector<char>> alive(top);
  std::vector<std::vector<std::uint32_t>> alive_cofaces(top);
  for (std::size_t d = 0; d < top; ++d) {
    cofaces[d].resize(K.count(d));
    alive[d].assign(K.count(d), 1);
    alive_cofaces[d].assign(K.count(d), 0);
  }
  for (std::size_t d = 1; d < top; ++d)
    for (std::uint32_t i = 0; i < K.count(d); ++i) {
      const Simplex& s = K.simplices[d][i];
      for (std::size_t r = 0; r < s.size(); ++r) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != r) f.push_back(s[j]);
        std::uint32_t fi = idx[d - 1].at(f);
        cofaces[d - 1][fi].push_back(i);
        ++alive_cofaces[d - 1][fi];
      }
    }
  std::size_t remaining = K.total(), n = 0;
  auto remove = [&](std::size_t d, std::uint32_t i) {
    alive[d][i] = 0;
    --remaining;
    if (d == 0) return;
    const Simplex& s = K.simplices[d][i];
    for (std::size_t r = 0; r < s.size(); ++r) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != r) f.push_back(s[j]);
      --alive_cofaces[d - 1][idx[d - 1].at(f)];
    }
  };
  for (bool progress = true; progress && remaining > 1;) {
    progress = false;
    for (std::size_t d = 0; d + 1 < top; ++d)
      for (std::uint32_t i = 0; i < K.count(d); ++i) {
        if (!alive[d][i] || alive_cofaces[d][i] != 1) continue;
        std::uint32_t sigma = 0;
        for (auto c : cofaces[d][i])
          if (alive[d + 1][c]) sigma = c;
        if (alive_cofaces[d + 1][sigma] != 0) continue;
        remove(d + 1, sigma);
        remove(d, i);
        ++n;
        progress = true;
      }
  }
  if (steps) *steps = n;
  return remaining == 1;
}

Certificate contractibility_certificate(const SimplicialComplex& K, std::uint64_t p, const Bounds& b) {
  Certificate c;
  c.betti = homology_ranks(K, p, b);
  c.acyclic = K.num_vertices > 0 && std::all_of(c.betti.begin(), c.betti.end(), [](std::size_t x) { return x == 0; });
  if (auto v = cone_vertex(K)) {
    c.cone = true;
    // A cone collapses onto its apex: pair each simplex missing v with its join with v, top dimension first.
    c.collapsible = true;
    c.witness = "cone vertex " + std::to_string(*v);
  } else {
    std::size_t steps = 0;
    c.collapsible = greedy_collapse(K, &steps);
    c.witness = c.collapsible ? "greedy collapse in " + std::to_string(steps) + " elementary steps" : "";
  }
  if (c.collapsible && !c.acyclic) throw InternalError("collapsible complex with nonzero reduced homology");
  c.level = c.cone ? CertificateLevel::kCone
                   : c.collapsible ? CertificateLevel::kCollapsible
                                   : c.acyclic ? CertificateLevel::kFpAcyclic : CertificateLevel::kNone;
  if (c.level == CertificateLevel::kFpAcyclic) c.witness = "reduced homology over F_" + std::to_string(p) + " vanishes";
  if (c.level == CertificateLevel::kNone) {
    c.witness = "reduced Betti numbers";
    for (auto x : c.betti) c.witness += " " + std::to_string(x);
    if (K.num_vertices == 0) c.witness = "empty complex";
  }
  return c;
}

std::vector<Perm> OrderComplex::vertex_elements(std::uint32_t v) const {
  const Vertex& x = vertices.at(v);
  std::vector<Perm> out;
  for (const Perm& e : collection->lattice->classes[x.cls].rep.elements) out.push_back(e.conjugate(x.from_rep));
  return out;
}

bool OrderComplex::normalizes(std::uint32_t v, const Perm& g) const {
  const Vertex& x = vertices.at(v);
  // g normalizes R^u iff u g u^-1 normalizes R.
  return collection->lattice->classes[x.cls].normalizer.contains(x.from_rep * g * x.from_rep.inverse());
}

OrderComplex order_complex(std::shared_ptr<const Collection> c, ComplexMode mode, const Context& ctx) {
  OrderComplex K;
  K.collection = c;
  K.mode = mode;
  const PSubgroupLattice& L = *c->lattice;
  const Group& G = L.G;
  // Collection members of the Sylow lattice below each class representative.
  std::map<std::size_t, std::vector<std::size_t>> below;
  std::map<std::size_t, std::vector<Perm>> sub_elements;
  for (std::size_t m : c->members) {
    const std::size_t t = L.classes[m].rep_sub;
    for (std::size_t s = 0; s < L.subgroups.size(); ++s)
      if (s != t && c->contains_class(L.subgroups[s].cls) && L.contains(t, s)) {
        below[m].push_back(s);
        if (!sub_elements.count(s)) sub_elements[s] = L.small(s).elements;
      }
    sub_elements[t] = L.small(t).elements;
  }

  // Simplex orbits: each chain is conjugate to one topped by a class representative T, and the
  // stabilizer of such a chain lies in N_G(T).
  Rng rng = ctx.rng(0x51);
  K.simplex_counts.clear();
  for (std::size_t m : c->members) {
    const std::size_t t = L.classes[m].rep_sub;
    const Group& N = L.classes[m].normalizer;
    const auto& D = below[m];
    std::vector<std::vector<std::uint32_t>> chains;
    std::vector<std::uint32_t> cur;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      std::vector<std::uint32_t> ch = cur;
      ch.push_back(static_cast<std::uint32_t>(t));
      chains.push_back(std::move(ch));
      for (std::size_t i = from; i < D.size(); ++i) {
        if (!cur.empty() && !(L.subgroups[D[i]].members.size() > L.subgroups[cur.back()].members.size() && L.contains(D[i], cur.back())))
          continue;
        cur.push_back(static_cast<std::uint32_t>(D[i]));
        grow(i + 1);
        cur.pop_back();
      }
    };
    grow(0);
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    for (const auto& ch : chains) {
      if (seen.count(ch)) continue;
      auto key_of = [&](const Perm& u) {
        std::vector<std::uint32_t> out;
        for (auto s : ch) {
          auto f = L.find(conjugate_key(G, sub_elements.at(s), u));
          if (!f) throw InternalError("conjugate of a Sylow-lattice subgroup under its normalizer left the lattice");
          out.push_back(static_cast<std::uint32_t>(*f));
        }
        return out;
      };
      auto orb = enumerate_orbit<std::vector<std::uint32_t>, VecHash>(N, key_of, ctx.bounds.max_orbit);
      for (const auto& k : orb.keys) seen.insert(k);
      OrderComplex::SimplexOrbit so;
      so.chain.assign(ch.begin(), ch.end());
      so.stabilizer = orbit_stabilizer(N, orb, key_of, rng);
      so.orbit_size = G.order() / so.stabilizer.order();
      const std::size_t d = ch.size() - 1;
      if (K.simplex_counts.size() <= d) K.simplex_counts.resize(d + 1, BigInt(0));
      K.simplex_counts[d] += so.orbit_size;
      K.orbits.push_back(std::move(so));
    }
  }
  if (mode == ComplexMode::kOrbit) return K;

  BigInt total_vertices = c->total_size();
  if (total_vertices > ctx.bounds.max_vertices)
    throw ResourceError("collection has " + total_vertices.get_str() + " subgroups, over bound vertices=" +
                        std::to_string(ctx.bounds.max_vertices) + "; use orbit-level mode");
  for (std::size_t m : c->members) {
    const auto& rep = sub_elements.at(L.classes[m].rep_sub);
    auto orb = enumerate_orbit<SubgroupKey, KeyHash>(G, [&](const Perm& u) { return conjugate_key(G, rep, u); }, ctx.bounds.max_orbit);
    for (std::size_t i = 0; i < orb.size(); ++i) {
      K.index.emplace(orb.keys[i], static_cast<std::uint32_t>(K.vertices.size()));
      K.vertices.push_back({m, orb.reps[i], orb.keys[i]});
    }
  }
  K.above.assign(K.vertices.size(), {});
  for (std::uint32_t v = 0; v < K.vertices.size(); ++v) {
    const auto& vx = K.vertices[v];
    for (std::size_t s : below[vx.cls]) {
      auto it = K.index.find(conjugate_key(G, sub_elements.at(s), vx.from_rep));
      if (it == K.index.end()) throw InternalError("collection member missing from the expanded vertex set");
      K.above[it->second].push_back(v);
    }
  }
  for (auto& a : K.above) std::sort(a.begin(), a.end());
  K.complex = chain_complex(K.vertices.size(), K.above, ctx.bounds);
  return K;
}

SubComplex restrict_to_vertices(std::shared_ptr<const OrderComplex> parent, std::vector<std::uint32_t> vertices, const Bounds&) {
  if (parent->mode != ComplexMode::kFull) throw DomainError("subcomplexes need a full-mode order complex");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  SubComplex s;
  s.complex = induced_subcomplex(parent->complex, vertices);
  s.vertices = std::move(vertices);
  s.parent = std::move(parent);
  return s;
}

SubComplex fixed_subcomplex(std::shared_ptr<const OrderComplex> parent, const std::vector<Perm>& gens, const Bounds& b) {
  if (parent->mode != ComplexMode::kFull) throw DomainError("fixed subcomplexes need a full-mode order complex");
  for (const Perm& g : gens)
    if (!parent->group().contains(g)) throw DomainError("element " + g.to_cycles() + " is not in the group");
  std::vector<std::uint32_t> keep;
  for (std::uint32_t v = 0; v < parent->vertices.size(); ++v) {
    bool fixed = true;
    for (const Perm& g : gens)
      if (!parent->normalizes(v, g)) {
        fixed = false;
        break;
      }
    if (fixed) keep.push_back(v);
  }
  SubComplex s = restrict_to_vertices(std::move(parent), std::move(keep), b);
  s.description = "fixed points of " + std::to_string(gens.size()) + " element(s)";
  return s;
}

SubComplex fixed_subcomplex(std::shared_ptr<const OrderComplex> parent, const Perm& g, const Bounds& b) {
  SubComplex s = fixed_subcomplex(std::move(parent), std::vector<Perm>{g}, b);
  s.description = "fixed points of " + g.to_cycles();
  return s;
}

ReductionReport poset_reduction(const SubComplex& source, const ReductionRule& rule, const Context& ctx) {
  const OrderComplex& P = *source.parent;
  const Group& G = P.group();
  const std::uint64_t p = P.collection->spec.p;
  ReductionReport r;
  r.direction = rule.kind == ReductionKind::kIntersectCentralizer ? ReductionDirection::kBelow
                : rule.kind == ReductionKind::kMultiplyCentral     ? ReductionDirection::kAbove
                                                                   : rule.custom_direction;
  auto apply = [&](const std::vector<Perm>& elems) -> std::vector<Perm> {
    switch (rule.kind) {
      case ReductionKind::kIntersectCentralizer: {
        std::vector<Perm> out;
        for (const Perm& x : elems)
          if (x.commutes_with(rule.element)) out.push_back(x);
        return out;
      }
      case ReductionKind::kMultiplyCentral: {
        std::set<Perm> s(elems.begin(), elems.end());
        for (const Perm& x : elems)
          if (!s.count(x.conjugate(rule.element))) return {};  // z must normalize
        std::vector<Perm> out;
        Perm zi = G.identity();
        do {
          for (const Perm& x : elems) out.push_back(zi * x);
          zi = zi * rule.element;
        } while (!s.count(zi));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }
      case ReductionKind::kCustom:
        if (!rule.custom) throw DomainError("custom reduction rule without a map");
        return rule.custom(elems);
    }
    return {};
  };
  auto key_of = [&](const std::vector<Perm>& elems) {
    SubgroupKey k;
    for (const Perm& x : elems) k.push_back(G.rank(x));
    std::sort(k.begin(), k.end());
    return k;
  };
  std::unordered_set<std::uint32_t> in_source(source.vertices.begin(), source.vertices.end());
  std::unordered_map<std::uint32_t, std::uint32_t> f;
  for (std::uint32_t v : source.vertices) {
    auto img = apply(P.vertex_elements(v));
    if (img.size() <= 1)
      throw RuleError("rule '" + rule.description + "' sends vertex " + std::to_string(v) + " to the trivial group (or is undefined there)");
    auto it = P.index.find(key_of(img));
    if (it == P.index.end() || !in_source.count(it->second))
      throw RuleError("rule '" + rule.description + "' sends vertex " + std::to_string(v) + " to a subgroup of order " +
                      std::to_string(img.size()) + " outside the source poset");
    f.emplace(v, it->second);
  }
  auto leq = [&](std::uint32_t a, std::uint32_t b) {
    const auto &ka = P.vertices[a].key, &kb = P.vertices[b].key;
    return std::includes(kb.begin(), kb.end(), ka.begin(), ka.end());
  };
  r.comparable = r.order_preserving = r.equivariant = true;
  for (std::uint32_t v : source.vertices) {
    if (r.direction == ReductionDirection::kBelow ? !leq(f[v], v) : !leq(v, f[v])) r.comparable = false;
    for (std::uint32_t w : P.above[v])
      if (in_source.count(w) && !leq(f[v], f[w])) r.order_preserving = false;
    for (const Perm& h : rule.acting) {
      auto vh = P.index.find(conjugate_key(G, P.vertex_elements(v), h));
      if (vh == P.index.end() || !in_source.count(vh->second)) {
        r.equivariant = false;
        continue;
      }
      if (P.vertices[f[vh->second]].key != conjugate_key(G, P.vertex_elements(f[v]), h)) r.equivariant = false;
    }
  }
  std::vector<std::uint32_t> image;
  for (auto& [v, w] : f) image.push_back(w);
  r.image = restrict_to_vertices(source.parent, std::move(image), ctx.bounds);
  r.image.description = "image under " + rule.description;
  r.source_reduced_euler = components_and_euler(source.complex).reduced_euler;
  r.image_reduced_euler = components_and_euler(r.image.complex).reduced_euler;
  r.source_betti = homology_ranks(source.complex, p, ctx.bounds);
  r.image_betti = homology_ranks(r.image.complex, p, ctx.bounds);
  r.invariants_agree = r.source_reduced_euler == r.image_reduced_euler && r.source_betti == r.image_betti;
  return r;
}

}  // namespace sgc
