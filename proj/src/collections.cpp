#include "sgc/collections.hpp"

#include <algorithm>

#include "sgc/errors.hpp"

namespace sgc {

namespace {

void require_p_subgroup(const Group& Q, std::uint64_t p) {
  if (Q.order() == 1) throw DomainError("expected a nontrivial p-subgroup, got the trivial group");
  if (!is_p_group(Q.order(), p)) throw DomainError("subgroup of order " + Q.order().get_str() + " is not a " + std::to_string(p) + "-group");
}

}  // namespace

PCentralData p_central_classes(const ClassData& cd, std::uint64_t p, const Context& ctx, const TablePtr& table) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  PCentralData pc;
  pc.p = p;
  const Group& G = cd.group();
  if (p_part(G.order(), p) == 1) {
    pc.closure.closed = true;
    return pc;
  }
  Group S = sylow(G, p, ctx).group;
  Group Z = center_omega1(S, p, ctx).group;
  for (const Perm& z : Z.elements(ctx.bounds))
    if (!z.is_identity()) pc.central.insert(cd.class_of(z));
  pc.closure = closed_class_check(cd, pc.central, table, ctx);
  pc.benson = pc.closure.closure;
  return pc;
}

bool is_p_radical(const Group& G, const Group& Q, std::uint64_t p, const Context& ctx) {
  require_p_subgroup(Q, p);
  Group N = normalizer(G, Q, ctx).group;
  return p_core(N, p, ctx).order() == Q.order();
}

bool is_p_centric(const Group& G, const Group& Q, std::uint64_t p, const Context& ctx) {
  require_p_subgroup(Q, p);
  Group C = centralizer(G, Q.generators(), ctx).group;
  std::vector<Perm> zq;
  for (const Perm& x : Q.elements(ctx.bounds)) {
    bool central = true;
    for (const Perm& g : Q.generators())
      if (!x.commutes_with(g)) {
        central = false;
        break;
      }
    if (central) zq.push_back(x);
  }
  return BigInt(static_cast<unsigned long>(zq.size())) == p_part(C.order(), p);
}

bool is_distinguished(const ClassData& cd, const Group& Q, const PCentralData& pc, const Context& ctx) {
  require_p_subgroup(Q, pc.p);
  for (const Perm& x : Q.elements(ctx.bounds)) {
    if (x.is_identity() || pc.central.count(cd.class_of(x)) == 0) continue;
    bool central = true;
    for (const Perm& g : Q.generators())
      if (!x.commutes_with(g)) {
        central = false;
        break;
      }
    if (central) return true;
  }
  return false;
}

std::string to_string(CollectionKind k) {
  switch (k) {
    case CollectionKind::kQuillen: return "quillen";
    case CollectionKind::kBenson: return "benson";
    case CollectionKind::kBouc: return "bouc";
    case CollectionKind::kDistinguishedBouc: return "distinguished-bouc";
    case CollectionKind::kCentricRadical: return "centric-radical";
    case CollectionKind::kCustom: return "custom";
  }
  return "?";
}

CollectionKind parse_collection_kind(std::string_view s) {
  for (auto k : {CollectionKind::kQuillen, CollectionKind::kBenson, CollectionKind::kBouc, CollectionKind::kDistinguishedBouc,
                 CollectionKind::kCentricRadical})
    if (to_string(k) == s) return k;
  throw InputError("unknown collection kind '" + std::string(s) +
                   "' (expected quillen, benson, bouc, distinguished-bouc or centric-radical)");
}

bool matches(CollectionKind kind, const SubgroupFlags& f) {
  switch (kind) {
    case CollectionKind::kQuillen: return f.elementary_abelian;
    case CollectionKind::kBenson: return f.elementary_abelian && f.benson_pure;
    case CollectionKind::kBouc: return f.radical;
    case CollectionKind::kDistinguishedBouc: return f.radical && f.distinguished;
    case CollectionKind::kCentricRadical: return f.radical && f.centric;
    case CollectionKind::kCustom: break;
  }
  throw DomainError("custom collections need a predicate");
}

bool Collection::contains_class(std::size_t c) const { return std::binary_search(members.begin(), members.end(), c); }

BigInt Collection::total_size() const {
  BigInt s = 0;
  for (std::size_t c : members) s += lattice->classes[c].orbit_size;
  return s;
}

Collection build_collection(const ClassData& cd, const CollectionSpec& spec, const Context& ctx, const TablePtr& table) {
  auto lattice = std::make_shared<const PSubgroupLattice>(p_subgroup_classes(cd.group(), spec.p, ctx, &cd));
  return build_collection(cd, spec, lattice, p_central_classes(cd, spec.p, ctx, table), ctx);
}

Collection build_collection(const ClassData& cd, const CollectionSpec& spec, std::shared_ptr<const PSubgroupLattice> lattice,
                            const PCentralData& central, const Context& ctx) {
  if (lattice->p != spec.p || central.p != spec.p) throw DomainError("lattice, central data and spec disagree on the prime");
  Collection c;
  c.spec = spec;
  c.lattice = lattice;
  c.central = central;
  const std::uint64_t p = spec.p;
  for (std::size_t k = 0; k < lattice->classes.size(); ++k) {
    const PSubgroupClass& pc = lattice->classes[k];
    SubgroupFlags f;
    f.elementary_abelian = pc.elementary_abelian;
    // O_p(N_G(Q)) contains Q, so radical means equal orders.
    f.radical = p_core(pc.normalizer, p, ctx).order() == pc.order;
    Group C = centralizer(pc.normalizer, pc.rep.generators, ctx).group;
    f.centric = pc.center_order == p_part(C.order(), p);
    bool any_central = false, all_central = true, all_benson = true, center_has_central = false;
    for (const Perm& x : pc.rep.elements) {
      if (x.is_identity()) continue;
      std::size_t cls = cd.class_of(x);
      const bool is_central = central.central.count(cls) > 0;
      any_central |= is_central;
      if (x.order() == p) {
        all_central &= is_central;
        all_benson &= central.benson.count(cls) > 0;
      }
      if (is_central && !center_has_central) {
        bool in_center = true;
        for (const Perm& g : pc.rep.generators)
          if (!x.commutes_with(g)) {
            in_center = false;
            break;
          }
        center_has_central = in_center;
      }
    }
    f.distinguished = center_has_central;
    f.purely_central = all_central;
    f.purely_noncentral = !any_central;
    f.benson_pure = all_benson;
    c.flags.push_back(f);
    bool in = spec.kind == CollectionKind::kCustom ? (spec.custom && spec.custom(f, pc)) : matches(spec.kind, f);
    if (in) c.members.push_back(k);
  }
  return c;
}

}  // namespace sgc
