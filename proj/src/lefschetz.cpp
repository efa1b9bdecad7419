#include "sgc/lefschetz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "sgc/errors.hpp"
#include "sgc/numtheory.hpp"
#include "sgc/subgroups.hpp"

namespace sgc {

LefschetzCharacter lefschetz_character(const TablePtr& t, const OrderComplex& K, const Context& ctx) {
  if (!t) throw DependencyError("Lefschetz character needs the character table of the group");
  if (!t->class_data) throw DependencyError("Lefschetz character needs a table computed from the group");
  LefschetzCharacter L;
  L.character = -ClassFunction::trivial(t);
  for (const auto& orb : K.orbits) {
    auto ind = permutation_character(t, orb.stabilizer, ctx.bounds);
    L.character = orb.dim() % 2 ? L.character - ind : L.character + ind;
    L.stabilizers.emplace_back(orb.dim(), orb.stabilizer.order());
  }
  L.multiplicities = decompose(L.character);
  L.degree_from_counts = -1;
  for (std::size_t d = 0; d < K.simplex_counts.size(); ++d)
    L.degree_from_counts += d % 2 ? BigInt(-K.simplex_counts[d]) : K.simplex_counts[d];
  if (L.character.degree() != Cyclotomic(Rational(L.degree_from_counts)))
    throw InternalError("Lefschetz degree " + L.character.degree().str() + " disagrees with simplex counts " +
                        L.degree_from_counts.get_str());
  return L;
}

std::vector<EulerRow> euler_crosscheck(const LefschetzCharacter& L, std::shared_ptr<const OrderComplex> K, const Bounds& b) {
  const auto& t = *L.character.table();
  if (!t.class_data) throw DependencyError("Euler cross-check needs class representatives");
  std::vector<EulerRow> rows;
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    auto F = fixed_subcomplex(K, (*t.class_data)[c].representative, b);
    EulerRow r{c, L.character[c], components_and_euler(F.complex).reduced_euler, F.vertices.size()};
    if (r.value != Cyclotomic(Rational(r.reduced_euler)))
      throw ValidationError("Lefschetz value " + r.value.str() + " at class " + t.classes[c].label +
                            " but the fixed set has reduced Euler characteristic " + r.reduced_euler.get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

ProjectivityReport block_distribution(const ClassFunction& f, const BlockPartition& B) {
  const TablePtr& t = f.table();
  if (B.block_of.size() != t->num_characters()) throw DomainError("block partition does not belong to the character's table");
  auto mult = decompose(f);
  ProjectivityReport r;
  r.p = B.p;
  for (std::size_t b = 0; b < B.blocks.size(); ++b) {
    BlockComponent comp;
    comp.block = b;
    comp.defect = B.defects[b];
    comp.multiplicities.assign(t->num_characters(), BigInt(0));
    bool nonzero = false;
    for (std::size_t chi : B.blocks[b]) {
      comp.multiplicities[chi] = mult[chi];
      nonzero |= mult[chi] != 0;
    }
    if (!nonzero) continue;
    comp.character = from_multiplicities(t, comp.multiplicities);
    comp.p_singular_witness = p_singular_witness(comp.character, B.p);
    r.components.push_back(std::move(comp));
  }
  ClassFunction sum = ClassFunction::zero(t);
  for (const auto& c : r.components) sum = sum + c.character;
  if (!(sum == f)) throw InternalError("block components do not sum to the character");
  return r;
}

ProjectivePartResult projective_part_test(const ClassFunction& f, std::uint64_t p) {
  ProjectivePartResult r;
  r.witness = p_singular_witness(f, p);
  r.vanishes = !r.witness;
  return r;
}

std::vector<std::uint64_t> robinson_webb_screen(const BigInt& subgroup_order, std::uint64_t p,
                                                const std::vector<std::uint64_t>& degrees) {
  if (degrees.empty()) throw DependencyError("no Brauer character degrees supplied");
  BigInt pp = p_part(subgroup_order, p);
  std::vector<std::uint64_t> out;
  for (auto d : degrees)
    if (BigInt(static_cast<unsigned long>(d)) >= pp) out.push_back(d);
  return out;
}

DoubleCosetBound robinson_double_coset_bound(const Group& G, const Group& H, std::uint64_t p,
                                             std::optional<std::uint64_t> cartan, const Context& ctx) {
  auto dec = double_cosets(G, H, H, ctx);
  DoubleCosetBound r;
  r.double_cosets = dec.entries.size();
  for (const auto& e : dec.entries) {
    if (*e.intersection % p != 0) ++r.coprime;
    if (*e.intersection == 1) ++r.trivial;
  }
  r.cartan = cartan;
  if (r.coprime == 0) {
    r.statement = "d = 0: no projective summands";
  } else if (cartan) {
    std::uint64_t m = 0;
    while (*cartan * (m + 1) * (m + 1) <= r.coprime) ++m;
    r.max_multiplicity = m;
    r.statement = std::to_string(*cartan) + "m² ≤ " + std::to_string(r.coprime);
  } else {
    r.statement = "d = " + std::to_string(r.coprime) + " (no Cartan entry supplied)";
  }
  return r;
}

std::string to_string(LandrockAction a) { return a == LandrockAction::kConjugation ? "conjugation" : "left-multiplication"; }

LandrockReport landrock_test(const ClassData& cd, std::uint64_t p, LandrockAction action, const Context& ctx) {
  const Group& G = cd.group();
  LandrockReport r;
  r.p = p;
  r.action = action;
  Group P = sylow(G, p, ctx).group;
  auto dec = double_cosets(G, P, P, ctx);
  auto pel = P.elements(ctx.bounds);
  for (const auto& e : dec.entries) {
    if (*e.intersection != 1) continue;
    ++r.trivial_cosets;
    if (pel.size() * pel.size() > ctx.bounds.max_coset_expansion)
      throw ResourceError("double coset of size " + std::to_string(pel.size() * pel.size()) + " exceeds bound coset=" +
                          std::to_string(ctx.bounds.max_coset_expansion));
    std::map<std::size_t, std::vector<Perm>> by_section;
    for (const Perm& a : pel) {
      Perm ag = a * e.representative;
      for (const Perm& b : pel) {
        Perm x = ag * b;
        by_section[cd.class_of(p_prime_part(x, p))].push_back(x);
      }
    }
    for (auto& [sec, xs] : by_section) {
      LandrockCount c{e.representative, sec, xs.size(), 0};
      if (action == LandrockAction::kLeftMultiplication) {
        std::unordered_set<std::uint64_t> cosets;
        for (const Perm& x : xs) cosets.insert(G.rank(canonical_right_coset_rep(P, x)));
        c.orbits = cosets.size();
      } else {
        std::unordered_map<std::uint64_t, std::size_t> idx;
        for (std::size_t i = 0; i < xs.size(); ++i) idx.emplace(G.rank(xs[i]), i);
        std::vector<std::size_t> parent(xs.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t a) {
          while (parent[a] != a) a = parent[a] = parent[parent[a]];
          return a;
        };
        for (std::size_t i = 0; i < xs.size(); ++i)
          for (const Perm& h : P.generators()) {
            std::size_t a = find(i), b = find(idx.at(G.rank(xs[i].conjugate(h))));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
        for (std::size_t i = 0; i < xs.size(); ++i) c.orbits += find(i) == i;
      }
      if (c.orbits % p != 0 && !r.witness) r.witness = c;
      r.counts.push_back(std::move(c));
    }
  }
  r.vacuous = r.trivial_cosets == 0;
  r.projective_free = !r.witness;
  return r;
}

std::vector<VertexRow> vertex_report(std::shared_ptr<const OrderComplex> K, const ClassData& cd, const Context& ctx) {
  const Collection& C = *K->collection;
  const PSubgroupLattice& L = *C.lattice;
  std::vector<VertexRow> rows;
  for (std::size_t c = 0; c < L.classes.size(); ++c) {
    if (!C.flags[c].purely_noncentral) continue;
    const auto& cls = L.classes[c];
    VertexRow row;
    row.lattice_class = c;
    row.order = cls.order;
    row.normalizer_order = cls.normalizer.order();
    for (std::size_t k = 0; k < cd.size(); ++k)
      if (k < cls.class_counts.size() && cls.class_counts[k] && cd[k].element_order == C.spec.p)
        row.description += (row.description.empty() ? "" : " ") + cd[k].label + "x" + std::to_string(cls.class_counts[k]);
    auto F = fixed_subcomplex(K, cls.rep.generators, ctx.bounds);
    row.fixed_vertices = F.vertices.size();
    row.summary = components_and_euler(F.complex);
    row.certificate = contractibility_certificate(F.complex, C.spec.p, ctx.bounds);
    bool points = true;
    for (const auto& comp : component_complexes(F.complex)) {
      row.component_levels.push_back(contractibility_certificate(comp, C.spec.p, ctx.bounds).level);
      points &= row.component_levels.back() >= CertificateLevel::kCollapsible;
    }
    row.excluded = row.certificate.level >= CertificateLevel::kFpAcyclic;
    if (row.excluded) {
      row.conclusion = "excluded as vertex: fixed set is " + to_string(row.certificate.level);
    } else if (points && row.summary.components > 0) {
      row.conclusion = "candidate vertex: fixed set is homotopy equivalent to " + std::to_string(row.summary.components) +
                       " points";
    } else {
      row.conclusion = "candidate vertex: fixed set has " + std::to_string(row.summary.components) +
                       " component(s), reduced Euler characteristic " + row.summary.reduced_euler.get_str();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sgc
