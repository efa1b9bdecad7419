#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sgc/blocks.hpp"
#include "sgc/psubgroups.hpp"

namespace sgc {

struct PCentralData {
  std::uint64_t p = 0;
  std::set<std::size_t> central;  // order-p classes meeting Z(S)
  std::set<std::size_t> benson;   // closure of central under commuting products
  ClosureResult closure;
};

PCentralData p_central_classes(const ClassData& cd, std::uint64_t p, const Context& ctx = {}, const TablePtr& table = nullptr);

// Q must be a nontrivial p-subgroup of G; otherwise DomainError.
bool is_p_radical(const Group& G, const Group& Q, std::uint64_t p, const Context& ctx = {});
bool is_p_centric(const Group& G, const Group& Q, std::uint64_t p, const Context& ctx = {});
bool is_distinguished(const ClassData& cd, const Group& Q, const PCentralData& pc, const Context& ctx = {});

enum class CollectionKind { kQuillen, kBenson, kBouc, kDistinguishedBouc, kCentricRadical, kCustom };
std::string to_string(CollectionKind k);
CollectionKind parse_collection_kind(std::string_view s);

struct SubgroupFlags {
  bool radical = false;
  bool centric = false;
  bool distinguished = false;
  bool elementary_abelian = false;
  bool purely_central = false;     // every order-p element is in a central class
  bool purely_noncentral = false;  // no element is in a central class
  bool benson_pure = false;        // every order-p element is in a Benson class
};

struct CollectionSpec {
  std::uint64_t p = 0;
  CollectionKind kind = CollectionKind::kBouc;
  std::function<bool(const SubgroupFlags&, const PSubgroupClass&)> custom;
  std::string custom_description;
};

struct Collection {
  CollectionSpec spec;
  std::shared_ptr<const PSubgroupLattice> lattice;
  PCentralData central;
  std::vector<SubgroupFlags> flags;  // per lattice class
  std::vector<std::size_t> members;  // lattice class indices in the collection

  bool contains_class(std::size_t c) const;
  BigInt total_size() const;
};

bool matches(CollectionKind kind, const SubgroupFlags& f);

Collection build_collection(const ClassData& cd, const CollectionSpec& spec, const Context& ctx = {},
                            const TablePtr& table = nullptr);
// Reuses an existing lattice and central data (they must belong to cd's group and spec.p).
Collection build_collection(const ClassData& cd, const CollectionSpec& spec, std::shared_ptr<const PSubgroupLattice> lattice,
                            const PCentralData& central, const Context& ctx = {});

}  // namespace sgc
