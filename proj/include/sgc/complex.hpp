#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgc/collections.hpp"

namespace sgc {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (auto x : v) h = (h ^ x) * 0x100000001B3ULL;
    return static_cast<std::size_t>(h);
  }
};

// Abstract simplicial complex; simplices[k] holds sorted vertex lists of dimension k, in lex order.
struct SimplicialComplex {
  std::size_t num_vertices = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices;

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t count(std::size_t dim) const { return dim < simplices.size() ? simplices[dim].size() : 0; }
  std::size_t total() const;
  // Every face of every simplex is present.
  bool face_closed() const;
};

// Complex of chains in a poset given by strict "above" lists (a < b for b in above[a]).
SimplicialComplex chain_complex(std::size_t n, const std::vector<std::vector<std::uint32_t>>& above, const Bounds& b = {});
SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<std::uint32_t>& keep);

struct ComponentSummary {
  std::size_t components = 0;
  std::vector<std::vector<std::size_t>> per_component;  // simplex counts by dimension
  BigInt euler;
  BigInt reduced_euler;
};
ComponentSummary components_and_euler(const SimplicialComplex& K);
std::vector<SimplicialComplex> component_complexes(const SimplicialComplex& K);

// Reduced Betti numbers in degrees 0..dim; p = 0 means the rationals. Empty complex gives {}.
std::vector<std::size_t> homology_ranks(const SimplicialComplex& K, std::uint64_t p, const Bounds& b = {});

enum class CertificateLevel { kNone = 0, kFpAcyclic = 1, kCollapsible = 2, kCone = 3 };
std::string to_string(CertificateLevel l);

struct Certificate {
  CertificateLevel level = CertificateLevel::kNone;
  std::string witness;
  std::vector<std::size_t> betti;  // reduced F_p Betti numbers
  bool cone = false, collapsible = false, acyclic = false;
};
std::optional<std::uint32_t> cone_vertex(const SimplicialComplex& K);
// Greedy elementary collapses in lexicographic order; true iff a single vertex remains.
bool greedy_collapse(const SimplicialComplex& K, std::size_t* steps = nullptr);
Certificate contractibility_certificate(const SimplicialComplex& K, std::uint64_t p, const Bounds& b = {});

enum class ComplexMode { kFull, kOrbit };

// Order complex of a collection of p-subgroups.
struct OrderComplex {
  struct Vertex {
    std::size_t cls = 0;  // lattice class
    Perm from_rep;        // rep^from_rep is this vertex
    SubgroupKey key;
  };
  struct SimplexOrbit {
    std::vector<std::size_t> chain;  // Sylow-lattice subgroup indices, bottom to top
    Group stabilizer;
    BigInt orbit_size;
    int dim() const { return static_cast<int>(chain.size()) - 1; }
  };

  std::shared_ptr<const Collection> collection;
  ComplexMode mode = ComplexMode::kFull;
  // Full mode.
  std::vector<Vertex> vertices;
  std::unordered_map<SubgroupKey, std::uint32_t, KeyHash> index;
  std::vector<std::vector<std::uint32_t>> above;
  SimplicialComplex complex;
  // Both modes: simplex orbits with stabilizers, and simplex counts per dimension.
  std::vector<SimplexOrbit> orbits;
  std::vector<BigInt> simplex_counts;

  const Group& group() const { return collection->lattice->G; }
  std::vector<Perm> vertex_elements(std::uint32_t v) const;
  bool normalizes(std::uint32_t v, const Perm& g) const;
};

OrderComplex order_complex(std::shared_ptr<const Collection> c, ComplexMode mode, const Context& ctx = {});

// Induced subcomplex on a vertex subset of a full-mode order complex.
struct SubComplex {
  std::shared_ptr<const OrderComplex> parent;
  std::vector<std::uint32_t> vertices;  // parent vertex ids, ascending
  SimplicialComplex complex;
  std::string description;
};

SubComplex restrict_to_vertices(std::shared_ptr<const OrderComplex> parent, std::vector<std::uint32_t> vertices,
                                const Bounds& b = {});
// Chains all of whose members are normalized by g (or by every generator given).
SubComplex fixed_subcomplex(std::shared_ptr<const OrderComplex> parent, const Perm& g, const Bounds& b = {});
SubComplex fixed_subcomplex(std::shared_ptr<const OrderComplex> parent, const std::vector<Perm>& gens, const Bounds& b = {});

enum class ReductionKind { kIntersectCentralizer, kMultiplyCentral, kCustom };
enum class ReductionDirection { kBelow, kAbove };  // f(x) <= x or f(x) >= x

struct ReductionRule {
  ReductionKind kind = ReductionKind::kIntersectCentralizer;
  Perm element;                     // t or z
  std::vector<Perm> acting;         // generators of the group the map should commute with
  std::function<std::vector<Perm>(const std::vector<Perm>&)> custom;  // elements to elements
  ReductionDirection custom_direction = ReductionDirection::kBelow;
  std::string description;
};

struct ReductionReport {
  SubComplex image;
  ReductionDirection direction = ReductionDirection::kBelow;
  bool order_preserving = false;
  bool comparable = false;
  bool equivariant = false;
  BigInt source_reduced_euler, image_reduced_euler;
  std::vector<std::size_t> source_betti, image_betti;  // over F_p for the collection's prime
  bool invariants_agree = false;
  bool valid() const { return order_preserving && comparable && equivariant && invariants_agree; }
};

// Throws RuleError naming the witness vertex when f(x) is trivial or not a vertex of the source.
ReductionReport poset_reduction(const SubComplex& source, const ReductionRule& rule, const Context& ctx = {});

}  // namespace sgc
