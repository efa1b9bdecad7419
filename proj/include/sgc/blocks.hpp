#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgc/chartable.hpp"

namespace sgc {

struct BlockPartition {
  std::uint64_t p = 0;
  std::vector<std::vector<std::size_t>> blocks;  // character indices; block 0 holds the trivial character
  std::vector<int> defects;
  std::vector<std::size_t> block_of;
};

// Central characters reduced modulo a fixed prime ideal above p.
BlockPartition p_blocks(const CharacterTable& t, std::uint64_t p);

// Monic irreducible factors of the n-th cyclotomic polynomial over F_p (p not dividing n), sorted
// lexicographically by coefficient vector from the top degree down.
std::vector<std::vector<std::uint64_t>> cyclotomic_factors_mod_p(std::uint64_t n, std::uint64_t p);

struct ClosureResult {
  bool closed = false;
  std::set<std::size_t> closure;
  // Sufficient certificate: xi(x, y, z) = 0 for x, y in the set and z an order-p class outside it.
  enum class XiCertificate { kHolds, kIndeterminate, kUnavailable } xi = XiCertificate::kUnavailable;
  std::string note;
};

// Exact closure of a set of order-p classes under products of commuting members, by enumerating
// centralizers of class representatives. Table is optional and only feeds the xi certificate.
ClosureResult closed_class_check(const ClassData& cd, const std::set<std::size_t>& classes, const TablePtr& table = nullptr,
                                 const Context& ctx = {});

// The xi certificate alone, usable on ingested tables without a group.
ClosureResult::XiCertificate xi_closure_certificate(const CharacterTable& t, const std::set<std::size_t>& classes, std::uint64_t p);

}  // namespace sgc
