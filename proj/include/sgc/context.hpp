#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace sgc {

using Rng = std::mt19937_64;

// Explicit resource limits. Every default is documented in README.md.
struct Bounds {
  std::uint64_t max_element_index = 20'000'000;  // |G| for element-indexed class data
  std::size_t max_classes = 60;                  // class count for Dixon-Schneider
  std::uint64_t max_sylow_order = 243;           // subgroup enumeration inside a Sylow
  std::uint64_t max_centralizer_enum = 1'000'000;
  std::size_t max_orbit = 5'000'000;             // any single orbit enumeration
  std::size_t max_vertices = 200'000;            // full-mode complex expansion
  std::size_t max_simplices = 5'000'000;
  std::size_t max_homology_cells = 2'000'000;
  std::uint64_t max_subgroup_elements = 2'000'000;  // enumerating a subgroup's elements
  std::uint64_t max_coset_expansion = 20'000'000;   // elements of PgP visited by landrock

  // "key=value,key=value"; unknown keys are an InputError.
  static Bounds parse(std::string_view text);
  std::string describe() const;
};

struct Context {
  Bounds bounds;
  std::uint64_t seed = 1;

  Rng rng(std::uint64_t salt = 0) const { return Rng(seed * 0x9E3779B97F4A7C15ULL + salt); }
};

}  // namespace sgc
