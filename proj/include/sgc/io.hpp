#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/chartable.hpp"
#include "sgc/classes.hpp"
#include "sgc/group.hpp"

namespace sgc {

struct ClassPin {
  std::string label;  // e.g. "2A"; element order is the leading digits
  std::uint64_t size = 0;
  bool operator==(const ClassPin&) const = default;
};

// Text format:
//   # provenance: ...
//   name: M12
//   degree: 12
//   gen: (1,2,3)(4,5)
//   class: 2A 396
//   character: 14b 3A=-1
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<ClassPin> class_pins;
  std::vector<CharacterPin> character_pins;
  std::vector<std::string> provenance;
  bool operator==(const GroupFile& o) const;
};

// Parse errors are InputError with "line L, column C".
GroupFile parse_group_file(std::string_view text);
std::string serialize_group_file(const GroupFile& f);
GroupFile read_group_file(const std::filesystem::path& path);
Group build_group(const GroupFile& f);
// Applies pins: each pinned class must exist with the stated order and size; ambiguity is an error.
ClassData apply_class_pins(const ClassData& cd, const std::vector<ClassPin>& pins);

// Class data with the file's class pins applied, and the character table with its character pins.
ClassData pinned_class_data(const GroupFile& f, const Group& g, const Context& ctx = {});
TablePtr pinned_table(const GroupFile& f, const ClassData& cd, const Context& ctx = {});

// SGC_DATA_DIR environment variable, else the source tree's data directory.
std::filesystem::path data_dir();
// "S<n>" / "A<n>" are constructed; anything else is read from data/groups/<name>.grp.
GroupFile catalog_group(std::string_view name);

// Text format:
//   name: He
//   order: 4030387200
//   class: 2A order=2 centralizer=161280 powers=2:1A,3:2A
//   character: 51a 51 11 3 ...
CharacterTable parse_table_file(std::string_view text);
std::string serialize_table_file(const CharacterTable& t);
CharacterTable read_table_file(const std::filesystem::path& path);

struct ModularData {
  std::string group;
  std::uint64_t prime = 0;
  std::vector<BigInt> brauer_degrees;
  std::vector<std::pair<std::size_t, BigInt>> cartan_diagonal;  // index into brauer_degrees
  std::vector<std::string> provenance;
  bool operator==(const ModularData&) const = default;
};

// Text format:
//   group: M12
//   prime: 2
//   degrees: 1 10 16 16 44 144
//   cartan: 144=2
ModularData parse_modular_file(std::string_view text);
std::string serialize_modular_file(const ModularData& m);
ModularData read_modular_file(const std::filesystem::path& path);

}  // namespace sgc
