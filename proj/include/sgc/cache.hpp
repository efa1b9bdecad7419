#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "sgc/chartable.hpp"
#include "sgc/io.hpp"

namespace sgc {

inline constexpr const char* kEngineVersion = "sgc 1.0.0";

std::string sha256_hex(std::string_view data);

// Content-addressed store of serialized artifacts. Entries are named <kind>-<sha256>.txt where the hash
// covers the engine version, the kind and the serialized inputs. Writes go through a temporary file
// and a rename, so readers never see partial entries.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, double verify_fraction = 0.1, std::uint64_t seed = 1);

  std::string key(std::string_view kind, std::string_view input) const;
  std::optional<std::string> get(std::string_view kind, std::string_view input) const;
  void put(std::string_view kind, std::string_view input, std::string_view payload) const;

  // Cached payload, or compute() stored on a miss. A fraction of hits is recomputed and must match
  // byte for byte (ValidationError otherwise).
  std::string fetch(std::string_view kind, std::string_view input, const std::function<std::string()>& compute);

  std::size_t hits = 0, misses = 0, verified = 0;

 private:
  std::filesystem::path dir_;
  double verify_fraction_;
  Rng rng_;
};

// Character table through the cache; the result is re-attached to cd and re-verified.
TablePtr cached_table(const GroupFile& f, const ClassData& cd, Cache* cache, const Context& ctx = {});

}  // namespace sgc
