#include "sgc/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <random>
#include <sstream>

#include "sgc/errors.hpp"

namespace sgc {

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw InternalError("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Cache::Cache(std::filesystem::path dir, double verify_fraction, std::uint64_t seed)
    : dir_(std::move(dir)), verify_fraction_(verify_fraction), rng_(seed) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw InputError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::string Cache::key(std::string_view kind, std::string_view input) const {
  std::string h(kEngineVersion);
  h += '\0';
  h += kind;
  h += '\0';
  h += input;
  return std::string(kind) + "-" + sha256_hex(h);
}

std::optional<std::string> Cache::get(std::string_view kind, std::string_view input) const {
  std::ifstream in(dir_ / (key(kind, input) + ".txt"), std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  // A different engine version never collides by hash, but a hand-edited file might.
  if (header != std::string("engine: ") + kEngineVersion) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Cache::put(std::string_view kind, std::string_view input, std::string_view payload) const {
  auto final_path = dir_ / (key(kind, input) + ".txt");
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << "engine: " << kEngineVersion << "\n" << payload;
    if (!out) throw InputError("cannot write cache entry " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot install cache entry " + final_path.string());
  }
}

std::string Cache::fetch(std::string_view kind, std::string_view input, const std::function<std::string()>& compute) {
  if (auto hit = get(kind, input)) {
    ++hits;
    if (std::uniform_real_distribution<double>(0, 1)(rng_) < verify_fraction_) {
      ++verified;
      if (compute() != *hit) throw ValidationError("cache entry " + key(kind, input) + " differs from recomputation");
    }
    return *hit;
  }
  ++misses;
  std::string payload = compute();
  put(kind, input, payload);
  return payload;
}

TablePtr cached_table(const GroupFile& f, const ClassData& cd, Cache* cache, const Context& ctx) {
  if (!cache) return pinned_table(f, cd, ctx);
  std::string payload =
      cache->fetch("table", serialize_group_file(f), [&] { return serialize_table_file(*pinned_table(f, cd, ctx)); });
  auto t = std::make_shared<CharacterTable>(parse_table_file(payload));
  if (t->num_classes() != cd.size()) throw ValidationError("cached table does not match the group's classes");
  for (std::size_t c = 0; c < cd.size(); ++c)
    if (t->classes[c].label != cd[c].label || t->classes[c].element_order != cd[c].element_order ||
        t->classes[c].size != cd[c].size)
      throw ValidationError("cached table disagrees with the group at class " + cd[c].label);
  t->class_data = cd;
  return t;
}

}  // namespace sgc
