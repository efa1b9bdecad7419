#include "sgc/context.hpp"

#include <charconv>
#include <sstream>

#include "sgc/errors.hpp"

namespace sgc {

namespace {

template <class T>
void set_field(T& field, std::string_view value, std::string_view key) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw InputError("bound '" + std::string(key) + "' needs a nonnegative integer");
  field = static_cast<T>(v);
}

}  // namespace

Bounds Bounds::parse(std::string_view text) {
  Bounds b;
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("bound '" + std::string(item) + "' lacks '='");
    std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "element-index") set_field(b.max_element_index, val, key);
    else if (key == "classes") set_field(b.max_classes, val, key);
    else if (key == "sylow") set_field(b.max_sylow_order, val, key);
    else if (key == "centralizer") set_field(b.max_centralizer_enum, val, key);
    else if (key == "orbit") set_field(b.max_orbit, val, key);
    else if (key == "vertices") set_field(b.max_vertices, val, key);
    else if (key == "simplices") set_field(b.max_simplices, val, key);
    else if (key == "homology") set_field(b.max_homology_cells, val, key);
    else if (key == "subgroup-elements") set_field(b.max_subgroup_elements, val, key);
    else if (key == "coset-expansion") set_field(b.max_coset_expansion, val, key);
    else throw InputError("unknown bound '" + std::string(key) + "'");
  }
  return b;
}

std::string Bounds::describe() const {
  std::ostringstream os;
  os << "element-index=" << max_element_index << ",classes=" << max_classes << ",sylow=" << max_sylow_order
     << ",centralizer=" << max_centralizer_enum << ",orbit=" << max_orbit << ",vertices=" << max_vertices
     << ",simplices=" << max_simplices << ",homology=" << max_homology_cells
     << ",subgroup-elements=" << max_subgroup_elements << ",coset-expansion=" << max_coset_expansion;
  return os.str();
}

}  // namespace sgc
