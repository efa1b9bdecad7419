#include "sgc/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sgc/errors.hpp"

namespace sgc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

InputError at(std::size_t line, std::size_t col, const std::string& why) {
  return InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + why);
}

// Walks "key: value" lines, skipping blanks; "# provenance:" lines are collected.
struct Line {
  std::size_t number;
  std::string key;
  std::string value;
  std::size_t value_col;
};

std::vector<Line> keyed_lines(std::string_view text, std::vector<std::string>& provenance) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    pos = end + 1;
    std::string_view s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '#') {
      std::string_view body = trim(s.substr(1));
      constexpr std::string_view tag = "provenance:";
      if (body.substr(0, tag.size()) == tag) provenance.emplace_back(trim(body.substr(tag.size())));
      continue;
    }
    std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos) throw at(number, 1, "expected 'key: value'");
    Line l;
    l.number = number;
    l.key = std::string(trim(raw.substr(0, colon)));
    std::size_t vstart = colon + 1;
    while (vstart < raw.size() && std::isspace(static_cast<unsigned char>(raw[vstart]))) ++vstart;
    l.value = std::string(trim(raw.substr(colon + 1)));
    l.value_col = vstart + 1;
    out.push_back(std::move(l));
  }
  return out;
}

std::uint64_t parse_u64(const Line& l, std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw at(l.number, l.value_col, "expected a nonnegative integer, got '" + std::string(s) + "'");
  return std::stoull(std::string(s));
}

BigInt parse_big(const Line& l, std::string_view s) {
  std::string t(s);
  bool neg = !t.empty() && t[0] == '-';
  std::string digits = neg ? t.substr(1) : t;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw at(l.number, l.value_col, "expected an integer, got '" + t + "'");
  return BigInt(t);
}

std::uint64_t leading_order(const std::string& label) {
  std::size_t d = 0;
  while (d < label.size() && std::isdigit(static_cast<unsigned char>(label[d]))) ++d;
  if (d == 0 || d == label.size()) return 0;
  return std::stoull(label.substr(0, d));
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string with_path(const std::filesystem::path& p, const Error& e) { return p.string() + ": " + e.what(); }

}  // namespace

bool GroupFile::operator==(const GroupFile& o) const {
  if (name != o.name || degree != o.degree || generators != o.generators || class_pins != o.class_pins ||
      provenance != o.provenance || character_pins.size() != o.character_pins.size())
    return false;
  for (std::size_t i = 0; i < character_pins.size(); ++i) {
    const auto &a = character_pins[i], &b = o.character_pins[i];
    if (a.label != b.label || a.class_label != b.class_label || a.value != b.value) return false;
  }
  return true;
}

GroupFile parse_group_file(std::string_view text) {
  GroupFile f;
  auto lines = keyed_lines(text, f.provenance);
  bool have_degree = false;
  std::vector<const Line*> gens;
  for (const Line& l : lines) {
    if (l.key == "name") {
      f.name = l.value;
    } else if (l.key == "degree") {
      f.degree = parse_u64(l, l.value);
      if (f.degree == 0 || f.degree > 65535) throw at(l.number, l.value_col, "degree out of range");
      have_degree = true;
    } else if (l.key == "gen") {
      gens.push_back(&l);
    } else if (l.key == "class") {
      auto w = split_ws(l.value);
      if (w.size() != 2 || leading_order(w[0]) == 0) throw at(l.number, l.value_col, "expected 'class: <label> <size>'");
      f.class_pins.push_back({w[0], parse_u64(l, w[1])});
    } else if (l.key == "character") {
      auto w = split_ws(l.value);
      std::size_t eq = w.size() == 2 ? w[1].find('=') : std::string::npos;
      if (eq == std::string::npos || leading_order(w[0]) == 0)
        throw at(l.number, l.value_col, "expected 'character: <label> <class>=<value>'");
      CharacterPin pin{w[0], w[1].substr(0, eq), {}};
      try {
        pin.value = Cyclotomic::parse(w[1].substr(eq + 1));
      } catch (const InputError& e) {
        throw at(l.number, l.value_col, e.what());
      }
      f.character_pins.push_back(std::move(pin));
    } else {
      throw at(l.number, 1, "unknown key '" + l.key + "'");
    }
  }
  if (!have_degree) throw InputError("line 1, column 1: missing 'degree:' header");
  for (const Line* l : gens) {
    try {
      f.generators.push_back(Perm::from_cycles(l->value, f.degree));
    } catch (const InputError& e) {
      throw at(l->number, l->value_col, e.what());
    }
  }
  return f;
}

std::string serialize_group_file(const GroupFile& f) {
  std::string s;
  for (const auto& p : f.provenance) s += "# provenance: " + p + "\n";
  if (!f.name.empty()) s += "name: " + f.name + "\n";
  s += "degree: " + std::to_string(f.degree) + "\n";
  for (const auto& g : f.generators) s += "gen: " + g.to_cycles() + "\n";
  for (const auto& c : f.class_pins) s += "class: " + c.label + " " + std::to_string(c.size) + "\n";
  for (const auto& c : f.character_pins) s += "character: " + c.label + " " + c.class_label + "=" + c.value.str() + "\n";
  return s;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  try {
    return parse_group_file(read_all(path));
  } catch (const InputError& e) {
    throw InputError(with_path(path, e));
  }
}

Group build_group(const GroupFile& f) { return Group::build(f.generators, f.degree); }

ClassData apply_class_pins(const ClassData& cd, const std::vector<ClassPin>& pins) {
  std::vector<std::string> labels = cd.labels();
  for (const auto& pin : pins) {
    std::uint64_t ord = leading_order(pin.label);
    std::vector<std::size_t> match;
    for (std::size_t c = 0; c < cd.size(); ++c)
      if (cd[c].element_order == ord && cd[c].size == pin.size) match.push_back(c);
    if (match.size() != 1)
      throw ValidationError("pinned class " + pin.label + " (size " + std::to_string(pin.size) + ") matches " +
                            std::to_string(match.size()) + " computed classes");
    auto holder = std::find(labels.begin(), labels.end(), pin.label);
    if (holder == labels.end()) throw ValidationError("pinned class " + pin.label + " is not a label of this group's order type");
    std::swap(*holder, labels[match[0]]);
  }
  return cd.with_labels(std::move(labels));
}

ClassData pinned_class_data(const GroupFile& f, const Group& g, const Context& ctx) {
  return apply_class_pins(ClassData::compute(g, ctx), f.class_pins);
}

TablePtr pinned_table(const GroupFile& f, const ClassData& cd, const Context& ctx) {
  TablePtr base = character_table(cd, ctx, f.name);
  if (f.character_pins.empty()) return base;
  auto t = std::make_shared<CharacterTable>(*base);
  apply_character_pins(*t, f.character_pins);
  return t;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("SGC_DATA_DIR"); env && *env) return env;
  return SGC_DATA_DIR;
}

GroupFile catalog_group(std::string_view name) {
  const auto shipped = data_dir() / "groups" / (std::string(name) + ".grp");
  if (std::filesystem::exists(shipped)) {
    GroupFile f = read_group_file(shipped);
    if (f.name.empty()) f.name = std::string(name);
    return f;
  }
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'A') &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    std::size_t n = std::stoul(std::string(name.substr(1)));
    if (n < 1 || n > 65535) throw InputError("degree out of range in '" + std::string(name) + "'");
    GroupFile f;
    f.name = std::string(name);
    f.degree = n;
    f.provenance.push_back("constructed");
    Group g = name[0] == 'S' ? Group::symmetric(n) : Group::alternating(n);
    f.generators = g.generators();
    return f;
  }
  throw InputError("unknown group '" + std::string(name) + "' (no " + shipped.string() + ")");
}

CharacterTable parse_table_file(std::string_view text) {
  CharacterTable t;
  std::vector<std::string> provenance;
  auto lines = keyed_lines(text, provenance);
  bool have_order = false;
  std::vector<std::vector<std::pair<std::uint64_t, std::string>>> powers;
  for (const Line& l : lines) {
    if (l.key == "name") {
      t.name = l.value;
    } else if (l.key == "order") {
      t.order = parse_big(l, l.value);
      if (t.order <= 0) throw at(l.number, l.value_col, "order must be positive");
      have_order = true;
    } else if (l.key == "class") {
      auto w = split_ws(l.value);
      if (w.size() < 3) throw at(l.number, l.value_col, "expected 'class: <label> order=<n> centralizer=<n> [powers=...]'");
      ClassInfo ci;
      ci.label = w[0];
      std::vector<std::pair<std::uint64_t, std::string>> pw;
      bool have_ord = false, have_cent = false;
      for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t eq = w[i].find('=');
        if (eq == std::string::npos) throw at(l.number, l.value_col, "expected key=value in '" + w[i] + "'");
        std::string k = w[i].substr(0, eq), v = w[i].substr(eq + 1);
        if (k == "order") {
          ci.element_order = parse_u64(l, v);
          have_ord = true;
        } else if (k == "centralizer") {
          ci.centralizer = parse_big(l, v);
          have_cent = true;
        } else if (k == "powers") {
          std::stringstream ss(v);
          std::string item;
          while (std::getline(ss, item, ',')) {
            std::size_t c = item.find(':');
            if (c == std::string::npos) throw at(l.number, l.value_col, "bad power map entry '" + item + "'");
            pw.emplace_back(parse_u64(l, item.substr(0, c)), item.substr(c + 1));
          }
        } else {
          throw at(l.number, l.value_col, "unknown class field '" + k + "'");
        }
      }
      if (!have_ord || !have_cent || ci.centralizer <= 0) throw at(l.number, l.value_col, "class needs order and centralizer");
      t.classes.push_back(std::move(ci));
      powers.push_back(std::move(pw));
    } else if (l.key == "character") {
      auto w = split_ws(l.value);
      if (w.size() < 2) throw at(l.number, l.value_col, "expected 'character: <label> <values...>'");
      t.labels.push_back(w[0]);
      std::vector<Cyclotomic> row;
      for (std::size_t i = 1; i < w.size(); ++i) {
        try {
          row.push_back(Cyclotomic::parse(w[i]));
        } catch (const InputError& e) {
          throw at(l.number, l.value_col, "value " + std::to_string(i) + ": " + e.what());
        }
      }
      t.irr.push_back(std::move(row));
    } else {
      throw at(l.number, 1, "unknown key '" + l.key + "'");
    }
  }
  if (!have_order) throw InputError("line 1, column 1: missing 'order:'");
  for (auto& c : t.classes) {
    if (t.order % c.centralizer != 0) throw ValidationError("class " + c.label + ": centralizer does not divide |G|");
    c.size = t.order / c.centralizer;
  }
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    for (const auto& [p, lab] : powers[c]) t.classes[c].power_map[p] = t.class_index(lab);
  t.provenance.clear();
  for (std::size_t i = 0; i < provenance.size(); ++i) t.provenance += (i ? "\n" : "") + provenance[i];
  t.verify();
  t.derive_inverse_classes();
  return t;
}

std::string serialize_table_file(const CharacterTable& t) {
  std::string s;
  if (!t.provenance.empty()) {
    std::istringstream in(t.provenance);
    std::string line;
    while (std::getline(in, line)) s += "# provenance: " + line + "\n";
  }
  s += "name: " + t.name + "\n";
  s += "order: " + t.order.get_str() + "\n";
  for (const auto& c : t.classes) {
    s += "class: " + c.label + " order=" + std::to_string(c.element_order) + " centralizer=" + c.centralizer.get_str();
    if (!c.power_map.empty()) {
      s += " powers=";
      bool first = true;
      for (const auto& [p, img] : c.power_map) {
        s += (first ? "" : ",") + std::to_string(p) + ":" + t.classes[img].label;
        first = false;
      }
    }
    s += "\n";
  }
  for (std::size_t i = 0; i < t.irr.size(); ++i) {
    s += "character: " + t.labels[i];
    for (const auto& v : t.irr[i]) s += " " + v.str();
    s += "\n";
  }
  return s;
}

CharacterTable read_table_file(const std::filesystem::path& path) {
  try {
    return parse_table_file(read_all(path));
  } catch (const InputError& e) {
    throw InputError(with_path(path, e));
  } catch (const ValidationError& e) {
    throw ValidationError(with_path(path, e));
  }
}

ModularData parse_modular_file(std::string_view text) {
  ModularData m;
  auto lines = keyed_lines(text, m.provenance);
  std::vector<std::pair<const Line*, std::string>> cartan;
  for (const Line& l : lines) {
    if (l.key == "group") {
      m.group = l.value;
    } else if (l.key == "prime") {
      m.prime = parse_u64(l, l.value);
      if (!is_prime(m.prime)) throw at(l.number, l.value_col, "not a prime");
    } else if (l.key == "degrees") {
      for (const auto& w : split_ws(l.value)) {
        BigInt d = parse_big(l, w);
        if (d <= 0) throw at(l.number, l.value_col, "Brauer degrees must be positive");
        m.brauer_degrees.push_back(d);
      }
    } else if (l.key == "cartan") {
      for (const auto& w : split_ws(l.value)) cartan.emplace_back(&l, w);
    } else {
      throw at(l.number, 1, "unknown key '" + l.key + "'");
    }
  }
  for (const auto& [l, w] : cartan) {
    std::size_t eq = w.find('=');
    if (eq == std::string::npos) throw at(l->number, l->value_col, "expected <degree>=<entry>");
    BigInt deg = parse_big(*l, w.substr(0, eq)), val = parse_big(*l, w.substr(eq + 1));
    if (val <= 0) throw at(l->number, l->value_col, "Cartan entries must be positive");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m.brauer_degrees.size(); ++i)
      if (m.brauer_degrees[i] == deg) idx.push_back(i);
    if (idx.size() != 1) throw at(l->number, l->value_col, "Cartan degree " + deg.get_str() + " is not a unique Brauer degree");
    m.cartan_diagonal.emplace_back(idx[0], val);
  }
  if (m.prime == 0) throw InputError("line 1, column 1: missing 'prime:'");
  return m;
}

std::string serialize_modular_file(const ModularData& m) {
  std::string s;
  for (const auto& p : m.provenance) s += "# provenance: " + p + "\n";
  s += "group: " + m.group + "\n";
  s += "prime: " + std::to_string(m.prime) + "\n";
  s += "degrees:";
  for (const auto& d : m.brauer_degrees) s += " " + d.get_str();
  s += "\n";
  if (!m.cartan_diagonal.empty()) {
    s += "cartan:";
    for (const auto& [i, v] : m.cartan_diagonal) s += " " + m.brauer_degrees[i].get_str() + "=" + v.get_str();
    s += "\n";
  }
  return s;
}

ModularData read_modular_file(const std::filesystem::path& path) {
  try {
    return parse_modular_file(read_all(path));
  } catch (const InputError& e) {
    throw InputError(with_path(path, e));
  }
}

}  // namespace sgc
