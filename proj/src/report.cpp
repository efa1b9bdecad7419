#include "sgc/report.hpp"

#include <algorithm>

namespace sgc {

namespace {

std::string bits(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string counts_str(const std::vector<std::size_t>& v) {
  std::vector<std::string> xs;
  for (auto x : v) xs.push_back(std::to_string(x));
  return "(" + join(xs, ",") + ")";
}

std::string fact_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

Json report_json(const Report& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["engine"] = "sgc";
  j["command"] = r.command;
  j["group"] = r.group;
  j["prime"] = r.prime ? Json(*r.prime) : Json(nullptr);
  j["sections"] = Json::array();
  for (const auto& s : r.sections) {
    Json js;
    js["title"] = s.title;
    js["facts"] = s.facts;
    js["columns"] = s.columns;
    js["rows"] = s.rows;
    js["notes"] = s.notes;
    j["sections"].push_back(std::move(js));
  }
  return j;
}

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::kJson) return report_json(r).dump(2) + "\n";
  std::string out = "# sgc report, schema " + std::to_string(kReportSchemaVersion) + "\n";
  if (!r.command.empty()) out += "# command: " + r.command + "\n";
  if (!r.group.empty()) out += "# group: " + r.group + "\n";
  if (r.prime) out += "# prime: " + std::to_string(*r.prime) + "\n";
  for (const auto& s : r.sections) {
    out += "\n== " + s.title + " ==\n";
    std::size_t w = 0;
    for (auto it = s.facts.begin(); it != s.facts.end(); ++it) w = std::max(w, it.key().size());
    for (auto it = s.facts.begin(); it != s.facts.end(); ++it)
      out += it.key() + ":" + std::string(w + 1 - it.key().size(), ' ') + fact_text(it.value()) + "\n";
    if (!s.columns.empty()) {
      std::vector<std::size_t> width(s.columns.size());
      for (std::size_t c = 0; c < s.columns.size(); ++c) width[c] = s.columns[c].size();
      for (const auto& row : s.rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string l;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          l += cells[c];
          if (c + 1 < cells.size()) l += std::string(width[c] + 2 - cells[c].size(), ' ');
        }
        return l + "\n";
      };
      out += line(s.columns);
      for (const auto& row : s.rows) out += line(row);
    }
    for (const auto& n : s.notes) out += "note: " + n + "\n";
  }
  return out;
}

ReportSection info_section(const Group& G, const ClassData* cd) {
  ReportSection s{"group"};
  s.facts["degree"] = G.degree();
  s.facts["order"] = G.order().get_str();
  std::vector<std::string> f;
  for (auto [p, e] : factorize(G.order_u64())) f.push_back(std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : ""));
  s.facts["factorization"] = join(f, "*");
  std::vector<std::string> gens;
  for (const Perm& g : G.generators()) gens.push_back(g.to_cycles());
  s.facts["generators"] = gens;
  if (cd) s.facts["classes"] = cd->size();
  return s;
}

ReportSection classes_section(const ClassData& cd) {
  ReportSection s{"conjugacy classes"};
  s.facts["count"] = cd.size();
  s.columns = {"class", "order", "size", "centralizer", "powers", "representative"};
  for (std::size_t c = 0; c < cd.size(); ++c) {
    std::vector<std::string> pw;
    for (auto [p, k] : cd[c].power_map) pw.push_back(std::to_string(p) + ":" + cd[k].label);
    s.rows.push_back({cd[c].label, std::to_string(cd[c].element_order), std::to_string(cd[c].size),
                      std::to_string(cd[c].centralizer_order), join(pw, ","), cd[c].representative.to_cycles()});
  }
  return s;
}

ReportSection table_section(const CharacterTable& t) {
  ReportSection s{"character table"};
  s.facts["group"] = t.name;
  s.facts["order"] = t.order.get_str();
  s.facts["characters"] = t.num_characters();
  s.columns.push_back("");
  for (const auto& c : t.classes) s.columns.push_back(c.label);
  for (std::size_t i = 0; i < t.num_characters(); ++i) {
    std::vector<std::string> row{t.labels[i]};
    for (const auto& v : t.irr[i]) row.push_back(v.str());
    s.rows.push_back(std::move(row));
  }
  return s;
}

ReportSection xi_section(const CharacterTable& t, std::size_t a, std::size_t b, std::size_t c) {
  ReportSection s{"class multiplication coefficient"};
  s.facts["classes"] = t.classes[a].label + "," + t.classes[b].label + "," + t.classes[c].label;
  s.facts["xi"] = class_mult_coefficient(t, a, b, c).get_str();
  s.notes.push_back("number of pairs (x, y) in the first two classes with xy equal to a fixed element of the third");
  return s;
}

ReportSection blocks_section(const CharacterTable& t, const BlockPartition& bp) {
  ReportSection s{"blocks"};
  s.facts["prime"] = bp.p;
  s.facts["count"] = bp.blocks.size();
  s.columns = {"block", "defect", "characters"};
  for (std::size_t b = 0; b < bp.blocks.size(); ++b) {
    std::vector<std::string> labs;
    for (auto chi : bp.blocks[b]) labs.push_back(t.labels[chi]);
    s.rows.push_back({std::to_string(b + 1), std::to_string(bp.defects[b]), join(labs, " ")});
  }
  return s;
}

ReportSection collection_section(const Collection& c, const ClassData& cd) {
  ReportSection s{"collection " + to_string(c.spec.kind)};
  s.facts["prime"] = c.spec.p;
  s.facts["classes"] = c.members.size();
  s.facts["subgroups"] = c.total_size().get_str();
  std::vector<std::string> central;
  for (auto k : c.central.central) central.push_back(cd[k].label);
  s.facts["p_central_classes"] = join(central, " ");
  s.columns = {"order", "class size", "|N(Q)|", "|Z(Q)|", "exponent", "elementary", "radical", "centric", "distinguished", "order-p elements"};
  const auto& L = *c.lattice;
  for (std::size_t m : c.members) {
    const auto& q = L.classes[m];
    const auto& f = c.flags[m];
    std::vector<std::string> el;
    for (std::size_t k = 0; k < q.class_counts.size(); ++k)
      if (q.class_counts[k] && cd[k].element_order == c.spec.p) el.push_back(cd[k].label + "x" + std::to_string(q.class_counts[k]));
    s.rows.push_back({std::to_string(q.order), q.orbit_size.get_str(), q.normalizer.order().get_str(),
                      std::to_string(q.center_order), std::to_string(q.exponent), bits(f.elementary_abelian),
                      bits(f.radical), bits(f.centric), bits(f.distinguished), join(el, " ")});
  }
  return s;
}

ReportSection complex_section(const OrderComplex& K) {
  ReportSection s{"order complex"};
  s.facts["mode"] = K.mode == ComplexMode::kFull ? "full" : "orbit";
  std::vector<std::string> counts;
  for (const auto& c : K.simplex_counts) counts.push_back(c.get_str());
  s.facts["simplices_by_dimension"] = counts;
  s.facts["simplex_orbits"] = K.orbits.size();
  s.columns = {"dim", "chain orders", "|stabilizer|", "orbit size"};
  const auto& L = *K.collection->lattice;
  for (const auto& o : K.orbits) {
    std::vector<std::string> ords;
    for (auto sub : o.chain) ords.push_back(std::to_string(L.subgroups[sub].members.size()));
    s.rows.push_back({std::to_string(o.dim()), join(ords, "<"), o.stabilizer.order().get_str(), o.orbit_size.get_str()});
  }
  return s;
}

ReportSection fixed_section(const SubComplex& F, const std::string& what, std::uint64_t p, const Bounds& b) {
  ReportSection s{"fixed set of " + what};
  auto sum = components_and_euler(F.complex);
  s.facts["vertices"] = F.vertices.size();
  s.facts["simplices_by_dimension"] = counts_str([&] {
    std::vector<std::size_t> v;
    for (std::size_t d = 0; d < F.complex.simplices.size(); ++d) v.push_back(F.complex.count(d));
    return v;
  }());
  s.facts["components"] = sum.components;
  s.facts["reduced_euler"] = sum.reduced_euler.get_str();
  auto cert = contractibility_certificate(F.complex, p, b);
  s.facts["reduced_betti_mod_p"] = counts_str(cert.betti);
  s.facts["certificate"] = to_string(cert.level);
  s.columns = {"component", "simplices by dim", "certificate"};
  std::size_t i = 0;
  auto comps = component_complexes(F.complex);
  for (const auto& comp : comps) {
    std::vector<std::size_t> v;
    for (std::size_t d = 0; d < comp.simplices.size(); ++d) v.push_back(comp.count(d));
    s.rows.push_back({std::to_string(++i), counts_str(v), to_string(contractibility_certificate(comp, p, b).level)});
  }
  return s;
}

ReportSection lefschetz_section(const LefschetzCharacter& L, const std::vector<EulerRow>* euler) {
  const auto& t = *L.character.table();
  ReportSection s{"reduced Lefschetz character"};
  s.facts["degree"] = L.degree_from_counts.get_str();
  s.facts["decomposition"] = format_decomposition(t, L.multiplicities);
  if (euler) s.facts["euler_crosscheck"] = "pass";
  s.columns = {"class", "L(g)"};
  if (euler) s.columns = {"class", "L(g)", "fixed vertices", "reduced euler"};
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    std::vector<std::string> row{t.classes[c].label, L.character[c].str()};
    if (euler) {
      row.push_back(std::to_string((*euler)[c].fixed_vertices));
      row.push_back((*euler)[c].reduced_euler.get_str());
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

ReportSection projectivity_section(const ProjectivityReport& r) {
  ReportSection s{"block distribution"};
  s.facts["prime"] = r.p;
  s.columns = {"block", "defect", "component", "vanishes on p-singular"};
  for (const auto& c : r.components) {
    const auto& t = *c.character.table();
    s.rows.push_back({std::to_string(c.block + 1), std::to_string(c.defect), format_decomposition(t, c.multiplicities),
                      c.p_singular_witness ? "no (" + t.classes[*c.p_singular_witness].label + ")" : "yes"});
  }
  return s;
}

ReportSection vertex_section(const std::vector<VertexRow>& rows) {
  ReportSection s{"vertex candidates"};
  s.columns = {"Q", "order-p elements", "|N(Q)|", "fixed vertices", "components", "reduced euler", "certificate", "conclusion"};
  for (const auto& r : rows)
    s.rows.push_back({"order " + std::to_string(r.order), r.description, r.normalizer_order.get_str(),
                      std::to_string(r.fixed_vertices), std::to_string(r.summary.components),
                      r.summary.reduced_euler.get_str(), to_string(r.certificate.level), r.conclusion});
  s.notes.push_back("subgroups containing p-central elements are not listed");
  s.notes.push_back("conclusions concern fixed-point data only; module summands are not counted");
  return s;
}

ReportSection double_coset_section(const std::string& subgroup, const BigInt& order, const DoubleCosetBound& d) {
  ReportSection s{"double cosets of " + subgroup};
  s.facts["order"] = order.get_str();
  s.facts["double_cosets"] = d.double_cosets;
  s.facts["trivial_intersection"] = d.trivial;
  s.facts["d"] = d.coprime;
  if (d.cartan) s.facts["cartan"] = *d.cartan;
  if (d.max_multiplicity) s.facts["max_multiplicity"] = *d.max_multiplicity;
  s.facts["bound"] = d.statement;
  return s;
}

ReportSection screen_section(const BigInt& order, std::uint64_t p, const std::vector<std::uint64_t>& degrees,
                             const std::vector<std::uint64_t>& surviving) {
  ReportSection s{"projective cover screen"};
  s.facts["subgroup_order"] = order.get_str();
  s.facts["p_part"] = p_part(order, p).get_str();
  s.facts["degrees"] = degrees;
  s.facts["surviving"] = surviving;
  return s;
}

ReportSection landrock_section(const LandrockReport& r, const ClassData& cd) {
  ReportSection s{"projective-freeness of the Sylow permutation module"};
  s.facts["action"] = to_string(r.action);
  s.facts["trivial_intersection_cosets"] = r.trivial_cosets;
  s.facts["projective_free"] = r.projective_free;
  if (r.vacuous) s.notes.push_back("no double coset with trivial intersection");
  s.columns = {"coset representative", "section", "elements", "orbits"};
  for (const auto& c : r.counts)
    s.rows.push_back({c.coset_rep.to_cycles(), cd[c.section].label, std::to_string(c.elements), std::to_string(c.orbits)});
  if (r.witness)
    s.facts["witness"] = "section " + cd[r.witness->section].label + " in P" + r.witness->coset_rep.to_cycles() + "P: " +
                         std::to_string(r.witness->orbits) + " orbits";
  return s;
}

}  // namespace sgc
