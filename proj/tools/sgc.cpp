// Command-line front end. Exit codes: 0 ok, 2 resource bound, 3 validation or input failure,
// 4 a --expect value did not match.
#include <boost/program_options.hpp>

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>

#include "sgc/cache.hpp"
#include "sgc/errors.hpp"
#include "sgc/io.hpp"
#include "sgc/report.hpp"
#include "sgc/subgroups.hpp"

namespace po = boost::program_options;
using namespace sgc;

namespace {

constexpr int kExitResource = 2;
constexpr int kExitValidation = 3;
constexpr int kExitMismatch = 4;

const char* kUsage = R"(usage: sgc <command> <group> [args] [options]

commands:
  info <group>                 order, degree, generators
  classes <group>              conjugacy classes
  chartab <group>              character table (group or shipped table)
  xi <group> <A> <B> <C>       class multiplication coefficient
  blocks <group>               p-blocks and defects (--prime)
  collection <group>           p-subgroup collection (--prime, --collection-kind)
  complex <group>              simplex orbits of the order complex
  fixed <group> <class>        fixed set of a class representative
  lefschetz <group>            reduced Lefschetz character and Euler cross-check
  projectivity <group>         block distribution and projectivity criteria
  vertices <group>             fixed sets of purely noncentral p-subgroups
  report <group>               all of the above that apply

<group> is a shipped name (M12, J2, M24, L3_2, L3_3, PGL2_9, A7, S7, He, Sn, An) or a
path to a group file.
)";

struct Session {
  std::string name;
  Context ctx;
  std::unique_ptr<Cache> cache;
  std::optional<std::uint64_t> prime;
  CollectionKind kind = CollectionKind::kDistinguishedBouc;
  LandrockAction action = LandrockAction::kConjugation;

  std::optional<GroupFile> file;
  std::optional<Group> G;
  std::optional<ClassData> cd;
  TablePtr table;
  std::shared_ptr<const PSubgroupLattice> lattice;
  std::optional<PCentralData> central;
  std::shared_ptr<const Collection> collection;
  std::shared_ptr<const OrderComplex> complex;

  std::uint64_t p() {
    if (!prime) throw InputError("this command needs --prime");
    return *prime;
  }
  bool has_group_file() {
    if (file) return true;
    std::filesystem::path path(name);
    if (std::filesystem::is_regular_file(path)) {
      file = read_group_file(path);
      return true;
    }
    try {
      file = catalog_group(name);
      return true;
    } catch (const InputError&) {
      if (std::filesystem::exists(table_path())) return false;
      throw;
    }
  }
  std::filesystem::path table_path() const { return data_dir() / "tables" / (name + ".tbl"); }
  const GroupFile& group_file() {
    if (!has_group_file()) throw InputError("'" + name + "' ships only a character table");
    return *file;
  }
  const Group& group() {
    if (!G) G = build_group(group_file());
    return *G;
  }
  const ClassData& classes() {
    if (!cd) cd = pinned_class_data(group_file(), group(), ctx);
    return *cd;
  }
  TablePtr chartab() {
    if (table) return table;
    if (!has_group_file()) {
      table = std::make_shared<CharacterTable>(read_table_file(table_path()));
    } else {
      table = cached_table(group_file(), classes(), cache.get(), ctx);
    }
    return table;
  }
  const Collection& coll() {
    if (collection) return *collection;
    if (!lattice) lattice = std::make_shared<const PSubgroupLattice>(p_subgroup_classes(group(), p(), ctx, &classes()));
    if (!central) central = p_central_classes(classes(), p(), ctx);
    CollectionSpec spec;
    spec.p = p();
    spec.kind = kind;
    collection = std::make_shared<const Collection>(build_collection(classes(), spec, lattice, *central, ctx));
    return *collection;
  }
  // Full mode when it fits the bounds, otherwise orbit mode (no fixed sets).
  std::shared_ptr<const OrderComplex> order(bool need_full) {
    if (complex && (complex->mode == ComplexMode::kFull || !need_full)) return complex;
    coll();
    try {
      complex = std::make_shared<const OrderComplex>(order_complex(collection, ComplexMode::kFull, ctx));
    } catch (const ResourceError&) {
      if (need_full) throw;
      complex = std::make_shared<const OrderComplex>(order_complex(collection, ComplexMode::kOrbit, ctx));
    }
    return complex;
  }
  std::optional<ModularData> modular() {
    auto path = data_dir() / "modular" / (name + "_mod" + std::to_string(p()) + ".mod");
    if (!std::filesystem::exists(path)) return std::nullopt;
    return read_modular_file(path);
  }
};

std::vector<ReportSection> lefschetz_sections(Session& s, bool crosscheck) {
  auto K = s.order(false);
  auto L = lefschetz_character(s.chartab(), *K, s.ctx);
  std::vector<EulerRow> rows;
  if (crosscheck && K->mode == ComplexMode::kFull) rows = euler_crosscheck(L, K, s.ctx.bounds);
  std::vector<ReportSection> out{lefschetz_section(L, rows.empty() ? nullptr : &rows)};
  if (K->mode != ComplexMode::kFull) out.back().notes.push_back("complex too large to expand; Euler cross-check skipped");
  out.push_back(projectivity_section(block_distribution(L, p_blocks(*s.chartab(), s.p()))));
  return out;
}

std::vector<ReportSection> projectivity_sections(Session& s) {
  std::vector<ReportSection> out;
  const Group& G = s.group();
  const std::uint64_t p = s.p();
  auto mod = s.modular();
  std::vector<std::pair<std::string, Group>> subs{{"Sylow " + std::to_string(p) + "-subgroup", sylow(G, p, s.ctx).group}};
  const auto& c = s.coll();
  for (std::size_t m : c.members) {
    const auto& q = c.lattice->classes[m];
    if (q.normalizer.order() != subs[0].second.order())
      subs.emplace_back("N(Q), |Q| = " + std::to_string(q.order), q.normalizer);
  }
  for (auto& [label, H] : subs) {
    std::optional<std::uint64_t> cartan;
    if (mod) {
      std::vector<std::uint64_t> degrees;
      for (const auto& d : mod->brauer_degrees) degrees.push_back(d.get_ui());
      auto surviving = robinson_webb_screen(H.order(), p, degrees);
      out.push_back(screen_section(H.order(), p, degrees, surviving));
      out.back().title += " for " + label;
      if (surviving.size() == 1)
        for (auto [idx, entry] : mod->cartan_diagonal)
          if (mod->brauer_degrees[idx] == surviving[0]) cartan = entry.get_ui();
    }
    out.push_back(double_coset_section(label, H.order(), robinson_double_coset_bound(G, H, p, cartan, s.ctx)));
  }
  if (!mod) {
    ReportSection note("projective cover screen");
    note.notes.push_back("skipped: no Brauer degrees shipped for " + s.name + " mod " + std::to_string(p));
    out.push_back(note);
  }
  out.push_back(landrock_section(landrock_test(s.classes(), p, s.action, s.ctx), s.classes()));
  return out;
}

bool check_expectations(const Report& r, const std::vector<std::string>& expects) {
  bool ok = true;
  for (const auto& e : expects) {
    auto eq = e.find('=');
    if (eq == std::string::npos) throw InputError("--expect wants key=value, got '" + e + "'");
    std::string key = e.substr(0, eq), want = e.substr(eq + 1);
    std::optional<std::string> got;
    for (const auto& sec : r.sections)
      if (sec.facts.contains(key)) {
        const auto& v = sec.facts[key];
        got = v.is_string() ? v.get<std::string>() : v.dump();
        if (*got == want) break;
      }
    if (!got || *got != want) {
      std::cerr << "sgc: expectation " << key << "=" << want << " not met (got " << (got ? *got : "nothing") << ")\n";
      ok = false;
    }
  }
  return ok;
}

int run(int argc, char** argv) {
  po::options_description opts("options");
  opts.add_options()("help,h", "show help")("prime,p", po::value<std::uint64_t>(), "prime")(
      "collection-kind,k", po::value<std::string>()->default_value("distinguished-bouc"),
      "quillen, benson, bouc, distinguished-bouc, centric-radical")("json", "emit JSON instead of text")(
      "cache-dir", po::value<std::string>(), "cache directory for character tables")(
      "seed", po::value<std::uint64_t>()->default_value(1), "random seed (affects running time only)")(
      "bounds", po::value<std::string>()->default_value(""), "resource limits, e.g. vertices=1000,orbit=1e6")(
      "landrock-action", po::value<std::string>()->default_value("conjugation"), "conjugation or left-multiplication")(
      "no-crosscheck", "skip the Euler cross-check in lefschetz")(
      "expect", po::value<std::vector<std::string>>()->composing(), "key=value a reported fact must equal (exit 4 otherwise)");
  po::options_description hidden;
  hidden.add_options()("args", po::value<std::vector<std::string>>(), "");
  po::options_description all;
  all.add(opts).add(hidden);
  po::positional_options_description pos;
  pos.add("args", -1);
  po::variables_map vm;
  po::store(po::command_line_parser(argc, argv).options(all).positional(pos).run(), vm);
  po::notify(vm);
  auto args = vm.count("args") ? vm["args"].as<std::vector<std::string>>() : std::vector<std::string>{};
  if (vm.count("help") || args.size() < 2) {
    std::cout << kUsage << "\n" << opts;
    return args.empty() && !vm.count("help") ? kExitValidation : 0;
  }
  const std::string cmd = args[0];
  Session s;
  s.name = args[1];
  s.ctx.bounds = Bounds::parse(vm["bounds"].as<std::string>());
  s.ctx.seed = vm["seed"].as<std::uint64_t>();
  if (vm.count("prime")) s.prime = vm["prime"].as<std::uint64_t>();
  if (s.prime && !is_prime(*s.prime)) throw InputError(std::to_string(*s.prime) + " is not prime");
  s.kind = parse_collection_kind(vm["collection-kind"].as<std::string>());
  const auto action = vm["landrock-action"].as<std::string>();
  if (action == "left-multiplication") s.action = LandrockAction::kLeftMultiplication;
  else if (action != "conjugation") throw InputError("unknown Landrock action '" + action + "'");
  if (vm.count("cache-dir")) s.cache = std::make_unique<Cache>(vm["cache-dir"].as<std::string>(), 0.1, s.ctx.seed);

  Report r{cmd, s.name, s.prime, {}};
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw InputError(cmd + " takes " + std::to_string(n - 1) + " argument(s)");
  };
  auto fixed_of = [&](const std::string& label) {
    auto K = s.order(true);
    const auto& cd = s.classes();
    auto F = fixed_subcomplex(K, cd[cd.find(label)].representative, s.ctx.bounds);
    return fixed_section(F, label, s.p(), s.ctx.bounds);
  };
  if (cmd == "info") {
    need(2);
    r.sections.push_back(info_section(s.group(), nullptr));
  } else if (cmd == "classes") {
    need(2);
    r.sections.push_back(classes_section(s.classes()));
  } else if (cmd == "chartab") {
    need(2);
    r.sections.push_back(table_section(*s.chartab()));
  } else if (cmd == "xi") {
    need(5);
    auto t = s.chartab();
    r.sections.push_back(xi_section(*t, t->class_index(args[2]), t->class_index(args[3]), t->class_index(args[4])));
  } else if (cmd == "blocks") {
    need(2);
    r.sections.push_back(blocks_section(*s.chartab(), p_blocks(*s.chartab(), s.p())));
  } else if (cmd == "collection") {
    need(2);
    r.sections.push_back(collection_section(s.coll(), s.classes()));
  } else if (cmd == "complex") {
    need(2);
    r.sections.push_back(collection_section(s.coll(), s.classes()));
    r.sections.push_back(complex_section(*s.order(false)));
  } else if (cmd == "fixed") {
    need(3);
    r.sections.push_back(fixed_of(args[2]));
  } else if (cmd == "lefschetz") {
    need(2);
    for (auto& sec : lefschetz_sections(s, !vm.count("no-crosscheck"))) r.sections.push_back(std::move(sec));
  } else if (cmd == "projectivity") {
    need(2);
    for (auto& sec : lefschetz_sections(s, false)) r.sections.push_back(std::move(sec));
    for (auto& sec : projectivity_sections(s)) r.sections.push_back(std::move(sec));
  } else if (cmd == "vertices") {
    need(2);
    r.sections.push_back(vertex_section(vertex_report(s.order(true), s.classes(), s.ctx)));
  } else if (cmd == "report") {
    need(2);
    r.sections.push_back(info_section(s.group(), &s.classes()));
    r.sections.push_back(classes_section(s.classes()));
    if (s.prime) {
      r.sections.push_back(blocks_section(*s.chartab(), p_blocks(*s.chartab(), s.p())));
      r.sections.push_back(collection_section(s.coll(), s.classes()));
      r.sections.push_back(complex_section(*s.order(false)));
      for (auto& sec : lefschetz_sections(s, !vm.count("no-crosscheck"))) r.sections.push_back(std::move(sec));
      if (s.complex->mode == ComplexMode::kFull)
        r.sections.push_back(vertex_section(vertex_report(s.complex, s.classes(), s.ctx)));
    }
  } else {
    throw InputError("unknown command '" + cmd + "'");
  }
  std::cout << emit_report(r, vm.count("json") ? ReportFormat::kJson : ReportFormat::kText);
  if (s.cache && s.cache->hits + s.cache->misses)
    std::cerr << "sgc: cache " << s.cache->hits << " hit(s), " << s.cache->misses << " miss(es), " << s.cache->verified
              << " verified\n";
  if (vm.count("expect") && !check_expectations(r, vm["expect"].as<std::vector<std::string>>())) return kExitMismatch;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ResourceError& e) {
    std::cerr << "sgc: resource bound: " << e.what() << "\n";
    return kExitResource;
  } catch (const po::error& e) {
    std::cerr << "sgc: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "sgc: " << e.what() << "\n";
    return kExitValidation;
  }
}
