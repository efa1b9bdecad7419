#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "sgc/cache.hpp"
#include "sgc/errors.hpp"
#include "sgc/io.hpp"
#include "sgc/report.hpp"

using namespace sgc;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("sgc-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(d);
  return d;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(GroupFiles, ShippedFilesRoundTrip) {
  for (const char* name : {"M12", "J2", "M24", "L3_2", "L3_3", "PGL2_9", "A7", "S7"}) {
    auto f = catalog_group(name);
    auto text = serialize_group_file(f);
    EXPECT_EQ(parse_group_file(text), f) << name;
    EXPECT_EQ(serialize_group_file(parse_group_file(text)), text) << name;
    EXPECT_FALSE(f.provenance.empty()) << name;
  }
  EXPECT_EQ(build_group(catalog_group("M12")).order(), 95040);
}

TEST(GroupFiles, TrivialAndMalformed) {
  auto f = parse_group_file("degree: 1\n");
  EXPECT_TRUE(build_group(f).is_trivial());
  try {
    parse_group_file("degree: 4\ngen: (1,2,2)\n");
    FAIL() << "expected a parse error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_group_file("degree: 3\nfoo: 1\n"), InputError);
  EXPECT_THROW(parse_group_file("gen: (1,2)\n"), InputError);
  EXPECT_THROW(catalog_group("NoSuchGroup"), InputError);
}

TEST(GroupFiles, ClassPinMismatchNamesTheClass) {
  auto f = parse_group_file("degree: 4\ngen: (1,2,3,4)\ngen: (1,2)\nclass: 2A 5\n");
  Group G = build_group(f);
  try {
    pinned_class_data(f, G);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("2A"), std::string::npos);
  }
}

TEST(TableFiles, TrivialGroupAndPerturbation) {
  auto t = parse_table_file("name: 1\norder: 1\nclass: 1A order=1 centralizer=1\ncharacter: 1a 1\n");
  EXPECT_EQ(t.num_characters(), 1u);
  auto G = Group::symmetric(4);
  auto cd = ClassData::compute(G);
  auto text = serialize_table_file(*character_table(cd, {}, "S4"));
  EXPECT_EQ(serialize_table_file(parse_table_file(text)), text);
  // Change one value of the sign character.
  auto pos = text.find("character: 1b 1 ");
  ASSERT_NE(pos, std::string::npos);
  auto bad = text;
  bad.replace(pos, 16, "character: 1b 2 ");
  EXPECT_THROW(parse_table_file(bad), ValidationError);
}

TEST(TableFiles, HeXi) {
  auto t = read_table_file(data_dir() / "tables" / "He.tbl");
  EXPECT_EQ(t.order, BigInt("4030387200"));
  EXPECT_EQ(t.num_classes(), 33u);
  EXPECT_EQ(class_mult_coefficient(t, t.class_index("3A"), t.class_index("3A"), t.class_index("3B")), 168);
  auto text = serialize_table_file(t);
  EXPECT_EQ(serialize_table_file(parse_table_file(text)), text);
}

TEST(ModularFiles, M12ModTwo) {
  auto m = read_modular_file(data_dir() / "modular" / "M12_mod2.mod");
  EXPECT_EQ(m.prime, 2u);
  EXPECT_EQ(m.brauer_degrees, (std::vector<BigInt>{1, 10, 16, 16, 44, 144}));
  ASSERT_EQ(m.cartan_diagonal.size(), 1u);
  EXPECT_EQ(m.brauer_degrees[m.cartan_diagonal[0].first], 144);
  EXPECT_EQ(m.cartan_diagonal[0].second, 2);
  EXPECT_EQ(parse_modular_file(serialize_modular_file(m)), m);
  EXPECT_THROW(parse_modular_file("group: X\nprime: 2\ndegrees: 1 0\n"), InputError);
  EXPECT_THROW(parse_modular_file("group: X\nprime: 4\ndegrees: 1\n"), InputError);
  EXPECT_THROW(parse_modular_file("group: X\nprime: 2\ndegrees: 1 16 16\ncartan: 16=2\n"), InputError);
}

TEST(Cache, HitsMissesAndVerification) {
  auto dir = temp_dir("cache");
  Cache c(dir, 0.0);
  int computed = 0;
  auto compute = [&] {
    ++computed;
    return std::string("payload\n");
  };
  EXPECT_EQ(c.fetch("k", "input", compute), "payload\n");
  EXPECT_EQ(c.fetch("k", "input", compute), "payload\n");
  EXPECT_EQ(computed, 1);
  EXPECT_EQ(c.hits, 1u);
  EXPECT_EQ(c.misses, 1u);
  EXPECT_NE(c.key("k", "input"), c.key("k", "input2"));
  EXPECT_NE(c.key("k", "input"), c.key("j", "input"));

  // A tampered entry is caught by a verifying cache.
  std::ofstream(dir / (c.key("k", "input") + ".txt")) << "engine: " << kEngineVersion << "\ntampered\n";
  Cache verifying(dir, 1.0);
  EXPECT_THROW(verifying.fetch("k", "input", compute), ValidationError);
  std::filesystem::remove_all(dir);
}

TEST(Cache, TableThroughCacheIsIdentical) {
  auto dir = temp_dir("table");
  auto f = catalog_group("A7");
  Group G = build_group(f);
  auto cd = pinned_class_data(f, G);
  Cache c(dir, 1.0);
  auto a = cached_table(f, cd, &c);
  auto b = cached_table(f, cd, &c);
  EXPECT_EQ(c.misses, 1u);
  EXPECT_EQ(c.verified, 1u);
  EXPECT_EQ(serialize_table_file(*a), serialize_table_file(*b));
  EXPECT_EQ(serialize_table_file(*b), serialize_table_file(*pinned_table(f, cd)));
  EXPECT_TRUE(b->class_data.has_value());
  std::filesystem::remove_all(dir);
}

TEST(Reports, EmptyReportHasVersionHeader) {
  Report r;
  EXPECT_EQ(emit_report(r, ReportFormat::kText), "# sgc report, schema 1\n");
  auto j = nlohmann::json::parse(emit_report(r, ReportFormat::kJson));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_TRUE(j["sections"].empty());
  EXPECT_TRUE(j["prime"].is_null());
}

TEST(Reports, DeterministicAndSchemaShaped) {
  auto f = catalog_group("A7");
  Group G = build_group(f);
  auto cd = pinned_class_data(f, G);
  auto t = pinned_table(f, cd);
  Report r{"blocks", "A7", 7, {}};
  r.sections.push_back(classes_section(cd));
  r.sections.push_back(blocks_section(*t, p_blocks(*t, 7)));
  auto text = emit_report(r, ReportFormat::kText);
  EXPECT_EQ(text, emit_report(r, ReportFormat::kText));
  EXPECT_NE(text.find("== blocks =="), std::string::npos);
  auto j = nlohmann::json::parse(emit_report(r, ReportFormat::kJson));
  auto schema = nlohmann::json::parse(slurp(std::filesystem::path(SGC_DATA_DIR).parent_path() / "docs" / "report_schema.json"));
  for (const auto& req : schema["required"]) EXPECT_TRUE(j.contains(req.get<std::string>())) << req;
  for (const auto& s : j["sections"])
    for (const auto& req : schema["properties"]["sections"]["items"]["required"]) EXPECT_TRUE(s.contains(req.get<std::string>()));
  EXPECT_EQ(j["sections"][1]["rows"].size(), 5u);
}
