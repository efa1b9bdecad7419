#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "sgc/blocks.hpp"
#include "sgc/lefschetz.hpp"

namespace sgc {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct ReportSection {
  explicit ReportSection(std::string t = {}) : title(std::move(t)) {}

  std::string title;
  Json facts = Json::object();  // insertion-ordered
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

struct Report {
  std::string command;
  std::string group;
  std::optional<std::uint64_t> prime;
  std::vector<ReportSection> sections;
};

enum class ReportFormat { kText, kJson };

// Deterministic for identical inputs; JSON follows docs/report_schema.json.
std::string emit_report(const Report& r, ReportFormat format);
Json report_json(const Report& r);

ReportSection info_section(const Group& G, const ClassData* cd);
ReportSection classes_section(const ClassData& cd);
ReportSection table_section(const CharacterTable& t);
ReportSection xi_section(const CharacterTable& t, std::size_t a, std::size_t b, std::size_t c);
ReportSection blocks_section(const CharacterTable& t, const BlockPartition& bp);
ReportSection collection_section(const Collection& c, const ClassData& cd);
ReportSection complex_section(const OrderComplex& K);
ReportSection fixed_section(const SubComplex& F, const std::string& what, std::uint64_t p, const Bounds& b = {});
ReportSection lefschetz_section(const LefschetzCharacter& L, const std::vector<EulerRow>* euler);
ReportSection projectivity_section(const ProjectivityReport& r);
ReportSection vertex_section(const std::vector<VertexRow>& rows);
ReportSection double_coset_section(const std::string& subgroup, const BigInt& order, const DoubleCosetBound& d);
ReportSection screen_section(const BigInt& order, std::uint64_t p, const std::vector<std::uint64_t>& degrees,
                             const std::vector<std::uint64_t>& surviving);
ReportSection landrock_section(const LandrockReport& r, const ClassData& cd);

}  // namespace sgc
