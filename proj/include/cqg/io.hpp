#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqg/algebra.hpp"
#include "cqg/groups.hpp"
#include "cqg/report.hpp"

namespace cqg::io {

inline constexpr const char* kAlgebraSchema = "cqg.algebra/1";
inline constexpr const char* kGroupSchema = "cqg.group/1";
inline constexpr const char* kReportSchema = "cqg.report/1";

// Structure tensors are stored as sparse [i, j, k, re, im] rows, the antipode
// and star as dense rows of [re, im] pairs.
nlohmann::json algebra_to_json(const HopfAlgebraData& data);
// Throws SchemaMismatch, MalformedFile or DimensionMismatch.
HopfAlgebraData algebra_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const GroupTable& g);
// Validates the table; throws SchemaMismatch, MalformedFile or InvalidGroupTable.
GroupTable group_from_json(const nlohmann::json& j);

struct RunInfo {
  std::string operation;
  std::map<std::string, std::string> inputs;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::map<std::string, std::string> conventions;
};

nlohmann::json report_to_json(const RunInfo& info, const std::vector<Report>& sections);
std::vector<Report> reports_from_json(const nlohmann::json& j);
// One row per check: section,check,residual,tolerance,pass.
std::string report_to_csv(const std::vector<Report>& sections);

// File helpers; read errors throw MalformedFile.
nlohmann::json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

HopfAlgebraData load_algebra(const std::string& path);
void save_algebra(const std::string& path, const HopfAlgebraData& data);
GroupTable load_group(const std::string& path);
void save_group(const std::string& path, const GroupTable& g);

}  // namespace cqg::io
