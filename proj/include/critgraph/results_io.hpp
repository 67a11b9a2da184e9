#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "critgraph/harness.hpp"
#include "json.hpp"

namespace critgraph {

enum class ResultFormat { json_lines, csv_summary };

ResultFormat parse_result_format(const std::string& name);

nlohmann::json to_json(const VerdictReport& report);
VerdictReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExperimentSpec& spec);
ExperimentSpec spec_from_json(const nlohmann::json& j);

// CSV columns, in order.
extern const std::vector<std::string> kCsvColumns;
std::vector<std::string> csv_row(const VerdictReport& report);

// Writes every report; an empty list yields an empty JSON-lines file or a
// header-only CSV. Throws std::runtime_error naming the path on I/O failure.
void write_results(const std::vector<VerdictReport>& reports, const std::filesystem::path& path,
                   ResultFormat format);

std::vector<VerdictReport> read_results_jsonl(const std::filesystem::path& path);

}  // namespace critgraph
