#pragma once

#include "cli/cli.hpp"

#include <json.hpp>

namespace polylie::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Report& r);
std::string tsv_report_header();
std::string to_tsv(const Report& r);

/// Worst verdict: FAIL over UNSUPPORTED over PASS.
std::string overall_verdict(const std::vector<Report>& reports);

void print_reports(const std::string& command, const std::vector<Report>& reports, Format format, std::ostream& out);
/// A computed expression: the bare result in TSV, an object in JSON.
void print_value(const std::string& command, const std::string& input, const std::string& result, Format format,
                 std::ostream& out);

}  // namespace polylie::cli
