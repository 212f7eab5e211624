#include "cli/output.hpp"

#include <ostream>
#include <sstream>

namespace polylie::cli {

namespace {

std::string escape_tsv(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

Json to_json(const Report& r) {
  Json j;
  j["name"] = r.name;
  j["verdict"] = r.verdict;
  j["label"] = r.label;
  j["points"] = r.points ? Json(*r.points) : Json(nullptr);
  j["max_abs_value"] = r.max_abs_value ? Json(*r.max_abs_value) : Json(nullptr);
  j["tolerance"] = r.tolerance ? Json(*r.tolerance) : Json(nullptr);
  j["detail"] = r.detail;
  Json facts = Json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  j["facts"] = facts;
  return j;
}

std::string tsv_report_header() { return "name\tverdict\tlabel\tpoints\tmax_abs_value\ttolerance\tdetail\tfacts"; }

std::string to_tsv(const Report& r) {
  std::string facts;
  for (const auto& [k, v] : r.facts) facts += (facts.empty() ? "" : ";") + k + "=" + v;
  return r.name + "\t" + r.verdict + "\t" + r.label + "\t" + (r.points ? std::to_string(*r.points) : "-") + "\t" +
         (r.max_abs_value ? format_double(*r.max_abs_value) : "-") + "\t" +
         (r.tolerance ? format_double(*r.tolerance) : "-") + "\t" + escape_tsv(r.detail.empty() ? "-" : r.detail) +
         "\t" + escape_tsv(facts.empty() ? "-" : facts);
}

std::string overall_verdict(const std::vector<Report>& reports) {
  std::string out = "PASS";
  for (const auto& r : reports) {
    if (r.verdict == "FAIL") return "FAIL";
    if (r.verdict == "UNSUPPORTED") out = "UNSUPPORTED";
  }
  return out;
}

void print_reports(const std::string& command, const std::vector<Report>& reports, Format format, std::ostream& out) {
  if (format == Format::Json) {
    Json j;
    j["command"] = command;
    j["verdict"] = overall_verdict(reports);
    j["reports"] = Json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    out << j.dump(2) << "\n";
    return;
  }
  out << tsv_report_header() << "\n";
  for (const auto& r : reports) out << to_tsv(r) << "\n";
}

void print_value(const std::string& command, const std::string& input, const std::string& result, Format format,
                 std::ostream& out) {
  if (format == Format::Json) {
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["result"] = result;
    out << j.dump(2) << "\n";
    return;
  }
  out << result << "\n";
}

}  // namespace polylie::cli
