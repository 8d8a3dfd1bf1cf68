#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "envelope/error.hpp"
#include "envelope/harness.hpp"

namespace envelope {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::Error: return "error";
  }
  return "error";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "pass") return Verdict::Pass;
  if (text == "fail") return Verdict::Fail;
  if (text == "skipped") return Verdict::Skipped;
  if (text == "error") return Verdict::Error;
  throw Error(ErrorCode::MalformedInput, "unknown verdict \"" + text + "\"");
}

nlohmann::json CheckReport::to_json(bool with_timing) const {
  nlohmann::json doc{{"type", "check"},
                     {"check_id", check_id},
                     {"group", group_name},
                     {"subgroup_generators", subgroup_generators},
                     {"parameters", parameters},
                     {"verdict", to_string(verdict)}};
  if (!reason.empty()) doc["reason"] = reason;
  if (verdict == Verdict::Fail || !witness.empty()) doc["witness"] = witness;
  if (with_timing) doc["runtime_ms"] = runtime_ms;
  return doc;
}

CheckReport CheckReport::from_json(const nlohmann::json& doc) {
  try {
    CheckReport r;
    r.check_id = doc.at("check_id").get<std::string>();
    r.group_name = doc.at("group").get<std::string>();
    r.subgroup_generators = doc.at("subgroup_generators").get<std::vector<std::string>>();
    r.parameters = doc.value("parameters", nlohmann::json::object());
    r.verdict = parse_verdict(doc.at("verdict").get<std::string>());
    r.reason = doc.value("reason", std::string());
    r.witness = doc.value("witness", std::vector<std::string>());
    r.runtime_ms = doc.value("runtime_ms", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("malformed check report: ") + e.what());
  }
}

void ReportSummary::add(Verdict v) {
  switch (v) {
    case Verdict::Pass: ++pass; break;
    case Verdict::Fail: ++fail; break;
    case Verdict::Skipped: ++skipped; break;
    case Verdict::Error: ++error; break;
  }
}

nlohmann::json ReportSummary::to_json() const {
  return {{"type", "summary"}, {"pass", pass},   {"fail", fail},
          {"skipped", skipped}, {"error", error}, {"total", total()}};
}

ReportSummary summarize(const std::vector<CheckReport>& reports) {
  ReportSummary s;
  for (const auto& r : reports) s.add(r.verdict);
  return s;
}

namespace {

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

void write_report_lines(std::ostream& out, const std::vector<CheckReport>& reports,
                        const nlohmann::json& run_info, bool with_timing) {
  nlohmann::json header{{"type", "header"}, {"timestamp", utc_timestamp()}, {"run", run_info}};
  out << header.dump() << '\n';
  for (const auto& r : reports) out << r.to_json(with_timing).dump() << '\n';
  out << summarize(reports).to_json().dump() << '\n';
}

}  // namespace envelope
