#pragma once

#include <ctime>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "balid/catalog.hpp"
#include "balid/identity.hpp"

namespace balid {

inline constexpr const char* kVersion = "0.1.0";

struct Report {
  std::string version;
  std::string timestamp;
  std::vector<CheckResult> results;
  long long pass_count = 0;
  long long fail_count = 0;

  bool all_pass() const { return fail_count == 0; }

  friend bool operator==(const Report& a, const Report& b) {
    if (a.version != b.version || a.timestamp != b.timestamp ||
        a.pass_count != b.pass_count || a.fail_count != b.fail_count ||
        a.results.size() != b.results.size())
      return false;
    for (std::size_t i = 0; i < a.results.size(); ++i) {
      const CheckResult& x = a.results[i];
      const CheckResult& y = b.results[i];
      if (x.id != y.id || x.grid != y.grid || x.pass != y.pass || x.millis != y.millis ||
          x.counterexample.has_value() != y.counterexample.has_value())
        return false;
      if (x.counterexample &&
          (x.counterexample->params != y.counterexample->params ||
           x.counterexample->lhs != y.counterexample->lhs ||
           x.counterexample->rhs != y.counterexample->rhs))
        return false;
    }
    return true;
  }
};

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Report make_report(std::vector<CheckResult> results,
                          std::string timestamp = utc_timestamp()) {
  Report r;
  r.version = kVersion;
  r.timestamp = std::move(timestamp);
  r.results = std::move(results);
  for (const auto& cr : r.results) (cr.pass ? r.pass_count : r.fail_count)++;
  return r;
}

inline nlohmann::json report_to_json(const Report& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& cr : report.results) {
    nlohmann::json item = {{"id", cr.id},
                           {"grid", cr.grid},
                           {"status", cr.pass ? "pass" : "fail"},
                           {"millis", cr.millis}};
    if (cr.counterexample)
      item["counterexample"] = {{"params", cr.counterexample->params},
                                {"lhs", cr.counterexample->lhs},
                                {"rhs", cr.counterexample->rhs}};
    results.push_back(std::move(item));
  }
  return nlohmann::json{{"version", report.version},
                        {"timestamp", report.timestamp},
                        {"results", std::move(results)},
                        {"summary", {{"pass", report.pass_count}, {"fail", report.fail_count}}}};
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.version = j.at("version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& item : j.at("results")) {
    CheckResult cr;
    cr.id = item.at("id").get<std::string>();
    cr.grid = item.at("grid").get<std::string>();
    cr.pass = item.at("status").get<std::string>() == "pass";
    cr.millis = item.at("millis").get<long long>();
    if (item.contains("counterexample")) {
      const auto& ce = item.at("counterexample");
      cr.counterexample = Counterexample{ce.at("params").get<std::string>(),
                                         ce.at("lhs").get<std::string>(),
                                         ce.at("rhs").get<std::string>()};
    }
    r.results.push_back(std::move(cr));
  }
  r.pass_count = j.at("summary").at("pass").get<long long>();
  r.fail_count = j.at("summary").at("fail").get<long long>();
  return r;
}

inline std::string render_report_json(const Report& report) {
  return report_to_json(report).dump(2) + "\n";
}

inline std::string render_report_csv(const Report& report) {
  std::string out = "id,status,counterexample\n";
  for (const auto& cr : report.results) {
    out += cr.id;
    out += cr.pass ? ",pass," : ",fail,";
    if (cr.counterexample)
      out += cr.counterexample->params + " lhs=" + cr.counterexample->lhs +
             " rhs=" + cr.counterexample->rhs;
    out += "\n";
  }
  return out;
}

inline std::string render_report_text(const Report& report) {
  std::string out;
  for (const auto& cr : report.results) {
    out += cr.pass ? "[PASS] " : "[FAIL] ";
    out += cr.id + " (" + cr.grid + ") " + std::to_string(cr.millis) + " ms\n";
    if (cr.counterexample)
      out += "       counterexample: " + cr.counterexample->params +
             "\n       lhs = " + cr.counterexample->lhs +
             "\n       rhs = " + cr.counterexample->rhs + "\n";
  }
  out += "summary: " + std::to_string(report.pass_count) + " pass, " +
         std::to_string(report.fail_count) + " fail\n";
  return out;
}

inline std::string render_report(const Report& report, const std::string& format) {
  if (format == "json") return render_report_json(report);
  if (format == "csv") return render_report_csv(report);
  if (format == "text") return render_report_text(report);
  throw domain_violation("unknown report format: " + format);
}

/// Resolve a verification selection against the catalog. "all" expands to
/// every registered identity; anything unknown throws.
inline std::vector<const IdentitySpec*> select_identities(const std::vector<std::string>& ids) {
  std::vector<const IdentitySpec*> selection;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    for (const auto& spec : builtin_catalog()) selection.push_back(&spec);
    return selection;
  }
  for (const auto& id : ids) selection.push_back(&find_identity(id));
  return selection;
}

/// Run check_identity over a selection and assemble the report. Writes
/// the rendered report to out_path when given.
inline Report run_verify(const std::vector<std::string>& ids, const GridSpec& grid,
                         SequenceCache& cache, const std::string& format = "json",
                         const std::string& out_path = "") {
  std::vector<CheckResult> results;
  for (const IdentitySpec* spec : select_identities(ids))
    results.push_back(check_identity(*spec, grid, cache));
  Report report = make_report(std::move(results));
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write report to " + out_path);
    out << render_report(report, format);
  }
  return report;
}

}  // namespace balid
