// Machine-readable verification reports: JSON (schema 1), CSV and a human
// table. Everything except the timing block is byte-deterministic.
#pragma once

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/version.hpp"

namespace schur {

struct ClaimRecord {
  std::string id;      // e.g. "item06/p=3/multiplier"
  std::string group;
  std::string expected;
  std::string computed;
  std::vector<std::string> methods;
  std::string note;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::string tool_version = kVersion;
  std::map<std::string, std::string> config;
  std::vector<ClaimRecord> cases;
  std::string generated_at;  // RFC3339; excluded from comparisons

  int total() const { return static_cast<int>(cases.size()); }
  int passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass ? 1 : 0;
    return n;
  }
  int failed() const { return total() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["tool_version"] = r.tool_version;
  j["generated_at"] = r.generated_at;
  j["config"] = nlohmann::json::object();
  for (const auto& [k, v] : r.config) j["config"][k] = v;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["group"] = c.group;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["methods"] = c.methods;
    jc["note"] = c.note;
    jc["pass"] = c.pass;
    jc["elapsed_ms"] = c.elapsed_ms;
    j["cases"].push_back(std::move(jc));
  }
  j["summary"] = {{"total", r.total()},
                  {"passed", r.passed()},
                  {"failed", r.failed()}};
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    throw structural_error("unsupported report schema");
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.generated_at = j.value("generated_at", "");
  for (auto it = j.at("config").begin(); it != j.at("config").end(); ++it)
    r.config[it.key()] = it.value().get<std::string>();
  for (const auto& jc : j.at("cases")) {
    ClaimRecord c;
    c.id = jc.at("id").get<std::string>();
    c.group = jc.at("group").get<std::string>();
    c.expected = jc.at("expected").get<std::string>();
    c.computed = jc.at("computed").get<std::string>();
    c.methods = jc.at("methods").get<std::vector<std::string>>();
    c.note = jc.at("note").get<std::string>();
    c.pass = jc.at("pass").get<bool>();
    c.elapsed_ms = jc.at("elapsed_ms").get<double>();
    r.cases.push_back(std::move(c));
  }
  return r;
}

inline std::string report_json_text(const VerificationReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

// Comparison helper: the timing data (generated_at, per-case elapsed_ms) is
// inherently nondeterministic and is stripped before comparing.
inline bool reports_equal_ignoring_timing(const VerificationReport& a,
                                          const VerificationReport& b) {
  nlohmann::json ja = report_to_json(a), jb = report_to_json(b);
  ja.erase("generated_at");
  jb.erase("generated_at");
  for (auto& c : ja["cases"]) c.erase("elapsed_ms");
  for (auto& c : jb["cases"]) c.erase("elapsed_ms");
  return ja == jb;
}

inline std::string csv_escape(const std::string& s) {
  bool need = s.find_first_of(",\"\n") != std::string::npos;
  if (!need) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

inline std::string report_csv_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "id,group,expected,computed,methods,pass,note,elapsed_ms\n";
  for (const auto& c : r.cases) {
    std::string methods;
    for (size_t i = 0; i < c.methods.size(); ++i) {
      if (i) methods += "+";
      methods += c.methods[i];
    }
    os << csv_escape(c.id) << "," << csv_escape(c.group) << ","
       << csv_escape(c.expected) << "," << csv_escape(c.computed) << ","
       << methods << "," << (c.pass ? "pass" : "FAIL") << ","
       << csv_escape(c.note) << "," << c.elapsed_ms << "\n";
  }
  return os.str();
}

inline std::string report_table_text(const VerificationReport& r) {
  size_t wid = 4, wexp = 8, wcomp = 8;
  for (const auto& c : r.cases) {
    wid = std::max(wid, c.id.size());
    wexp = std::max(wexp, c.expected.size());
    wcomp = std::max(wcomp, c.computed.size());
  }
  std::ostringstream os;
  os << "suite: " << r.suite << " (tool " << r.tool_version << ")\n";
  for (const auto& [k, v] : r.config) os << "  " << k << " = " << v << "\n";
  for (const auto& c : r.cases) {
    os << (c.pass ? "  ok   " : "  FAIL ");
    os << c.id;
    os << std::string(wid - c.id.size() + 2, ' ');
    os << "expected " << c.expected;
    os << std::string(wexp - c.expected.size() + 2, ' ');
    os << "computed " << c.computed;
    if (!c.note.empty()) {
      os << std::string(wcomp - c.computed.size() + 2, ' ');
      os << c.note;
    }
    os << "\n";
  }
  os << (r.all_pass() ? "PASS" : "FAIL") << ": " << r.passed() << "/"
     << r.total() << " claims hold\n";
  return os.str();
}

}  // namespace schur
