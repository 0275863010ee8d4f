#include "dunkl/report.hpp"

#include <json.hpp>

#include "dunkl/version.hpp"

namespace dunkl {

void VerificationReport::add(std::string name, bool pass, std::string residual) {
  checks.push_back({std::move(name), pass, std::move(residual)});
}

std::size_t VerificationReport::pass_count() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.pass) ++n;
  return n;
}

std::size_t VerificationReport::fail_count() const {
  return checks.size() - pass_count();
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string render_text(const std::vector<VerificationReport>& reports) {
  std::string out;
  out += "ENGINE ";
  out += kEngineVersion;
  out += "\n";
  std::size_t pass = 0, fail = 0;
  for (const auto& r : reports) {
    out += "SEED " + std::to_string(r.rand_seed) + " CASE " + r.case_id + "\n";
    for (const auto& c : r.checks) {
      out += "CASE " + r.case_id + " CHECK " + c.name + (c.pass ? " PASS" : " FAIL") +
             " residual=" + c.residual + "\n";
    }
    pass += r.pass_count();
    fail += r.fail_count();
  }
  out += "SUMMARY pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) + "\n";
  return out;
}

std::string render_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["engine_version"] = kEngineVersion;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  std::size_t pass = 0, fail = 0;
  for (const auto& r : reports) {
    nlohmann::ordered_json entry;
    entry["case"] = r.case_id;
    entry["rand_seed"] = r.rand_seed;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json check;
      check["name"] = c.name;
      check["pass"] = c.pass;
      check["residual"] = c.residual;
      checks.push_back(std::move(check));
    }
    entry["checks"] = std::move(checks);
    entry["summary"] = {{"pass", r.pass_count()}, {"fail", r.fail_count()}};
    pass += r.pass_count();
    fail += r.fail_count();
    cases.push_back(std::move(entry));
  }
  doc["cases"] = std::move(cases);
  doc["summary"] = {{"pass", pass}, {"fail", fail}};
  return doc.dump(2) + "\n";
}

}  // namespace dunkl
