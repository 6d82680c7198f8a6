#include "braidcalc/report.hpp"

namespace braidcalc {

void Report::record(const std::string& name, bool ok, const std::string& where) {
  CheckResult& r = checks[name];
  if (!ok && r.pass) {
    r.pass = false;
    r.first_failure = where;
  }
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& [k, v] : other.checks) record(prefix + k, v.pass, v.first_failure);
}

bool Report::all_pass() const {
  for (const auto& [k, v] : checks)
    if (!v.pass) return false;
  return true;
}

bool Report::passed(const std::string& name) const {
  auto it = checks.find(name);
  return it != checks.end() && it->second.pass;
}

std::string Report::summary() const {
  std::string s;
  for (const auto& [k, v] : checks) {
    s += k + ": " + (v.pass ? "pass" : "FAIL");
    if (!v.pass && !v.first_failure.empty()) s += " (" + v.first_failure + ")";
    s += "\n";
  }
  return s;
}

}  // namespace braidcalc
