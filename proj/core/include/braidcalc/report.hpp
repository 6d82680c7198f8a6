#pragma once

#include <map>
#include <string>

namespace braidcalc {

struct CheckResult {
  bool pass = true;
  std::string first_failure;
};

// Per-axiom verdicts. Only the first failure of each axiom is kept.
struct Report {
  std::map<std::string, CheckResult> checks;

  void record(const std::string& name, bool ok, const std::string& where = {});
  void merge(const Report& other, const std::string& prefix = {});
  bool all_pass() const;
  bool passed(const std::string& name) const;
  std::string summary() const;
};

}  // namespace braidcalc
