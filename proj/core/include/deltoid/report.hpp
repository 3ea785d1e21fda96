#ifndef DELTOID_REPORT_HPP
#define DELTOID_REPORT_HPP

#include <string>
#include <vector>

namespace deltoid {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Outcome of a verification harness: named checks with mismatch details.
struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report &o, const std::string &prefix = {}) {
    for (auto c : o.checks) {
      c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }
  bool ok() const {
    for (auto &c : checks)
      if (!c.pass)
        return false;
    return true;
  }
  const Check *first_failure() const {
    for (auto &c : checks)
      if (!c.pass)
        return &c;
    return nullptr;
  }
};

} // namespace deltoid

#endif
