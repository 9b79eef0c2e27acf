#pragma once

#include <map>
#include <string>
#include <vector>

namespace cqg {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// A named list of residual checks plus free-form notes (conventions, warnings).
struct Report {
  std::string title;
  std::vector<Check> checks;
  std::map<std::string, std::string> notes;

  void add(const std::string& name, double residual, double tolerance);
  // Records a boolean outcome; residual is 0 on success, 1 on failure.
  void add_flag(const std::string& name, bool ok);
  void merge(const Report& other, const std::string& prefix = "");
  bool passed() const;
  double max_residual() const;
  const Check* find(const std::string& name) const;
};

}  // namespace cqg
