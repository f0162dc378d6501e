#pragma once

#include <string>
#include <vector>

#include "fincat/names.hpp"

namespace fincat {

/// One broken law, with the names that witness the breakage.
struct Violation {
  std::string law;
  std::vector<CanonicalName> names;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string law, std::vector<CanonicalName> names,
           std::string detail = "") {
    violations.push_back({std::move(law), std::move(names), std::move(detail)});
  }

  void merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& v : other.violations)
      violations.push_back({prefix + v.law, v.names, v.detail});
  }

  /// True when some violation carries this law tag.
  bool has(const std::string& law) const {
    for (const auto& v : violations)
      if (v.law == law) return true;
    return false;
  }

  std::string summary(std::size_t max_lines = 8) const;
};

} // namespace fincat
