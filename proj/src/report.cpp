#include "fincat/report.hpp"

namespace fincat {

std::string ValidationReport::summary(std::size_t max_lines) const {
  if (violations.empty()) return "ok";
  std::string out;
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown == max_lines) {
      out += "... (" + std::to_string(violations.size() - shown) + " more)";
      break;
    }
    if (shown) out += "\n";
    out += v.law;
    if (!v.names.empty()) {
      out += " [";
      for (std::size_t i = 0; i < v.names.size(); ++i) {
        if (i) out += ", ";
        out += v.names[i].str();
      }
      out += "]";
    }
    if (!v.detail.empty()) out += ": " + v.detail;
    ++shown;
  }
  return out;
}

} // namespace fincat
