#include "slope_lab/check_report.hpp"

namespace slope_lab {

std::string CheckReport::notes_text() const {
  std::string out;
  for (const auto& note : notes) {
    if (!out.empty()) out += "; ";
    out += note;
  }
  return out;
}

CheckReport make_report(std::string theorem_id, Rational lhs, Rational rhs, bool hypothesis_ok) {
  CheckReport report;
  report.theorem_id = std::move(theorem_id);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.slack = report.lhs - report.rhs;
  report.holds = report.slack >= 0;
  report.hypothesis_ok = hypothesis_ok;
  return report;
}

}  // namespace slope_lab
