#pragma once

#include <optional>
#include <string>
#include <vector>

namespace slope_lab {

/// One regenerated example: computed slope and BS against the expected closed form.
struct ExampleRow {
  std::string id;
  std::string slope;
  std::string bs;
  std::optional<bool> f_positive;
  std::string expected;
  bool match = false;
  std::string detail;
};

std::vector<ExampleRow> example_rows();

enum class ReportFormat { md, csv, json };

/// Throws UnknownIdentifier.
ReportFormat parse_report_format(const std::string& text);
std::string render_rows(const std::vector<ExampleRow>& rows, ReportFormat format);

}  // namespace slope_lab
