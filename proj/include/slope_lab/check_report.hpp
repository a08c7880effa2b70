#pragma once

#include "slope_lab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slope_lab {

/// Outcome of one inequality check: lhs >= rhs?
struct CheckReport {
  std::string theorem_id;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  Rational slack;
  bool hypothesis_ok = true;
  std::vector<std::string> notes;
  /// For slope checks: the constant on the pushforward degree and lhs / push_deg.
  std::optional<Rational> coefficient;
  std::optional<Rational> ratio;

  std::string notes_text() const;
};

/// Fills holds and slack from lhs and rhs.
CheckReport make_report(std::string theorem_id, Rational lhs, Rational rhs, bool hypothesis_ok = true);

}  // namespace slope_lab
