#pragma once

// Verification reports: named checks with exact values, grouped per
// parameter point, rendered as JSON or markdown with stable ordering.

#include "tjm/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tjm {

enum class Status { kPass, kFail, kInfo };

std::string to_string(Status s);

struct Check {
  std::string group;
  std::string name;
  Status status = Status::kInfo;
  std::string detail;
  std::optional<CycNum> lhs;
  std::optional<CycNum> rhs;

  bool failed() const { return status == Status::kFail; }
};

/// An exact-equality check carrying both values.
Check value_check(std::string group, std::string name, const CycNum& lhs, const CycNum& rhs, std::string detail = {});
/// A property check without values.
Check property_check(std::string group, std::string name, bool ok, std::string detail = {});
Check info_check(std::string group, std::string name, std::string detail);

struct PointReport {
  /// Ordered (key, value) description of the parameter point.
  std::vector<std::pair<std::string, std::string>> params;
  /// Ordered (key, value) record of the pinned conventions.
  std::vector<std::pair<std::string, std::string>> conventions;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(const std::string& group, const std::string& name) const;
};

struct Report {
  std::string verb;
  std::vector<PointReport> points;
  std::vector<Check> aggregate;

  bool passed() const;
};

/// "num/den" coordinate strings on the power basis.
std::vector<std::string> coefficient_strings(const CycNum& value);
CycNum cycnum_from_strings(std::uint32_t order, const std::vector<std::string>& coeffs);

std::string render_json(const Report& report);
std::string render_markdown(const Report& report);
/// Inverse of render_json.
Report parse_json(const std::string& text);

}  // namespace tjm
