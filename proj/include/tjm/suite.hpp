#pragma once

// The verification pipeline for one parameter point, organized in named
// check groups run in a fixed order.

#include "tjm/depthzero.hpp"
#include "tjm/finite_field.hpp"
#include "tjm/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tjm {

struct PointParams {
  std::uint32_t p = 3;
  std::uint32_t f = 1;
  std::uint32_t n = 2;
  std::uint32_t d = 2;
  std::int64_t theta_exponent = 1;
  /// Exponent of the second factor; absent means tau_2 = tau_1.
  std::optional<std::int64_t> theta_exponent_2;
  RootOfUnity theta_pi{1, 0};
  std::optional<FpPoly> poly_n;

  FieldTower::Params tower_params() const { return {p, f, n, d, poly_n}; }
};

/// Group names in execution order.
const std::vector<std::string>& check_groups();
bool is_check_group(const std::string& name);

/// Points with d >= 4 or Q > 128 need an explicit opt-in.
bool is_large(const PointParams& params);

/// Throws FieldError or PreconditionError when the point is invalid.
void validate(const PointParams& params);

/// Ordered parameter description used as the report header of a point.
std::vector<std::pair<std::string, std::string>> describe(const PointParams& params);
/// Pinned polynomials, generators and conventions of a point.
std::vector<std::pair<std::string, std::string>> conventions(const PointParams& params);

/// Runs the selected groups (all when empty).
PointReport verify_point(const PointParams& params, const std::vector<std::string>& groups = {});

/// Cross-point checks of a sweep.
std::vector<Check> aggregate_checks(const std::vector<PointReport>& points);

}  // namespace tjm
