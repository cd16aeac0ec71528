#pragma once

// Run configuration: a flat key = value document, '#' comments.
//
//   p, f, n, d, theta_exponent, theta_exponent_2   integers
//   theta_pi          order,exponent
//   poly_n            top defining polynomial, coefficients low to high
//   checks            all | comma list of check groups
//   output            json | markdown
//   jobs              sweep worker count
//   grid.p, grid.f, grid.n, grid.d      comma lists
//   grid.theta_exponent                 comma list | regular
//   grid.theta_pi                       order,exponent;order,exponent;...

#include "tjm/suite.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tjm {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { kJson, kMarkdown };

struct RunConfig {
  PointParams base;
  std::vector<std::string> checks;  // empty = all groups
  OutputFormat output = OutputFormat::kJson;
  unsigned jobs = 1;

  std::optional<std::vector<std::uint32_t>> grid_p, grid_f, grid_n, grid_d;
  std::optional<std::vector<std::int64_t>> grid_theta_exponent;
  bool grid_theta_regular = false;
  std::optional<std::vector<RootOfUnity>> grid_theta_pi;
};

OutputFormat parse_output_format(const std::string& value);

/// Applies one key = value setting; throws ConfigError.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Grid points in lexicographic order of (p, f, n, d, theta_exponent,
/// theta_pi), each list in its given order; unset axes take the base value.
/// Every point is validated; throws ConfigError on the first invalid one.
std::vector<PointParams> expand_grid(const RunConfig& config);

}  // namespace tjm
