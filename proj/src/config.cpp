#include "tjm/config.hpp"

#include "tjm/characters.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace tjm {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(std::string_view(s).substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& text) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ConfigError("key '" + key + "': '" + text + "' is not an integer");
  return v;
}

std::uint32_t parse_positive(const std::string& key, const std::string& text) {
  const auto v = parse_int<std::int64_t>(key, text);
  if (v <= 0 || v > 1'000'000) throw ConfigError("key '" + key + "': expected a positive integer, got " + text);
  return static_cast<std::uint32_t>(v);
}

RootOfUnity parse_root(const std::string& key, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ConfigError("key '" + key + "': expected order,exponent");
  return {parse_positive(key, parts[0]), parse_int<std::int64_t>(key, parts[1])};
}

template <typename T, typename F>
std::vector<T> parse_list(const std::string& text, char sep, F parse) {
  std::vector<T> out;
  for (const std::string& item : split(text, sep)) out.push_back(parse(item));
  return out;
}

std::string point_label(const PointParams& p) {
  std::string s;
  for (const auto& [k, v] : describe(p)) s += (s.empty() ? "" : ", ") + k + "=" + v;
  return s;
}

}  // namespace

OutputFormat parse_output_format(const std::string& value) {
  if (value == "json") return OutputFormat::kJson;
  if (value == "markdown") return OutputFormat::kMarkdown;
  throw ConfigError("output must be json or markdown, got '" + value + "'");
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "p") {
    c.base.p = parse_positive(key, value);
  } else if (key == "f") {
    c.base.f = parse_positive(key, value);
  } else if (key == "n") {
    c.base.n = parse_positive(key, value);
  } else if (key == "d") {
    c.base.d = parse_positive(key, value);
  } else if (key == "theta_exponent") {
    c.base.theta_exponent = parse_int<std::int64_t>(key, value);
  } else if (key == "theta_exponent_2") {
    c.base.theta_exponent_2 = parse_int<std::int64_t>(key, value);
  } else if (key == "theta_pi") {
    c.base.theta_pi = parse_root(key, value);
  } else if (key == "poly_n") {
    FpPoly poly;
    for (const std::string& item : split(value, ',')) {
      const auto v = parse_int<std::int64_t>(key, item);
      if (v < 0) throw ConfigError("poly_n coefficients must be non-negative");
      poly.push_back(static_cast<std::uint32_t>(v));
    }
    if (poly.size() < 2) throw ConfigError("poly_n needs at least two coefficients");
    c.base.poly_n = std::move(poly);
  } else if (key == "checks") {
    c.checks.clear();
    if (value == "all") return;
    for (const std::string& g : split(value, ',')) {
      if (!is_check_group(g)) throw ConfigError("unknown check group '" + g + "'");
      c.checks.push_back(g);
    }
  } else if (key == "output") {
    c.output = parse_output_format(value);
  } else if (key == "jobs") {
    c.jobs = parse_positive(key, value);
  } else if (key == "grid.p") {
    c.grid_p = parse_list<std::uint32_t>(value, ',', [&](const std::string& s) { return parse_positive(key, s); });
  } else if (key == "grid.f") {
    c.grid_f = parse_list<std::uint32_t>(value, ',', [&](const std::string& s) { return parse_positive(key, s); });
  } else if (key == "grid.n") {
    c.grid_n = parse_list<std::uint32_t>(value, ',', [&](const std::string& s) { return parse_positive(key, s); });
  } else if (key == "grid.d") {
    c.grid_d = parse_list<std::uint32_t>(value, ',', [&](const std::string& s) { return parse_positive(key, s); });
  } else if (key == "grid.theta_exponent") {
    c.grid_theta_regular = value == "regular";
    c.grid_theta_exponent.reset();
    if (!c.grid_theta_regular)
      c.grid_theta_exponent = parse_list<std::int64_t>(value, ',', [&](const std::string& s) { return parse_int<std::int64_t>(key, s); });
  } else if (key == "grid.theta_pi") {
    c.grid_theta_pi = parse_list<RootOfUnity>(value, ';', [&](const std::string& s) { return parse_root(key, s); });
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    try {
      apply_setting(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<PointParams> expand_grid(const RunConfig& c) {
  const auto axis = [](const std::optional<std::vector<std::uint32_t>>& grid, std::uint32_t base) {
    return grid ? *grid : std::vector<std::uint32_t>{base};
  };
  const std::vector<RootOfUnity> pis = c.grid_theta_pi ? *c.grid_theta_pi : std::vector<RootOfUnity>{c.base.theta_pi};
  std::vector<PointParams> out;
  for (std::uint32_t p : axis(c.grid_p, c.base.p))
    for (std::uint32_t f : axis(c.grid_f, c.base.f))
      for (std::uint32_t n : axis(c.grid_n, c.base.n))
        for (std::uint32_t d : axis(c.grid_d, c.base.d)) {
          std::vector<std::int64_t> exponents;
          if (c.grid_theta_regular) {
            if (!is_prime(p) || f * d > 64) throw ConfigError("grid.theta_exponent = regular needs a valid field at p=" + std::to_string(p));
            const std::uint64_t q = ipow(p, f);
            const std::uint64_t modulus = ipow(q, d) - 1;
            for (std::uint64_t e = 0; e < modulus; ++e)
              if (is_regular_exponent(q, d, static_cast<std::int64_t>(e))) exponents.push_back(static_cast<std::int64_t>(e));
          } else {
            exponents = c.grid_theta_exponent ? *c.grid_theta_exponent : std::vector<std::int64_t>{c.base.theta_exponent};
          }
          for (std::int64_t e : exponents)
            for (const RootOfUnity& pi : pis) {
              PointParams point = c.base;
              point.p = p;
              point.f = f;
              point.n = n;
              point.d = d;
              point.theta_exponent = e;
              point.theta_pi = pi;
              try {
                validate(point);
              } catch (const std::invalid_argument& err) {
                throw ConfigError("invalid point (" + point_label(point) + "): " + err.what());
              }
              out.push_back(std::move(point));
            }
        }
  return out;
}

}  // namespace tjm
