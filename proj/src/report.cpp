#include "tjm/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace tjm {

namespace {

using nlohmann::ordered_json;

ordered_json cycnum_json(const CycNum& v) {
  ordered_json j;
  j["order"] = v.order();
  j["coeffs"] = coefficient_strings(v);
  return j;
}

CycNum cycnum_from_json(const ordered_json& j) {
  return cycnum_from_strings(j.at("order").get<std::uint32_t>(), j.at("coeffs").get<std::vector<std::string>>());
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "info") return Status::kInfo;
  throw std::invalid_argument("unknown status '" + s + "'");
}

ordered_json pairs_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : pairs) j[k] = v;
  return j;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const ordered_json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), it.value().get<std::string>());
  return out;
}

ordered_json check_json(const Check& c) {
  ordered_json j;
  j["group"] = c.group;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["detail"] = c.detail;
  if (c.lhs) j["lhs"] = cycnum_json(*c.lhs);
  if (c.rhs) j["rhs"] = cycnum_json(*c.rhs);
  return j;
}

Check check_from_json(const ordered_json& j) {
  Check c;
  c.group = j.at("group").get<std::string>();
  c.name = j.at("name").get<std::string>();
  c.status = status_from_string(j.at("status").get<std::string>());
  c.detail = j.at("detail").get<std::string>();
  if (j.contains("lhs")) c.lhs = cycnum_from_json(j.at("lhs"));
  if (j.contains("rhs")) c.rhs = cycnum_from_json(j.at("rhs"));
  return c;
}

std::string markdown_value(const CycNum& v) {
  std::ostringstream os;
  os << v.order() << ": [";
  const auto coeffs = coefficient_strings(v);
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i];
  os << "]";
  return os.str();
}

std::string escape_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

void markdown_checks(std::ostringstream& os, const std::vector<Check>& checks) {
  os << "| check | status | lhs | rhs | detail |\n";
  os << "|---|---|---|---|---|\n";
  for (const Check& c : checks) {
    os << "| " << c.group << "." << c.name << " | " << to_string(c.status) << " | "
       << (c.lhs ? markdown_value(*c.lhs) : "") << " | " << (c.rhs ? markdown_value(*c.rhs) : "") << " | "
       << escape_cell(c.detail) << " |\n";
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kInfo: return "info";
  }
  return "info";
}

Check value_check(std::string group, std::string name, const CycNum& lhs, const CycNum& rhs, std::string detail) {
  const auto order = static_cast<std::uint32_t>(lcm_u64(lhs.order(), rhs.order()));
  return Check{std::move(group), std::move(name), lhs == rhs ? Status::kPass : Status::kFail, std::move(detail), lhs.embed(order),
               rhs.embed(order)};
}

Check property_check(std::string group, std::string name, bool ok, std::string detail) {
  return Check{std::move(group), std::move(name), ok ? Status::kPass : Status::kFail, std::move(detail), std::nullopt, std::nullopt};
}

Check info_check(std::string group, std::string name, std::string detail) {
  return Check{std::move(group), std::move(name), Status::kInfo, std::move(detail), std::nullopt, std::nullopt};
}

bool PointReport::passed() const {
  for (const Check& c : checks)
    if (c.failed()) return false;
  return true;
}

const Check* PointReport::find(const std::string& group, const std::string& name) const {
  for (const Check& c : checks)
    if (c.group == group && c.name == name) return &c;
  return nullptr;
}

bool Report::passed() const {
  for (const PointReport& p : points)
    if (!p.passed()) return false;
  for (const Check& c : aggregate)
    if (c.failed()) return false;
  return true;
}

std::vector<std::string> coefficient_strings(const CycNum& value) {
  std::vector<std::string> out;
  for (const Rational& c : value.coefficients()) {
    out.push_back(numerator(c).str() + "/" + denominator(c).str());
  }
  return out;
}

CycNum cycnum_from_strings(std::uint32_t order, const std::vector<std::string>& coeffs) {
  std::vector<Rational> values;
  for (const std::string& s : coeffs) values.emplace_back(s);
  return CycNum::from_coefficients(order, values);
}

std::string render_json(const Report& report) {
  ordered_json j;
  j["verb"] = report.verb;
  j["status"] = report.passed() ? "pass" : "fail";
  ordered_json points = ordered_json::array();
  for (const PointReport& p : report.points) {
    ordered_json pj;
    pj["params"] = pairs_json(p.params);
    pj["status"] = p.passed() ? "pass" : "fail";
    pj["conventions"] = pairs_json(p.conventions);
    ordered_json checks = ordered_json::array();
    for (const Check& c : p.checks) checks.push_back(check_json(c));
    pj["checks"] = std::move(checks);
    points.push_back(std::move(pj));
  }
  j["points"] = std::move(points);
  ordered_json aggregate = ordered_json::array();
  for (const Check& c : report.aggregate) aggregate.push_back(check_json(c));
  j["aggregate"] = std::move(aggregate);
  return j.dump(2) + "\n";
}

Report parse_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  Report r;
  r.verb = j.at("verb").get<std::string>();
  for (const auto& pj : j.at("points")) {
    PointReport p;
    p.params = pairs_from_json(pj.at("params"));
    p.conventions = pairs_from_json(pj.at("conventions"));
    for (const auto& cj : pj.at("checks")) p.checks.push_back(check_from_json(cj));
    r.points.push_back(std::move(p));
  }
  for (const auto& cj : j.at("aggregate")) r.aggregate.push_back(check_from_json(cj));
  return r;
}

std::string render_markdown(const Report& report) {
  std::ostringstream os;
  os << "# tjm " << report.verb << ": " << (report.passed() ? "pass" : "fail") << "\n";
  for (const PointReport& p : report.points) {
    os << "\n## ";
    for (std::size_t i = 0; i < p.params.size(); ++i) os << (i ? ", " : "") << p.params[i].first << "=" << p.params[i].second;
    os << ": " << (p.passed() ? "pass" : "fail") << "\n\n";
    os << "Conventions:\n\n";
    for (const auto& [k, v] : p.conventions) os << "- " << k << ": " << v << "\n";
    os << "\n";
    markdown_checks(os, p.checks);
  }
  if (!report.aggregate.empty()) {
    os << "\n## aggregate\n\n";
    markdown_checks(os, report.aggregate);
  }
  return os.str();
}

}  // namespace tjm
