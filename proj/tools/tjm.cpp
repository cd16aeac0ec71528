// tjm: exact verification of depth-zero twisted Jacquet module identities.

#include "tjm/config.hpp"
#include "tjm/report.hpp"
#include "tjm/suite.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <exception>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config_path;
  std::vector<std::string> params;
  std::string output;
  std::vector<std::string> checks;
  bool allow_large = false;
  unsigned jobs = 0;
};

void add_common(CLI::App* cmd, Options& o, bool with_checks) {
  cmd->add_option("--config", o.config_path, "Flat key = value run configuration")->check(CLI::ExistingFile);
  cmd->add_option("--param", o.params, "Override one configuration key (key=value); repeatable");
  cmd->add_option("--output", o.output, "Report format")->check(CLI::IsMember({"json", "markdown"}));
  cmd->add_flag("--allow-large", o.allow_large, "Permit points with d >= 4 or Q > 128");
  if (with_checks) {
    cmd->add_option("--check", o.checks, "Run only this check group; repeatable")->check(CLI::IsMember(tjm::check_groups()));
  }
}

tjm::RunConfig build_config(const Options& o) {
  tjm::RunConfig config = o.config_path.empty() ? tjm::RunConfig{} : tjm::load_config(o.config_path);
  for (const std::string& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw tjm::ConfigError("--param expects key=value, got '" + kv + "'");
    tjm::apply_setting(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!o.output.empty()) config.output = tjm::parse_output_format(o.output);
  if (!o.checks.empty()) config.checks = o.checks;
  if (o.jobs > 0) config.jobs = o.jobs;
  return config;
}

bool has_grid(const tjm::RunConfig& c) {
  return c.grid_p || c.grid_f || c.grid_n || c.grid_d || c.grid_theta_exponent || c.grid_theta_regular || c.grid_theta_pi;
}

void require_size_gate(const tjm::PointParams& point, bool allow_large) {
  if (tjm::is_large(point) && !allow_large)
    throw tjm::ConfigError("point with p=" + std::to_string(point.p) + ", f=" + std::to_string(point.f) + ", n=" +
                           std::to_string(point.n) + ", d=" + std::to_string(point.d) +
                           " is large (d >= 4 or Q > 128); pass --allow-large");
}

void emit(const tjm::Report& report, tjm::OutputFormat format) {
  std::cout << (format == tjm::OutputFormat::kJson ? tjm::render_json(report) : tjm::render_markdown(report));
}

std::vector<tjm::PointReport> run_points(const std::vector<tjm::PointParams>& points, const std::vector<std::string>& checks,
                                         unsigned jobs) {
  std::vector<tjm::PointReport> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = tjm::verify_point(points[i], checks);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

int run_verify(const Options& o) {
  const tjm::RunConfig config = build_config(o);
  if (has_grid(config)) throw tjm::ConfigError("grid keys need the sweep verb");
  try {
    tjm::validate(config.base);
  } catch (const std::invalid_argument& e) {
    throw tjm::ConfigError(e.what());
  }
  require_size_gate(config.base, o.allow_large);
  tjm::Report report;
  report.verb = "verify";
  report.points = run_points({config.base}, config.checks, 1);
  report.aggregate = tjm::aggregate_checks(report.points);
  emit(report, config.output);
  return report.passed() ? kExitPass : kExitFail;
}

int run_sweep(const Options& o) {
  const tjm::RunConfig config = build_config(o);
  const std::vector<tjm::PointParams> points = tjm::expand_grid(config);
  for (const auto& point : points) require_size_gate(point, o.allow_large);
  tjm::Report report;
  report.verb = "sweep";
  report.points = run_points(points, config.checks, config.jobs);
  report.aggregate = tjm::aggregate_checks(report.points);
  emit(report, config.output);
  return report.passed() ? kExitPass : kExitFail;
}

int run_show_model(const Options& o) {
  const tjm::RunConfig config = build_config(o);
  try {
    tjm::validate(config.base);
  } catch (const std::invalid_argument& e) {
    throw tjm::ConfigError(e.what());
  }
  tjm::Report report;
  report.verb = "show-model";
  tjm::PointReport point;
  point.params = tjm::describe(config.base);
  point.conventions = tjm::conventions(config.base);
  report.points.push_back(std::move(point));
  emit(report, config.output);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of depth-zero twisted Jacquet module identities"};
  app.require_subcommand(1);
  Options verify_opts, sweep_opts, show_opts;
  CLI::App* verify = app.add_subcommand("verify", "Run the check suite at a single parameter point");
  add_common(verify, verify_opts, true);
  CLI::App* sweep = app.add_subcommand("sweep", "Run the check suite over a parameter grid");
  add_common(sweep, sweep_opts, true);
  sweep->add_option("--jobs", sweep_opts.jobs, "Concurrent sweep points")->check(CLI::PositiveNumber);
  CLI::App* show = app.add_subcommand("show-model", "Print the pinned polynomials, generators and conventions");
  add_common(show, show_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(verify_opts);
    if (sweep->parsed()) return run_sweep(sweep_opts);
    return run_show_model(show_opts);
  } catch (const tjm::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
