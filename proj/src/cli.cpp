#include "entropic/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "entropic/errors.hpp"
#include "entropic/report.hpp"

namespace entropic {
namespace {

struct GlobalOptions {
  double hbar = 1.0;
  std::string format = "table";
  std::string output;

  PhysicalConstants consts() const { return PhysicalConstants(hbar); }
  OutputFormat parsed_format() const {
    if (format == "json") return OutputFormat::json;
    if (format == "csv") return OutputFormat::csv;
    return OutputFormat::table;
  }
};

void emit(const RunReport& report, const GlobalOptions& global) {
  const std::string text = render(report, global.parsed_format());
  if (global.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(global.output);
  if (!out) throw DomainError("cannot open output file: " + global.output);
  out << text;
}

QuantumState parse_state(const std::string& spec) {
  double a = 0.0, b = 0.0, c = 0.0;
  char trail = 0;
  if (std::sscanf(spec.c_str(), "gaussian:%lf,%lf,%lf%c", &a, &b, &c, &trail) ==
      3) {
    return GaussianState(a, b, c);
  }
  if (std::sscanf(spec.c_str(), "box:%lf%c", &a, &trail) == 1) {
    return BoxState(a);
  }
  throw DomainError("state must be gaussian:x0,p0,sigma or box:a, got '" +
                    spec + "'");
}

struct ScanRange {
  double lo = 0.0;
  double hi = 0.0;
  long long count = 0;

  double at(long long i) const {
    if (count == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(count - 1);
  }
};

ScanRange parse_scan_range(const std::string& text) {
  ScanRange range;
  char trail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lld%c", &range.lo, &range.hi,
                  &range.count, &trail) != 3) {
    throw DomainError("scan range must be LO:HI:COUNT, got '" + text + "'");
  }
  if (range.count < 1 || range.count > 1'000'000) {
    throw DomainError("scan count must lie in [1, 1000000]");
  }
  return range;
}

ParameterRange parse_interval(const std::string& text) {
  ParameterRange range;
  char trail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf%c", &range.lo, &range.hi, &trail) !=
      2) {
    throw DomainError("range must be LO:HI, got '" + text + "'");
  }
  return range;
}

// Evaluates fn(0..n-1) on a worker pool and returns the results in index
// order, so scan output stays sorted by parameter no matter the interleaving.
template <typename Fn>
std::vector<ordered_json> ordered_parallel(long long n, const Fn& fn) {
  const auto workers = static_cast<long long>(std::max(
      1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                             static_cast<unsigned>(n))));
  std::vector<ordered_json> rows(static_cast<std::size_t>(n));
  std::atomic<long long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (long long w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (long long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          rows[static_cast<std::size_t>(i)] = fn(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

int cmd_verify_renyi(const GlobalOptions& global, double alpha, double dx,
                     double dp, const std::string& state_spec) {
  const auto consts = global.consts();
  const QuantumState state = parse_state(state_spec);
  const BoundCheck check = run_renyi_ur_check(state, dx, dp, alpha, consts);

  RunReport report;
  report.command = "verify-renyi";
  report.parameters = {{"alpha", alpha},
                       {"beta", conjugate_order(alpha)},
                       {"dx", dx},
                       {"dp", dp},
                       {"state", state_spec},
                       {"hbar", global.hbar}};
  report.results = {{"lhs", check.lhs},
                    {"rhs", check.rhs},
                    {"margin", check.margin},
                    {"satisfied", check.satisfied}};
  report.checks = {check};
  emit(report, global);
  return check.satisfied ? 0 : 1;
}

int cmd_ww_gaussian(const GlobalOptions& global, double delta, double alpha) {
  const auto vr =
      run_gaussian_counterexample({.delta = delta, .alpha = alpha},
                                  global.consts());
  RunReport report;
  report.command = "ww-gaussian";
  report.parameters = {{"delta", delta}, {"alpha", alpha}, {"hbar", global.hbar}};
  report.results = to_json(vr);
  report.checks = {BoundCheck::of(vr.pipeline_value, vr.reference_bound,
                                  "entropy sum vs flawed-bound limit")};
  emit(report, global);
  return 0;
}

int cmd_ww_box(const GlobalOptions& global, double sx, double dtx,
               double alpha, double sp) {
  const auto vr = run_box_counterexample(
      {.s_x = sx, .dt_x = dtx, .alpha = alpha, .s_p = sp}, global.consts());
  RunReport report;
  report.command = "ww-box";
  report.parameters = {{"sx", sx},
                       {"dtx", dtx},
                       {"alpha", alpha},
                       {"sp", sp},
                       {"hbar", global.hbar}};
  report.results = to_json(vr);
  report.checks = {BoundCheck::of(vr.reference_bound, vr.pipeline_value,
                                  "norm inequality for the two-bin box")};
  emit(report, global);
  return 0;
}

int cmd_threshold(const GlobalOptions& global, double alpha,
                  const std::string& scan) {
  RunReport report;
  report.command = "threshold";
  if (scan.empty()) {
    report.parameters = {{"alpha", alpha}};
    report.results = {{"alpha", alpha},
                      {"threshold", violation_threshold(alpha)}};
  } else {
    const ScanRange range = parse_scan_range(scan);
    report.parameters = {{"scan", scan}};
    report.results = ordered_parallel(range.count, [&](long long i) {
      const double a = range.at(i);
      return ordered_json{{"alpha", a}, {"threshold", violation_threshold(a)}};
    });
  }
  emit(report, global);
  return 0;
}

int cmd_scan_gaussian(const GlobalOptions& global, const std::string& range_text,
                      double alpha) {
  const ScanRange range = parse_scan_range(range_text);
  const auto consts = global.consts();
  RunReport report;
  report.command = "scan-gaussian";
  report.parameters = {{"delta_range", range_text},
                       {"alpha", alpha},
                       {"hbar", global.hbar}};
  report.results = ordered_parallel(range.count, [&](long long i) {
    const double delta = range.at(i);
    const auto vr =
        run_gaussian_counterexample({.delta = delta, .alpha = alpha}, consts);
    return ordered_json{{"delta", delta},
                        {"entropy_sum", vr.pipeline_value},
                        {"ww_limit", vr.reference_bound},
                        {"violated", vr.violated}};
  });
  emit(report, global);
  return 0;
}

int cmd_bounds(const GlobalOptions& global, double dx, double dp,
               double alpha) {
  const auto consts = global.consts();
  const auto pair = EntropyOrderPair::from_alpha(alpha);
  RunReport report;
  report.command = "bounds";
  report.parameters = {{"dx", dx},
                       {"dp", dp},
                       {"alpha", alpha},
                       {"beta", pair.beta()},
                       {"hbar", global.hbar}};
  report.results = {{"renyi_bound", renyi_bound(pair, dx, dp, consts)},
                    {"shannon_bound", shannon_bound(dx, dp, consts)},
                    {"ww_bound", ww_bound(dx, dp, consts)},
                    {"ww_limit", 1.0 - std::numbers::ln2}};
  emit(report, global);
  return 0;
}

int cmd_optimize(const GlobalOptions& global, const std::string& family,
                 double dx, double dp, double alpha, long long budget,
                 std::uint64_t seed, double p0, const std::string& x0_range,
                 const std::string& sigma_range) {
  if (family != "gaussian") {
    throw DomainError("only the gaussian family is implemented");
  }
  const auto consts = global.consts();

  FamilySpec spec;
  spec.p0 = p0;
  // default box: one bin of x0 offset, sigma bracketing the balanced scale
  // sigma* = sqrt(hbar dx/dp) at which both spreads cover similar bin counts
  spec.x0_range = x0_range.empty() ? ParameterRange{0.0, dx}
                                   : parse_interval(x0_range);
  if (sigma_range.empty()) {
    const double balanced = std::sqrt(consts.hbar() * dx / dp);
    spec.sigma_range =
        ParameterRange{std::max(1e-3 * dx, 0.1 * balanced), 10.0 * balanced};
  } else {
    spec.sigma_range = parse_interval(sigma_range);
  }

  const Optimum optimum =
      minimize_entropy_sum(spec, dx, dp, alpha, consts, budget, seed);

  RunReport report;
  report.command = "optimize";
  report.parameters = {{"family", family},
                       {"dx", dx},
                       {"dp", dp},
                       {"alpha", alpha},
                       {"budget", budget},
                       {"seed", seed},
                       {"p0", p0},
                       {"x0_range", ordered_json{spec.x0_range->lo, spec.x0_range->hi}},
                       {"sigma_range",
                        ordered_json{spec.sigma_range->lo, spec.sigma_range->hi}},
                       {"hbar", global.hbar}};
  report.results = to_json(optimum);
  report.checks = {BoundCheck::of(optimum.best_value, optimum.bound_value,
                                  "optimized entropy sum vs proven bound")};
  emit(report, global);
  return report.checks.front().satisfied ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"numerical checks of entropic uncertainty relations for binned "
               "position/momentum distributions"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--hbar", global.hbar, "reduced Planck constant")
      ->envname("ENTROPIC_UR_HBAR")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", global.output,
                 "write the report to this file instead of stdout");

  int exit_code = 0;

  {
    auto* sub = app.add_subcommand(
        "verify-renyi", "check the proven entropy-sum lower bound on a state");
    sub->fallthrough();
    auto alpha = std::make_shared<double>(1.0);
    auto dx = std::make_shared<double>(1.0);
    auto dp = std::make_shared<double>(1.0);
    auto state = std::make_shared<std::string>("gaussian:0,0,1");
    sub->add_option("--alpha", *alpha, "momentum-side order (>= 1)")
        ->capture_default_str();
    sub->add_option("--dx", *dx, "position bin width")->capture_default_str();
    sub->add_option("--dp", *dp, "momentum bin width")->capture_default_str();
    sub->add_option("--state", *state, "gaussian:x0,p0,sigma or box:a")
        ->capture_default_str();
    sub->callback([&global, &exit_code, alpha, dx, dp, state] {
      exit_code = cmd_verify_renyi(global, *alpha, *dx, *dp, *state);
    });
  }
  {
    auto* sub = app.add_subcommand(
        "ww-gaussian",
        "half-line Gaussian counterexample to the flawed bound");
    sub->fallthrough();
    auto delta = std::make_shared<double>(2.0);
    auto alpha = std::make_shared<double>(1.0);
    sub->add_option("--delta", *delta, "dimensionless sqrt(x0*p0/hbar)")
        ->capture_default_str();
    sub->add_option("--alpha", *alpha,
                    "entropy order (1 = published Shannon case)")
        ->capture_default_str();
    sub->callback([&global, &exit_code, delta, alpha] {
      exit_code = cmd_ww_gaussian(global, *delta, *alpha);
    });
  }
  {
    auto* sub = app.add_subcommand(
        "ww-box", "two-bin box counterexample to the patterned inequality");
    sub->fallthrough();
    auto sx = std::make_shared<double>(1.0);
    auto dtx = std::make_shared<double>(0.1);
    auto alpha = std::make_shared<double>(2.0);
    auto sp = std::make_shared<double>(1.0);
    sub->add_option("--sx", *sx, "position compactification scale")
        ->capture_default_str();
    sub->add_option("--dtx", *dtx, "compactified position bin width (0, 1/2]")
        ->capture_default_str();
    sub->add_option("--alpha", *alpha, "momentum-side order (> 1)")
        ->capture_default_str();
    sub->add_option("--sp", *sp, "momentum compactification scale")
        ->capture_default_str();
    sub->callback([&global, &exit_code, sx, dtx, alpha, sp] {
      exit_code = cmd_ww_box(global, *sx, *dtx, *alpha, *sp);
    });
  }
  {
    auto* sub = app.add_subcommand(
        "threshold", "bin width above which the box inequality holds");
    sub->fallthrough();
    auto alpha = std::make_shared<double>(2.0);
    auto scan = std::make_shared<std::string>();
    sub->add_option("--alpha", *alpha, "order (> 1)")->capture_default_str();
    sub->add_option("--scan", *scan, "scan orders, LO:HI:COUNT (overrides --alpha)");
    sub->callback([&global, &exit_code, alpha, scan] {
      exit_code = cmd_threshold(global, *alpha, *scan);
    });
  }
  {
    auto* sub = app.add_subcommand(
        "scan-gaussian", "sweep the half-line counterexample over delta");
    sub->fallthrough();
    auto range = std::make_shared<std::string>("0:3:31");
    auto alpha = std::make_shared<double>(1.0);
    sub->add_option("--delta-range", *range, "LO:HI:COUNT")
        ->capture_default_str();
    sub->add_option("--alpha", *alpha,
                    "entropy order (1 = published Shannon case)")
        ->capture_default_str();
    sub->callback([&global, &exit_code, range, alpha] {
      exit_code = cmd_scan_gaussian(global, *range, *alpha);
    });
  }
  {
    auto* sub = app.add_subcommand(
        "bounds", "closed-form lower bounds side by side");
    sub->fallthrough();
    auto dx = std::make_shared<double>(1.0);
    auto dp = std::make_shared<double>(1.0);
    auto alpha = std::make_shared<double>(1.0);
    sub->add_option("--dx", *dx, "position bin width")->capture_default_str();
    sub->add_option("--dp", *dp, "momentum bin width")->capture_default_str();
    sub->add_option("--alpha", *alpha, "momentum-side order (>= 1)")
        ->capture_default_str();
    sub->callback([&global, &exit_code, dx, dp, alpha] {
      exit_code = cmd_bounds(global, *dx, *dp, *alpha);
    });
  }
  {
    auto* sub = app.add_subcommand(
        "optimize", "minimize the entropy sum over a state family");
    sub->fallthrough();
    auto family = std::make_shared<std::string>("gaussian");
    auto dx = std::make_shared<double>(1.0);
    auto dp = std::make_shared<double>(1.0);
    auto alpha = std::make_shared<double>(1.0);
    auto budget = std::make_shared<long long>(500);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto p0 = std::make_shared<double>(0.0);
    auto x0_range = std::make_shared<std::string>();
    auto sigma_range = std::make_shared<std::string>();
    sub->add_option("--family", *family, "state family")->capture_default_str();
    sub->add_option("--dx", *dx, "position bin width")->capture_default_str();
    sub->add_option("--dp", *dp, "momentum bin width")->capture_default_str();
    sub->add_option("--alpha", *alpha, "momentum-side order (>= 1)")
        ->capture_default_str();
    sub->add_option("--budget", *budget, "objective evaluation budget (>= 50)")
        ->capture_default_str();
    sub->add_option("--seed", *seed, "multistart seed")->capture_default_str();
    sub->add_option("--p0", *p0, "fixed momentum center")->capture_default_str();
    sub->add_option("--x0-range", *x0_range,
                    "LO:HI for the position center (default 0:dx)");
    sub->add_option("--sigma-range", *sigma_range,
                    "LO:HI for sigma (default brackets sqrt(hbar dx/dp))");
    sub->callback([&global, &exit_code, family, dx, dp, alpha, budget, seed,
                   p0, x0_range, sigma_range] {
      exit_code = cmd_optimize(global, *family, *dx, *dp, *alpha, *budget,
                               *seed, *p0, *x0_range, *sigma_range);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace entropic
