#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "entropic/bounds.hpp"
#include "entropic/scenarios.hpp"
#include "entropic/search.hpp"

namespace entropic {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1.0.0";

/// Canonical 12-significant-digit rounding applied to every number that
/// leaves the process in machine-readable form; makes identical invocations
/// byte-identical regardless of how the value was computed.
double round12(double v);

enum class OutputFormat { table, json, csv };

/// One completed CLI run. results is either a flat object of scalars or an
/// array of flat row objects (parameter scans).
struct RunReport {
  std::string command;
  ordered_json parameters = ordered_json::object();
  ordered_json results = ordered_json::object();
  std::vector<BoundCheck> checks;
};

ordered_json to_json(const BoundCheck& check);
ordered_json to_json(const ViolationReport& report);
ordered_json to_json(const Optimum& optimum);

BoundCheck bound_check_from_json(const ordered_json& j);
ViolationReport violation_report_from_json(const ordered_json& j);
Optimum optimum_from_json(const ordered_json& j);

/// json: one object {command, parameters, results, checks, version} with all
/// floats rounded to 12 significant digits. csv: scan results render as a
/// header row plus one line per entry; scalar results render as key,value
/// rows (12 significant digits). table: human-oriented layout at 6
/// significant digits, including the checks.
std::string render(const RunReport& report, OutputFormat format);

}  // namespace entropic
