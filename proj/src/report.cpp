#include "entropic/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace entropic {
namespace {

std::string format_sig(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  // csv cells must use the dot regardless of the process locale
  for (char& c : buf) {
    if (c == ',') c = '.';
  }
  return buf;
}

// renders one json scalar for csv/table cells
std::string cell(const ordered_json& v, int digits) {
  if (v.is_number_float()) return format_sig(v.get<double>(), digits);
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ';';
      out += cell(e, digits);
    }
    return out;
  }
  return v.dump();
}

void round_floats(ordered_json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_object() || j.is_array()) {
    for (auto& e : j) round_floats(e);
  }
}

std::string render_json(const RunReport& report) {
  ordered_json doc;
  doc["command"] = report.command;
  doc["parameters"] = report.parameters;
  doc["results"] = report.results;
  auto checks = ordered_json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  doc["checks"] = checks;
  doc["version"] = kReportVersion;
  round_floats(doc);
  return doc.dump(2) + "\n";
}

std::string render_csv(const RunReport& report) {
  std::ostringstream out;
  if (report.results.is_array()) {
    if (!report.results.empty()) {
      bool first = true;
      for (const auto& [key, value] : report.results.front().items()) {
        (void)value;
        out << (first ? "" : ",") << key;
        first = false;
      }
      out << '\n';
      for (const auto& row : report.results) {
        first = true;
        for (const auto& [key, value] : row.items()) {
          (void)key;
          out << (first ? "" : ",") << cell(value, 12);
          first = false;
        }
        out << '\n';
      }
    }
    return out.str();
  }
  out << "key,value\n";
  for (const auto& [key, value] : report.results.items()) {
    out << key << ',' << cell(value, 12) << '\n';
  }
  return out.str();
}

std::string render_table(const RunReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << '\n';
  out << "parameters:\n";
  for (const auto& [key, value] : report.parameters.items()) {
    out << "  " << key << " = " << cell(value, 6) << '\n';
  }
  out << "results:\n";
  if (report.results.is_array()) {
    for (const auto& row : report.results) {
      out << " ";
      for (const auto& [key, value] : row.items()) {
        out << ' ' << key << '=' << cell(value, 6);
      }
      out << '\n';
    }
  } else {
    for (const auto& [key, value] : report.results.items()) {
      out << "  " << key << " = " << cell(value, 6) << '\n';
    }
  }
  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const auto& c : report.checks) {
      out << "  [" << (c.satisfied ? "ok" : "FAIL") << "] " << c.context
          << ": lhs=" << format_sig(c.lhs, 6) << " rhs=" << format_sig(c.rhs, 6)
          << " margin=" << format_sig(c.margin, 6) << '\n';
    }
  }
  return out.str();
}

}  // namespace

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

ordered_json to_json(const BoundCheck& check) {
  ordered_json j;
  j["name"] = check.context;
  j["lhs"] = check.lhs;
  j["rhs"] = check.rhs;
  j["margin"] = check.margin;
  j["satisfied"] = check.satisfied;
  return j;
}

ordered_json to_json(const ViolationReport& report) {
  ordered_json j;
  j["closed_form_value"] = report.closed_form_value;
  j["pipeline_value"] = report.pipeline_value;
  j["reference_bound"] = report.reference_bound;
  j["agreement_error"] = report.agreement_error;
  j["violated"] = report.violated;
  if (report.threshold) j["threshold"] = *report.threshold;
  j["details"] = report.details;
  return j;
}

ordered_json to_json(const Optimum& optimum) {
  ordered_json j;
  j["best_parameters"] = optimum.best_parameters;
  j["best_value"] = optimum.best_value;
  j["bound_value"] = optimum.bound_value;
  j["gap"] = optimum.gap;
  j["evaluations"] = optimum.evaluations;
  j["converged"] = optimum.converged;
  return j;
}

BoundCheck bound_check_from_json(const ordered_json& j) {
  BoundCheck check;
  check.context = j.at("name").get<std::string>();
  check.lhs = j.at("lhs").get<double>();
  check.rhs = j.at("rhs").get<double>();
  check.margin = j.at("margin").get<double>();
  check.satisfied = j.at("satisfied").get<bool>();
  return check;
}

ViolationReport violation_report_from_json(const ordered_json& j) {
  ViolationReport report;
  report.closed_form_value = j.at("closed_form_value").get<double>();
  report.pipeline_value = j.at("pipeline_value").get<double>();
  report.reference_bound = j.at("reference_bound").get<double>();
  report.agreement_error = j.at("agreement_error").get<double>();
  report.violated = j.at("violated").get<bool>();
  if (j.contains("threshold")) report.threshold = j.at("threshold").get<double>();
  report.details = j.at("details").get<std::string>();
  return report;
}

Optimum optimum_from_json(const ordered_json& j) {
  Optimum optimum;
  optimum.best_parameters = j.at("best_parameters").get<std::vector<double>>();
  optimum.best_value = j.at("best_value").get<double>();
  optimum.bound_value = j.at("bound_value").get<double>();
  optimum.gap = j.at("gap").get<double>();
  optimum.evaluations = j.at("evaluations").get<long long>();
  optimum.converged = j.at("converged").get<bool>();
  return optimum;
}

std::string render(const RunReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return render_json(report);
    case OutputFormat::csv:
      return render_csv(report);
    case OutputFormat::table:
      break;
  }
  return render_table(report);
}

}  // namespace entropic
