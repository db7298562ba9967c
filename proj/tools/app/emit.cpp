#include "app/emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace yukawa::app {

using nlohmann::ordered_json;

namespace {

ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_string(const NamedValues& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + format_number(v);
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ordered_json report_json(const MarginReport& r, const Bundle& b) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["solution"] = r.solution;
  j["verdict"] = std::string(to_string(r.verdict));
  j["reason"] = r.reason;
  j["min_margin"] = number(r.min_margin);
  j["tolerance"] = {{"abs", r.tolerance.abs}, {"rel", r.tolerance.rel}};
  j["scenario_hash"] = b.scenario_hash;
  j["tool_version"] = std::string(tool_version());
  j["seed"] = b.seed;
  j["auto_doubled"] = r.auto_doubled;
  ordered_json q = ordered_json::object();
  for (const auto& [k, v] : r.quadrature) q[k] = v;
  j["quadrature"] = q;
  ordered_json c = ordered_json::object();
  for (const auto& [k, v] : r.constants) c[k] = number(v);
  j["constants"] = c;
  j["notes"] = r.notes;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.grid[i].params) params[k] = number(v);
    rows.push_back({{"label", r.grid[i].label},
                    {"params", params},
                    {"relation", std::string(to_string(r.relations[i]))},
                    {"lhs", number(r.lhs[i])},
                    {"rhs", number(r.rhs[i])},
                    {"margin", number(r.margins[i])},
                    {"allowance", number(r.allowances[i])}});
  }
  j["rows"] = rows;
  return j;
}

ordered_json bundle_metadata(const Bundle& b, Format format, const std::vector<std::string>& files) {
  ordered_json j;
  j["tool"] = "yukawa";
  j["tool_version"] = std::string(tool_version());
  j["scenario"] = b.scenario;
  j["scenario_hash"] = b.scenario_hash;
  j["solution"] = b.solution;
  j["seed"] = b.seed;
  j["format"] = format == Format::json ? "json" : "csv";
  j["status"] = b.status();
  j["exit_code"] = b.exit_code();
  ordered_json checks = ordered_json::array();
  for (const auto& r : b.reports) {
    checks.push_back({{"check_id", r.check_id},
                      {"verdict", std::string(to_string(r.verdict))},
                      {"min_margin", number(r.min_margin)},
                      {"rows", r.size()},
                      {"reason", r.reason}});
  }
  j["checks"] = checks;
  j["warnings"] = b.warnings;
  j["errors"] = b.errors;
  j["files"] = files;
  return j;
}

std::string reports_csv(const Bundle& b) {
  std::string out = "check_id,verdict,row,label,params,relation,lhs,rhs,margin,allowance\n";
  for (const auto& r : b.reports) {
    const std::string verdict(to_string(r.verdict));
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += r.check_id + "," + verdict + "," + std::to_string(i) + "," + csv_field(r.grid[i].label) + "," +
             csv_field(params_string(r.grid[i].params)) + "," + std::string(to_string(r.relations[i])) + "," +
             format_number(r.lhs[i]) + "," + format_number(r.rhs[i]) + "," + format_number(r.margins[i]) + "," +
             format_number(r.allowances[i]) + "\n";
    }
  }
  return out;
}

std::string mean_curve_csv(const MeanCurve& c) {
  std::string out = "r,M_p\n";
  for (std::size_t i = 0; i < c.r_grid.size(); ++i) out += format_number(c.r_grid[i]) + "," + format_number(c.values[i]) + "\n";
  return out;
}

std::string mean_curve_file_name(const MeanCurve& c) {
  return "means_" + std::string(to_string(c.selector)) + "_p" + format_number(c.p) + ".csv";
}

std::string sweep_csv(const SweepTable& t) {
  std::string out = "lambda,inside_hypothesis,status,min_margin\n";
  for (const auto& row : t.rows) {
    out += format_number(row.lambda) + "," + (row.inside_hypothesis ? "true" : "false") + "," + csv_field(row.status) + "," +
           (row.min_margin ? format_number(*row.min_margin) : std::string()) + "\n";
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  out.close();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<std::string> emit(const Bundle& b, Format format, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir.string() + "': " + ec.message());
  std::vector<std::string> files;
  if (format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : b.reports) arr.push_back(report_json(r, b));
    write_text(out_dir / "reports.json", arr.dump(2) + "\n");
    files.push_back("reports.json");
  } else {
    write_text(out_dir / "reports.csv", reports_csv(b));
    files.push_back("reports.csv");
  }
  for (const auto& c : b.mean_curves) {
    const std::string name = mean_curve_file_name(c);
    write_text(out_dir / name, mean_curve_csv(c));
    files.push_back(name);
  }
  if (b.sweep) {
    write_text(out_dir / "sweep_lambda.csv", sweep_csv(*b.sweep));
    files.push_back("sweep_lambda.csv");
  }
  write_text(out_dir / "bundle.json", bundle_metadata(b, format, files).dump(2) + "\n");
  return files;
}

}  // namespace yukawa::app
