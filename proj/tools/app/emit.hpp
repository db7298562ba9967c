#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "app/bundle.hpp"

namespace yukawa::app {

enum class Format { json, csv };

/// Shortest round-trip decimal; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

nlohmann::ordered_json report_json(const MarginReport& r, const Bundle& b);
nlohmann::ordered_json bundle_metadata(const Bundle& b, Format format, const std::vector<std::string>& files);

/// Writes bundle.json plus reports.json or reports.csv, and any mean-curve
/// and sweep tables, into `out_dir`. Returns the written file names.
std::vector<std::string> emit(const Bundle& b, Format format, const std::filesystem::path& out_dir);

std::string reports_csv(const Bundle& b);
std::string mean_curve_csv(const MeanCurve& c);
std::string mean_curve_file_name(const MeanCurve& c);
std::string sweep_csv(const SweepTable& t);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace yukawa::app
