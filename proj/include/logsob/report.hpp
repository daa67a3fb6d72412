#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "logsob/experiments.hpp"

namespace logsob {

// ISO timestamp; fixed epoch string when deterministic output was requested.
std::string make_timestamp(bool deterministic);

// Atomic writes: temp file in the same directory, then rename.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text);
void write_json_atomic(const std::filesystem::path& path,
                       const nlohmann::ordered_json& j);
// RFC 4180: CRLF line endings, comma separated, header row first.
std::string csv_text(const PlotTable& table);
void write_csv_atomic(const std::filesystem::path& path, const PlotTable& table);

// Minimal self-contained SVG line plot of column 0 against the remaining
// columns (log-x when the abscissae span decades).
std::string svg_text(const PlotTable& table);
void write_svg_atomic(const std::filesystem::path& path, const PlotTable& table);

}  // namespace logsob
