#include "logsob/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace logsob {

std::string make_timestamp(bool deterministic) {
  if (deterministic) return "1970-01-01T00:00:00Z";
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::filesystem::path& path,
                       const nlohmann::ordered_json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

std::string csv_text(const PlotTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out << ',';
    out << table.columns[c];
  }
  out << "\r\n";
  char buf[40];
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[c]);
      out << buf;
    }
    out << "\r\n";
  }
  return out.str();
}

void write_csv_atomic(const std::filesystem::path& path,
                      const PlotTable& table) {
  write_text_atomic(path, csv_text(table));
}

std::string svg_text(const PlotTable& table) {
  const int width = 640, height = 420, margin = 50;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
      << width - 2 * margin << "\" height=\"" << height - 2 * margin
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (table.rows.size() < 2 || table.columns.size() < 2) {
    out << "</svg>\n";
    return out.str();
  }

  double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
  bool positive_x = true;
  for (const auto& row : table.rows) {
    positive_x = positive_x && row[0] > 0.0;
    x_min = std::min(x_min, row[0]);
    x_max = std::max(x_max, row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      y_min = std::min(y_min, row[c]);
      y_max = std::max(y_max, row[c]);
    }
  }
  const bool log_x = positive_x && x_max / x_min > 50.0;
  auto xt = [&](double v) {
    const double a = log_x ? std::log(x_min) : x_min;
    const double b = log_x ? std::log(x_max) : x_max;
    const double t = b == a ? 0.5 : ((log_x ? std::log(v) : v) - a) / (b - a);
    return margin + t * (width - 2 * margin);
  };
  auto yt = [&](double v) {
    const double t = y_max == y_min ? 0.5 : (v - y_min) / (y_max - y_min);
    return height - margin - t * (height - 2 * margin);
  };

  static const char* colors[] = {"#1f6fb2", "#c25400", "#2e8b57", "#8b2e8b"};
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    out << "<polyline fill=\"none\" stroke=\"" << colors[(c - 1) % 4]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : table.rows)
      out << xt(row[0]) << ',' << yt(row[c]) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << margin + 8 << "\" y=\"" << margin + 16 * c
        << "\" fill=\"" << colors[(c - 1) % 4] << "\" font-size=\"12\">"
        << table.columns[c] << "</text>\n";
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"12\" text-anchor=\"middle\">" << table.columns[0]
      << (log_x ? " (log scale)" : "") << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

void write_svg_atomic(const std::filesystem::path& path,
                      const PlotTable& table) {
  write_text_atomic(path, svg_text(table));
}

}  // namespace logsob
