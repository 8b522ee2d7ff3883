#include "homoflow/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "homoflow/errors.hpp"

namespace homoflow::csvio {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open for writing: " + tmp);
    out << content;
    out.flush();
    if (!out) throw ConfigError("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ConfigError("rename failed: " + path);
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::string out;
  out.reserve(64 + rows.size() * 24 * (rows.empty() ? 1 : rows[0].size()));
  out += header;
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_g17(row[i]);
    }
    out += '\n';
  }
  write_text_atomic(path, out);
}

std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::string* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty csv: " + path);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_streamline_csv(const std::string& path,
                          const std::vector<Streamline>& lines) {
  std::vector<std::vector<double>> rows;
  for (std::size_t li = 0; li < lines.size(); ++li)
    for (std::size_t pi = 0; pi < lines[li].x2.size(); ++pi)
      rows.push_back({static_cast<double>(li), static_cast<double>(pi),
                      lines[li].x2[pi], lines[li].x3[pi]});
  write_csv(path, "line,point,x2,x3", rows);
}

void write_streamline_svg(const std::string& path,
                          const std::vector<Streamline>& lines, double r_max) {
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  svg += format_g17(-r_max) + " " + format_g17(-r_max) + " " +
         format_g17(2 * r_max) + " " + format_g17(2 * r_max) + "\">\n";
  const std::string w = format_g17(0.004 * r_max);
  for (const auto& line : lines) {
    if (line.x2.size() < 2) continue;
    svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" + w +
           "\" points=\"";
    for (std::size_t i = 0; i < line.x2.size(); ++i) {
      if (i) svg += ' ';
      svg += format_g17(line.x2[i]) + "," + format_g17(-line.x3[i]);
    }
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  write_text_atomic(path, svg);
}

}  // namespace homoflow::csvio
