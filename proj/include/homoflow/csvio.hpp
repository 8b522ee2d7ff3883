#pragma once
#include <string>
#include <vector>

#include "homoflow/flowfield.hpp"

namespace homoflow::csvio {

// Shortest round-trip decimal form of v (printf %.17g semantics).
std::string format_g17(double v);

// Whole-file atomic write: content goes to <path>.tmp, then rename(2).
void write_text_atomic(const std::string& path, const std::string& content);

// CSV with a fixed header line and %.17g cells. Deterministic: identical
// rows produce byte-identical files.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

// Reads a CSV written by write_csv; returns rows, optionally the header.
std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::string* header = nullptr);

// One CSV holding every polyline: columns line,point,x2,x3.
void write_streamline_csv(const std::string& path,
                          const std::vector<Streamline>& lines);

// Static rendering of the polylines, viewBox [-r_max, r_max]^2 with the x3
// axis vertical (SVG y points down, so y = -x3).
void write_streamline_svg(const std::string& path,
                          const std::vector<Streamline>& lines, double r_max);

}  // namespace homoflow::csvio
