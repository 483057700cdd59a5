#include "hof/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hof/error.hpp"

namespace hof {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << content;
  if (!os) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string svg_scatter(const std::vector<double>& xs,
                        const std::vector<double>& ys, double x_lo,
                        double x_hi, double y_lo, double y_hi, int width,
                        int height, double point_radius) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double sx = width / (x_hi - x_lo);
  const double sy = height / (y_hi - y_lo);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double px = (xs[i] - x_lo) * sx;
    double py = height - (ys[i] - y_lo) * sy;
    os << "<circle cx=\"" << format_double(px) << "\" cy=\""
       << format_double(py) << "\" r=\"" << format_double(point_radius)
       << "\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_heatmap(const std::vector<std::vector<double>>& rows,
                        int cell_size) {
  const int ny = static_cast<int>(rows.size());
  const int nx = ny > 0 ? static_cast<int>(rows[0].size()) : 0;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << nx * cell_size
     << "\" height=\"" << ny * cell_size << "\">\n";
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      double v = std::clamp(rows[j][i], 0.0, 1.0);
      int shade = static_cast<int>(v * 255.0 + 0.5);  // light = high
      os << "<rect x=\"" << i * cell_size << "\" y=\""
         << (ny - 1 - j) * cell_size << "\" width=\"" << cell_size
         << "\" height=\"" << cell_size << "\" fill=\"rgb(" << shade << ","
         << shade << "," << shade << ")\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hof
