#ifndef HOF_IO_HPP
#define HOF_IO_HPP

#include <string>
#include <vector>

namespace hof {

// Fixed 12-significant-digit formatting so identical configs produce
// byte-identical files.
std::string format_double(double v);

// Writes text to path, creating parent directories. Throws IoError with the
// path on failure.
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

// Scatter plot: black points, x in [x_lo, x_hi], y in [y_lo, y_hi].
std::string svg_scatter(const std::vector<double>& xs,
                        const std::vector<double>& ys, double x_lo,
                        double x_hi, double y_lo, double y_hi,
                        int width = 900, int height = 600,
                        double point_radius = 0.8);

// Grayscale cell map, values clamped to [0,1]; light = high (1 -> white).
std::string svg_heatmap(const std::vector<std::vector<double>>& rows,
                        int cell_size = 8);

}  // namespace hof

#endif
