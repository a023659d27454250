#include "output.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace viewhedge::cli {

std::string fmt17(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) body_ += ',';
        body_ += header[i];
    }
    body_ += '\n';
}

CsvWriter& CsvWriter::cell(double x) { return cell(fmt17(x)); }

CsvWriter& CsvWriter::cell(const std::string& s) {
    if (row_open_) body_ += ',';
    if (s.find_first_of(",\"\n") != std::string::npos) {
        body_ += '"';
        for (char c : s) {
            if (c == '"') body_ += '"';
            body_ += c;
        }
        body_ += '"';
    } else {
        body_ += s;
    }
    row_open_ = true;
    return *this;
}

void CsvWriter::end_row() {
    body_ += '\n';
    row_open_ = false;
}

std::string CsvWriter::str(bool timestamp) const { return timestamp ? timestamp_line() + body_ : body_; }

std::string timestamp_line() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[64];
    std::strftime(buf, sizeof buf, "# generated %Y-%m-%dT%H:%M:%SZ\n", &utc);
    return buf;
}

std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
    return path;
}

namespace {

std::string fixed(double x, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string color_for(double v, double scale) {
    if (!std::isfinite(v)) return "#888888";
    const double t = scale > 0.0 ? std::clamp(v / scale, -1.0, 1.0) : 0.0;
    // white at 0, red for positive (improvement), blue for negative
    const double fade = 1.0 - std::abs(t);
    int r = 255, g = 255, b = 255;
    if (t > 0) {
        g = static_cast<int>(std::lround(255 * fade));
        b = g;
    } else if (t < 0) {
        r = static_cast<int>(std::lround(255 * fade));
        g = r;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string render_heatmap_svg(const Heatmap& map) {
    const std::size_t nx = map.x.size();
    const std::size_t ny = map.y.size();
    if (nx == 0 || ny == 0 || map.z.size() != nx * ny) throw std::invalid_argument("heatmap: inconsistent grid");

    const double cell = std::max(4.0, std::min(24.0, 480.0 / static_cast<double>(std::max(nx, ny))));
    const double left = 70, top = 40, bottom = 60, legend_w = 150;
    const double w = left + cell * nx + 20 + legend_w;
    const double h = top + cell * ny + bottom;

    double lo = INFINITY, hi = -INFINITY;
    for (double v : map.z) {
        if (!std::isfinite(v)) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!std::isfinite(lo)) lo = hi = 0.0;
    const double scale = std::max(std::abs(lo), std::abs(hi));

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(w, 0) << "\" height=\"" << fixed(h, 0)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<text x=\"" << fixed(left, 1) << "\" y=\"20\" font-size=\"14\">" << map.title << "</text>\n";
    for (std::size_t ix = 0; ix < nx; ++ix) {
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double v = map.z[ix * ny + iy];
            // μ_σ increases upwards
            const double px = left + cell * ix;
            const double py = top + cell * (ny - 1 - iy);
            s << "<rect x=\"" << fixed(px, 2) << "\" y=\"" << fixed(py, 2) << "\" width=\"" << fixed(cell, 2)
              << "\" height=\"" << fixed(cell, 2) << "\" fill=\"" << color_for(v, scale) << "\"><title>mu="
              << fmt17(map.x[ix]) << " mu_sigma=" << fmt17(map.y[iy]) << " diff=" << fmt17(v) << "</title></rect>\n";
        }
    }
    const double plot_bottom = top + cell * ny;
    s << "<text x=\"" << fixed(left + cell * nx / 2, 1) << "\" y=\"" << fixed(plot_bottom + 40, 1)
      << "\" text-anchor=\"middle\">μ</text>\n";
    s << "<text x=\"20\" y=\"" << fixed(top + cell * ny / 2, 1) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << fixed(top + cell * ny / 2, 1) << ")\">μ<tspan baseline-shift=\"sub\">σ</tspan></text>\n";
    s << "<text x=\"" << fixed(left, 1) << "\" y=\"" << fixed(plot_bottom + 16, 1) << "\">" << fixed(map.x.front(), 3)
      << "</text>\n";
    s << "<text x=\"" << fixed(left + cell * nx, 1) << "\" y=\"" << fixed(plot_bottom + 16, 1)
      << "\" text-anchor=\"end\">" << fixed(map.x.back(), 3) << "</text>\n";
    s << "<text x=\"" << fixed(left - 6, 1) << "\" y=\"" << fixed(plot_bottom, 1) << "\" text-anchor=\"end\">"
      << fixed(map.y.front(), 3) << "</text>\n";
    s << "<text x=\"" << fixed(left - 6, 1) << "\" y=\"" << fixed(top + 10, 1) << "\" text-anchor=\"end\">"
      << fixed(map.y.back(), 3) << "</text>\n";

    const double lx = left + cell * nx + 20;
    s << "<g id=\"legend\">\n";
    s << "<rect x=\"" << fixed(lx, 1) << "\" y=\"" << fixed(top, 1) << "\" width=\"16\" height=\"16\" fill=\""
      << color_for(hi, scale) << "\" stroke=\"#000\"/>\n";
    s << "<text x=\"" << fixed(lx + 22, 1) << "\" y=\"" << fixed(top + 12, 1) << "\">max " << fmt17(hi) << "</text>\n";
    s << "<rect x=\"" << fixed(lx, 1) << "\" y=\"" << fixed(top + 24, 1)
      << "\" width=\"16\" height=\"16\" fill=\"#ffffff\" stroke=\"#000\"/>\n";
    s << "<text x=\"" << fixed(lx + 22, 1) << "\" y=\"" << fixed(top + 36, 1) << "\">0</text>\n";
    s << "<rect x=\"" << fixed(lx, 1) << "\" y=\"" << fixed(top + 48, 1) << "\" width=\"16\" height=\"16\" fill=\""
      << color_for(lo, scale) << "\" stroke=\"#000\"/>\n";
    s << "<text x=\"" << fixed(lx + 22, 1) << "\" y=\"" << fixed(top + 60, 1) << "\">min " << fmt17(lo) << "</text>\n";
    s << "</g>\n</svg>\n";
    return s.str();
}

}  // namespace viewhedge::cli
