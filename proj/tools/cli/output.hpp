#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace viewhedge::cli {

/// Shortest-safe round-trip rendering: 17 significant digits.
std::string fmt17(double x);

/// A CSV document built in memory so the byte stream is fully determined
/// by the data (plus an optional leading "# generated ..." line).
class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header);

    CsvWriter& cell(double x);
    CsvWriter& cell(const std::string& s);
    void end_row();

    std::string str(bool timestamp) const;

private:
    std::string body_;
    bool row_open_ = false;
};

/// "# generated 2026-10-16T09:47:25Z".
std::string timestamp_line();

/// Writes `content` to dir/name, creating dir if needed. Returns the path.
std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name, const std::string& content);

struct Heatmap {
    std::string title;
    std::vector<double> x;  ///< μ, columns
    std::vector<double> y;  ///< μ_σ, rows
    std::vector<double> z;  ///< z[ix * y.size() + iy]
};

/// Diverging blue–white–red heatmap centred at 0 with axis labels and a
/// min/max legend.
std::string render_heatmap_svg(const Heatmap& map);

}  // namespace viewhedge::cli
