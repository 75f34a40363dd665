#include "kspm/render.hpp"

#include <algorithm>
#include <sstream>

namespace kspm {
namespace {

struct Chart {
  LongAvalanches phi;
  Column columns = 0;
  std::vector<TypeLetter> run_starts;  // per row: letter when the row opens an influent run
};

Chart layout(const AvalancheLog& log, const ChartOptions& options) {
  Chart chart;
  chart.phi = long_avalanches(log);
  for (const auto k : chart.phi.indices) {
    chart.columns = std::max(chart.columns, *log.at(k).max_fired + 1);
  }
  chart.columns = std::max(chart.columns, chart.phi.density_column + 1);
  chart.run_starts.assign(chart.phi.indices.size(), std::nullopt);
  if (options.interval && !chart.phi.indices.empty()) {
    TypeLetter previous;
    for (std::size_t r = 0; r < chart.phi.indices.size(); ++r) {
      const auto t = avalanche_type(log.at(chart.phi.indices[r]), *options.interval, log.params,
                                    chart.phi.density_column, options.threshold);
      if (t && (r == 0 || t != previous)) chart.run_starts[r] = t;
      previous = t;
    }
  }
  return chart;
}

}  // namespace

std::string render_ascii(const AvalancheLog& log, const ChartOptions& options) {
  const auto chart = layout(log, options);
  std::ostringstream out;
  out << "# KSPM(" << log.params.d() << ") N=" << log.n << " L=" << chart.phi.density_column
      << " long avalanches=" << chart.phi.indices.size();
  if (options.interval) out << " interval=" << *options.interval;
  out << '\n';
  if (chart.phi.indices.empty()) {
    out << "# no long avalanches up to N=" << log.n << '\n';
    return out.str();
  }

  std::string ruler(chart.columns, ' ');
  if (options.interval) {
    const auto w = static_cast<Column>(log.params.spread());
    const Column first = w * *options.interval;
    if (first < ruler.size()) ruler[first] = '[';
    if (first + w - 1 < ruler.size()) ruler[first + w - 1] = ']';
  }
  ruler[chart.phi.density_column] = 'L';
  out << std::string(8, ' ') << ruler << '\n';

  for (std::size_t r = 0; r < chart.phi.indices.size(); ++r) {
    const auto& a = log.at(chart.phi.indices[r]);
    std::string row(chart.columns, '.');
    for (const auto c : a.fired) row[c] = 'o';
    for (const auto c : a.peaks) row[c] = '#';
    std::string k = std::to_string(a.index);
    out << std::string(6 - std::min<std::size_t>(6, k.size()), ' ') << k << " |" << row;
    if (chart.run_starts[r]) out << "  <- type " << static_cast<int>(*chart.run_starts[r]);
    out << '\n';
  }
  return out.str();
}

std::string render_svg(const AvalancheLog& log, const ChartOptions& options) {
  const auto chart = layout(log, options);
  constexpr int cell = 10;
  constexpr int margin = 50;
  const int rows = static_cast<int>(chart.phi.indices.size());
  const int width = margin + static_cast<int>(chart.columns) * cell + 90;
  const int height = 30 + std::max(rows, 1) * cell + 10;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <title>KSPM(" << log.params.d() << ") long avalanches up to N=" << log.n
      << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  if (rows == 0) {
    out << "  <text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"12\">"
        << "no long avalanches up to N=" << log.n << "</text>\n";
    out << "</svg>\n";
    return out.str();
  }

  out << "  <g stroke=\"#b0b0b0\" stroke-width=\"0.5\">\n";
  for (int r = 0; r < rows; ++r) {
    const auto& a = log.at(chart.phi.indices[static_cast<std::size_t>(r)]);
    const int y = 30 + r * cell;
    for (Column c = 0; c < chart.columns; ++c) {
      const char* fill = "white";
      if (std::binary_search(a.peaks.begin(), a.peaks.end(), c)) {
        fill = "#505050";
      } else if (a.fires(c)) {
        fill = "#c8c8c8";
      }
      out << "    <rect x=\"" << margin + static_cast<int>(c) * cell << "\" y=\"" << y
          << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  out << "  </g>\n";

  const int lx = margin + static_cast<int>(chart.phi.density_column) * cell;
  out << "  <line x1=\"" << lx << "\" y1=\"25\" x2=\"" << lx << "\" y2=\"" << 30 + rows * cell
      << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  out << "  <text x=\"" << lx + 2 << "\" y=\"20\" font-family=\"monospace\" font-size=\"10\">L="
      << chart.phi.density_column << "</text>\n";

  for (int r = 0; r < rows; ++r) {
    const int y = 30 + r * cell + cell - 1;
    const auto k = chart.phi.indices[static_cast<std::size_t>(r)];
    out << "  <text x=\"2\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"9\">" << k
        << "</text>\n";
    if (const auto& t = chart.run_starts[static_cast<std::size_t>(r)]) {
      out << "  <text x=\"" << margin + static_cast<int>(chart.columns) * cell + 6 << "\" y=\"" << y
          << "\" font-family=\"monospace\" font-size=\"9\">type " << static_cast<int>(*t)
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kspm
