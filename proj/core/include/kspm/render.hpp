#pragma once

#include <optional>
#include <string>

#include "kspm/avalanche.hpp"

namespace kspm {

struct ChartOptions {
  /// Interval whose influent-run starts are annotated; none for no annotation.
  std::optional<IntervalIndex> interval;
  TypeThreshold threshold = TypeThreshold::Strict;
};

/// Long avalanches one per line: '.' idle column, 'o' fired, '#' peak. A
/// ruler marks the global density column with 'L' and the annotated
/// interval with '['..']'; the first avalanche of each influent run carries
/// "<- type t".
std::string render_ascii(const AvalancheLog& log, const ChartOptions& options = {});

/// Same chart as SVG: light grey fired cells, dark grey peaks, a bold
/// vertical line left of the global density column.
std::string render_svg(const AvalancheLog& log, const ChartOptions& options = {});

}  // namespace kspm
