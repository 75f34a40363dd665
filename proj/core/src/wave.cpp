#include "kspm/wave.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kspm/dynamics.hpp"
#include "kspm/error.hpp"

namespace kspm {

WaveMatch wave_match(std::span<const Slope> slopes, ModelParams params) {
  const int d = params.d();
  std::size_t width = slopes.size();
  while (width > 0 && slopes[width - 1] == 0) --width;
  for (std::size_t i = 0; i < width; ++i) {
    if (slopes[i] >= d) {
      throw DomainError("wave matching needs a stable configuration; column " +
                        std::to_string(i) + " holds " + std::to_string(slopes[i]));
    }
  }

  WaveMatch best;
  best.d = d;
  best.matched = true;
  best.start = width;

  // Reading right to left, a block (D-1, ..., 1) appears as 1, 2, ..., D-1.
  int phase = 0;  // entries of the current block already read
  bool zero_used = false;
  std::size_t blocks = 0;
  std::size_t right = 0;
  const auto accept = [&](std::size_t pos) {
    best.start = pos;
    best.has_zero = zero_used;
    best.right_blocks = zero_used ? right : 0;
    best.left_blocks = blocks;
  };
  for (std::size_t pos = width; pos-- > 0;) {
    const Slope c = slopes[pos];
    if (c == phase + 1) {
      phase = (phase + 1) % (d - 1);
      if (phase == 0) {
        ++blocks;
        accept(pos);
      }
    } else if (c == 0 && phase == 0 && !zero_used) {
      zero_used = true;
      right = blocks;
      blocks = 0;
      accept(pos);
    } else {
      break;
    }
  }
  return best;
}

WaveMatch wave_match(const Configuration& sigma, ModelParams params) {
  return wave_match(sigma.slopes(), params);
}

TailPrediction predict_tail(ModelParams params, std::uint64_t x, int p, std::uint64_t y) {
  const int d = params.d();
  if (p < 0 || p > d - 2) {
    throw DomainError("last type p = " + std::to_string(p) + " outside 0.." +
                      std::to_string(d - 2));
  }
  if (y < 1 || y > x + 1) {
    throw DomainError("last run size y = " + std::to_string(y) + " violates 1 <= y <= x+1 = " +
                      std::to_string(x + 1));
  }
  TailPrediction t{x, p, y, {}};
  const auto descend = [&](int from) {
    for (int v = from; v >= 1; --v) t.pattern.push_back(v);
  };
  if (y < x + 1) {
    descend(p);
    for (std::uint64_t j = 0; j < x - y; ++j) descend(d - 1);
    t.pattern.push_back(0);
    for (std::uint64_t j = 0; j < y; ++j) descend(d - 1);
  } else {
    descend(p + 1);
    for (std::uint64_t j = 0; j < x; ++j) descend(d - 1);
  }
  return t;
}

std::optional<CyclicShape> cyclic_shape(std::span<const std::uint8_t> letters,
                                        ModelParams params) {
  if (letters.empty()) return std::nullopt;
  const auto w = static_cast<std::size_t>(params.spread());
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (letters[j] != j % w) return std::nullopt;
  }
  const auto last = letters.size() - 1;
  return CyclicShape{last / w, static_cast<int>(last % w)};
}

bool Envelope::contains(std::uint64_t n, Column wave_start) const noexcept {
  const double bound = slope * std::log2(static_cast<double>(n) + 2.0) + intercept;
  return static_cast<double>(wave_start) <= bound;
}

SweepSummary theorem_sweep(ModelParams params, std::uint64_t n_max, const Envelope& envelope,
                           const SweepSink& sink) {
  SweepSummary summary;
  summary.d = params.d();
  summary.n_max = n_max;
  FixedPointIterator it(params);
  Column density = 0;
  Avalanche scratch;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      scratch.index = n;
      scratch.firings = it.step();
      analyze(scratch);
      density = std::max(density, scratch.dense_start);
    }
    const auto match = wave_match(it.raw(), params);
    SweepRow row{n, match.start, density, it.width(), match.matched};
    if (row.matched) ++summary.matched;
    if (!envelope.contains(n, row.wave_start)) {
      if (summary.envelope_violations++ == 0) summary.first_violation = n;
    }
    summary.max_ratio = std::max(
        summary.max_ratio, static_cast<double>(row.wave_start) / std::log2(static_cast<double>(n) + 2.0));
    summary.max_wave_start = std::max(summary.max_wave_start, row.wave_start);
    summary.max_density_column = std::max(summary.max_density_column, density);
    summary.final_width = row.width;
    if (sink) sink(row);
  }
  return summary;
}


Envelope calibrated_envelope(ModelParams params) {
  switch (params.d()) {
    case 3: return {1.05, 4.0};
    case 4: return {1.40, 4.0};
    case 5: return {1.80, 4.0};
    default:
      throw InputError("no calibrated wave envelope for D = " + std::to_string(params.d()));
  }
}

Envelope density_envelope(ModelParams params) {
  if (params.d() != 3) {
    throw InputError("no calibrated density envelope for D = " + std::to_string(params.d()));
  }
  return {0.70, 4.0};
}

}  // namespace kspm
