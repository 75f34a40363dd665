#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kspm/avalanche.hpp"
#include "kspm/configuration.hpp"
#include "kspm/transducer.hpp"

namespace kspm {

/// Minimal column i_N from which sigma is a wave
/// (D-1,...,1)^* [0] (D-1,...,1)^* 0^omega.
struct WaveMatch {
  int d = 0;
  bool matched = false;
  Column start = 0;             ///< i_N
  std::size_t left_blocks = 0;  ///< blocks before the optional 0 (all blocks when there is no 0)
  std::size_t right_blocks = 0;
  bool has_zero = false;
};

/// Right-to-left scan of a stable configuration. Throws DomainError when
/// sigma is not stable.
WaveMatch wave_match(const Configuration& sigma, ModelParams params);
WaveMatch wave_match(std::span<const Slope> slopes, ModelParams params);

/// Predicted tail of pi(N) from the start column of an interval whose
/// influent type word is (0,...,D-2)^x (0,...,p) with last run of size y.
struct TailPrediction {
  std::uint64_t x = 0;
  int p = 0;
  std::uint64_t y = 0;
  std::vector<Slope> pattern;  ///< followed by 0^omega
};

/// Throws DomainError unless 0 <= p <= D-2 and 1 <= y <= x+1.
TailPrediction predict_tail(ModelParams params, std::uint64_t x, int p, std::uint64_t y);

/// (x, p) when the word is (0..D-2)^x (0..p), nullopt otherwise.
struct CyclicShape {
  std::uint64_t x = 0;
  int p = 0;
};
std::optional<CyclicShape> cyclic_shape(std::span<const std::uint8_t> letters, ModelParams params);

// ---------------------------------------------------------------------------
// End-to-end check of the transducer theory against simulation.

struct IntervalComparison {
  IntervalIndex interval = 0;  ///< compares word(i) -> word(i+1)
  std::vector<std::uint8_t> input;
  std::vector<std::uint8_t> simulated;  ///< word at interval + 1
  std::vector<std::uint8_t> image_exact;
  std::vector<std::uint8_t> image_figure;
  bool boundary_flag = false;
  bool agree_exact = false;
  bool agree_figure = false;
};

/// prediction.p == -1 marks an empty input word, whose predicted tail is 0^omega.
struct TailCheck {
  IntervalIndex interval = 0;
  Column anchor = 0;  ///< (D-1) * interval
  TailPrediction prediction;
  std::vector<Slope> simulated;
  bool agree = false;
};

struct PipelineReport {
  int d = 0;
  std::uint64_t n = 0;
  Column density_column = 0;
  std::size_t long_count = 0;
  IntervalIndex base = 0;
  std::vector<std::uint8_t> base_word;
  std::vector<IntervalComparison> intervals;
  std::vector<TailCheck> tails;
  WaveMatch wave;
  /// Smallest interval >= base whose word has the cyclic shape; the predicted
  /// tail from there is a wave after its leading partial block.
  std::optional<IntervalIndex> first_cyclic;
  bool wave_consistent = true;

  bool all_exact() const noexcept;
  bool all_figure() const noexcept;
  bool tails_agree() const noexcept;
  /// "both" | "algorithm-exact" | "figure-suppressed" | "neither"
  std::string winning_mode() const;
};

/// Words are compared modulo a truncated final letter: when the input word's
/// last run ends at N the simulated word may be a prefix of the image, short
/// by at most the output of the last transition.
bool agrees_modulo_boundary(std::span<const std::uint8_t> simulated,
                            std::span<const std::uint8_t> image, bool boundary_flag,
                            std::size_t last_output_length);

PipelineReport pipeline_check(ModelParams params, std::uint64_t n);
PipelineReport pipeline_check(const AvalancheLog& log);

// ---------------------------------------------------------------------------
// Wave sweep over N.

struct SweepRow {
  std::uint64_t n = 0;
  Column wave_start = 0;  ///< i_N
  Column density_column = 0;  ///< L(D,N)
  std::size_t width = 0;  ///< number of non-empty columns of pi(N)
  bool matched = false;
};

/// i_N <= slope * log2(N+2) + intercept.
struct Envelope {
  double slope = 0;
  double intercept = 0;
  bool contains(std::uint64_t n, Column wave_start) const noexcept;
};

struct SweepSummary {
  int d = 0;
  std::uint64_t n_max = 0;
  std::uint64_t matched = 0;
  std::uint64_t envelope_violations = 0;
  std::uint64_t first_violation = 0;
  double max_ratio = 0;  ///< max over N of i_N / log2(N+2)
  Column max_wave_start = 0;
  Column max_density_column = 0;
  std::size_t final_width = 0;
};

using SweepSink = std::function<void(const SweepRow&)>;

/// Runs N = 0..n_max incrementally (N = 0 included).
SweepSummary theorem_sweep(ModelParams params, std::uint64_t n_max, const Envelope& envelope,
                           const SweepSink& sink = {});

/// Envelope frozen from calibration sweeps (D = 3 to N = 10^5, D = 4 and 5 to
/// N = 10^4). Throws InputError for other D.
Envelope calibrated_envelope(ModelParams params);

/// L(D,N) <= slope * log2(N+2) + intercept, frozen from the D = 3 calibration
/// sweep. Throws InputError for other D.
Envelope density_envelope(ModelParams params);

}  // namespace kspm
