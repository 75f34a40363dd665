#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kspm/configuration.hpp"

namespace kspm {

/// The k-th avalanche: leftmost strategy from pi(k-1) + one grain on column 0
/// down to pi(k), with the fields derived by `analyze`.
struct Avalanche {
  std::uint64_t index = 0;
  Strategy firings;

  // Derived.
  std::vector<Column> fired;  ///< sorted fired columns
  std::vector<Column> peaks;  ///< columns exceeding every earlier firing
  Column dense_start = 0;     ///< minimal l with [l, max_fired] all fired
  std::optional<Column> max_fired;

  bool fires(Column c) const noexcept;
  std::optional<Column> max_peak() const noexcept {
    return peaks.empty() ? std::nullopt : std::optional<Column>(peaks.back());
  }
};

/// Avalanches s^1..s^N of one run, optionally with retained fixed points.
struct AvalancheLog {
  ModelParams params{3};
  std::uint64_t n = 0;
  std::vector<Avalanche> avalanches;       ///< avalanches[k-1] is s^k
  std::map<std::uint64_t, Configuration> snapshots;  ///< pi(k) keyed by k

  const Avalanche& at(std::uint64_t k) const { return avalanches.at(k - 1); }
};

/// Runs the incremental fixed-point computation up to N and records every
/// avalanche (already analyzed).
AvalancheLog record_avalanches(ModelParams params, std::uint64_t n);

/// Fills the derived fields of one avalanche. Throws IntegrityError when a
/// column is fired twice.
void analyze(Avalanche& avalanche);
/// Fills the derived fields of every avalanche in the log.
void analyze(AvalancheLog& log);

/// L(D,N): max over k of dense_start(s^k); 0 for an empty log.
Column global_density_column(const AvalancheLog& log);

/// Phi(D,N) and the matching fixed points mu^0 = pi(0), mu^j = pi(k_j).
struct LongAvalanches {
  Column density_column = 0;          ///< L(D,N)
  std::vector<std::uint64_t> indices;  ///< increasing k with L+D-1 fired
  std::vector<Configuration> mu;       ///< empty unless requested; size = indices+1
};

LongAvalanches long_avalanches(const AvalancheLog& log, bool with_snapshots = false);

/// Replays the recorded firings of avalanche k from pi(k-1) + one grain.
Configuration replay(const Configuration& previous, const Avalanche& avalanche, ModelParams params);

/// Applicability threshold for interval types. Strict is the hypothesis of the
/// interval lemma, (D-1)i >= L + 3(D-1); Relaxed is the peak-similarity bound
/// (D-1)i >= L + 2(D-1).
enum class TypeThreshold { Strict, Relaxed };

using IntervalIndex = std::size_t;
/// A type letter; nullopt is the empty type epsilon.
using TypeLetter = std::optional<std::uint8_t>;

bool type_applicable(IntervalIndex i, ModelParams params, Column density_column,
                     TypeThreshold threshold = TypeThreshold::Strict) noexcept;

/// Smallest interval index satisfying the threshold.
IntervalIndex base_interval(ModelParams params, Column density_column,
                            TypeThreshold threshold = TypeThreshold::Strict) noexcept;

/// Type alpha(i,k) of a long avalanche on interval I_i.
///
/// p = largest peak below (D-1)i; returns p mod (D-1) when p lies in I_{i-1},
/// epsilon otherwise. Throws DomainError when the interval is below the
/// threshold or the avalanche does not fire L+D-1.
TypeLetter avalanche_type(const Avalanche& avalanche, IntervalIndex i, ModelParams params,
                          Column density_column, TypeThreshold threshold = TypeThreshold::Strict);

/// Sequence of types of the i-influent subsequences of Phi(D,N).
struct InfluentTypeWord {
  IntervalIndex interval = 0;
  std::vector<std::uint8_t> letters;
  std::vector<std::size_t> run_sizes;  ///< long avalanches in each influent run
  bool boundary_flag = false;          ///< last run ends at the last long avalanche
};

/// Collapses runs of equal types over a per-avalanche type sequence, dropping
/// epsilon runs.
InfluentTypeWord collapse_types(const std::vector<TypeLetter>& types);

InfluentTypeWord influent_type_word(const AvalancheLog& log, const LongAvalanches& phi,
                                    IntervalIndex i,
                                    TypeThreshold threshold = TypeThreshold::Strict);
InfluentTypeWord influent_type_word(const AvalancheLog& log, IntervalIndex i,
                                    TypeThreshold threshold = TypeThreshold::Strict);

}  // namespace kspm
