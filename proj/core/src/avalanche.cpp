#include "kspm/avalanche.hpp"

#include <algorithm>
#include <string>

#include "kspm/dynamics.hpp"
#include "kspm/error.hpp"

namespace kspm {

bool Avalanche::fires(Column c) const noexcept {
  return std::binary_search(fired.begin(), fired.end(), c);
}

void analyze(Avalanche& a) {
  a.fired = a.firings.firings;
  std::sort(a.fired.begin(), a.fired.end());
  const auto dup = std::adjacent_find(a.fired.begin(), a.fired.end());
  if (dup != a.fired.end()) {
    throw IntegrityError("avalanche " + std::to_string(a.index) + " fires column " +
                         std::to_string(*dup) + " more than once");
  }

  a.peaks.clear();
  for (const auto c : a.firings.firings) {
    if (a.peaks.empty() || c > a.peaks.back()) a.peaks.push_back(c);
  }

  if (a.fired.empty()) {
    a.max_fired.reset();
    a.dense_start = 0;
    return;
  }
  a.max_fired = a.fired.back();
  // Walk down the contiguous run that ends at the largest fired column.
  std::size_t j = a.fired.size() - 1;
  while (j > 0 && a.fired[j - 1] + 1 == a.fired[j]) --j;
  a.dense_start = a.fired[j];
}

void analyze(AvalancheLog& log) {
  for (auto& a : log.avalanches) analyze(a);
}

AvalancheLog record_avalanches(ModelParams params, std::uint64_t n) {
  AvalancheLog log;
  log.params = params;
  log.n = n;
  log.avalanches.reserve(n);
  const auto reach = static_cast<Column>(params.spread());
  Column running_l = 0;
  FixedPointIterator it(params);
  for (std::uint64_t k = 1; k <= n; ++k) {
    Avalanche a;
    a.index = k;
    a.firings = it.step();
    analyze(a);
    running_l = std::max(running_l, a.dense_start);
    // Any avalanche that is long for the final L also fires the running
    // L + D - 1, so these snapshots cover every mu^j.
    if (a.fires(running_l + reach)) log.snapshots.emplace(k, it.current());
    log.avalanches.push_back(std::move(a));
  }
  if (n > 0) log.snapshots.insert_or_assign(n, it.current());
  return log;
}

Column global_density_column(const AvalancheLog& log) {
  Column l = 0;
  for (const auto& a : log.avalanches) l = std::max(l, a.dense_start);
  return l;
}

Configuration replay(const Configuration& previous, const Avalanche& avalanche,
                     ModelParams params) {
  auto sigma = add_grain(previous);
  for (const auto c : avalanche.firings.firings) sigma = fire(sigma, c, params);
  return sigma;
}

LongAvalanches long_avalanches(const AvalancheLog& log, bool with_snapshots) {
  LongAvalanches phi;
  phi.density_column = global_density_column(log);
  const Column target = phi.density_column + static_cast<Column>(log.params.spread());
  for (const auto& a : log.avalanches) {
    if (a.fires(target)) phi.indices.push_back(a.index);
  }
  if (!with_snapshots) return phi;

  phi.mu.reserve(phi.indices.size() + 1);
  phi.mu.emplace_back();
  FixedPointIterator it(log.params);
  for (const auto k : phi.indices) {
    if (auto found = log.snapshots.find(k); found != log.snapshots.end()) {
      phi.mu.push_back(found->second);
      continue;
    }
    // Snapshot missing (hand-built log): recompute.
    while (it.grains() < k) it.step();
    phi.mu.push_back(it.current());
  }
  return phi;
}

bool type_applicable(IntervalIndex i, ModelParams params, Column density_column,
                     TypeThreshold threshold) noexcept {
  const auto w = static_cast<Column>(params.spread());
  const Column margin = threshold == TypeThreshold::Strict ? 3 * w : 2 * w;
  return w * i >= density_column + margin;
}

IntervalIndex base_interval(ModelParams params, Column density_column,
                            TypeThreshold threshold) noexcept {
  const auto w = static_cast<Column>(params.spread());
  const Column margin = threshold == TypeThreshold::Strict ? 3 * w : 2 * w;
  return (density_column + margin + w - 1) / w;
}

TypeLetter avalanche_type(const Avalanche& a, IntervalIndex i, ModelParams params,
                          Column density_column, TypeThreshold threshold) {
  if (!type_applicable(i, params, density_column, threshold)) {
    throw DomainError("interval " + std::to_string(i) +
                      " lies below the type applicability threshold for L = " +
                      std::to_string(density_column));
  }
  const auto w = static_cast<Column>(params.spread());
  if (!a.fires(density_column + w)) {
    throw DomainError("avalanche " + std::to_string(a.index) + " is not long");
  }
  const Column start = w * i;
  const auto it = std::lower_bound(a.peaks.begin(), a.peaks.end(), start);
  if (it == a.peaks.begin()) return std::nullopt;
  const Column p = *std::prev(it);
  if (p + w < start) return std::nullopt;  // left of I_{i-1}
  return static_cast<std::uint8_t>(p % w);
}

InfluentTypeWord collapse_types(const std::vector<TypeLetter>& types) {
  InfluentTypeWord word;
  for (std::size_t j = 0; j < types.size(); ++j) {
    const bool starts_run = j == 0 || types[j] != types[j - 1];
    if (!types[j]) continue;
    if (starts_run) {
      word.letters.push_back(*types[j]);
      word.run_sizes.push_back(0);
    }
    ++word.run_sizes.back();
  }
  word.boundary_flag = !types.empty() && types.back().has_value();
  return word;
}

InfluentTypeWord influent_type_word(const AvalancheLog& log, const LongAvalanches& phi,
                                    IntervalIndex i, TypeThreshold threshold) {
  if (!type_applicable(i, log.params, phi.density_column, threshold)) {
    throw DomainError("interval " + std::to_string(i) +
                      " lies below the type applicability threshold for L = " +
                      std::to_string(phi.density_column));
  }
  std::vector<TypeLetter> types;
  types.reserve(phi.indices.size());
  for (const auto k : phi.indices) {
    types.push_back(avalanche_type(log.at(k), i, log.params, phi.density_column, threshold));
  }
  auto word = collapse_types(types);
  word.interval = i;
  return word;
}

InfluentTypeWord influent_type_word(const AvalancheLog& log, IntervalIndex i,
                                    TypeThreshold threshold) {
  return influent_type_word(log, long_avalanches(log), i, threshold);
}

}  // namespace kspm
