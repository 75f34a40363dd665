#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kspm/avalanche.hpp"

namespace kspm {

/// Tally for one checked property.
struct PropertyTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  explicit PropertyTally(std::string label) : name(std::move(label)) {}

  void record(bool ok, const std::string& where);
  bool ok() const noexcept { return violations == 0; }
};

/// Exhaustive check of the avalanche combinatorics up to N.
struct AvalancheLemmaReport {
  int d = 0;
  std::uint64_t n = 0;
  Column density_column = 0;
  std::size_t long_count = 0;

  PropertyTally fired_once{"each column fired at most once per avalanche"};
  PropertyTally peak_characterization{"peak iff pi(k-1)_p = D-1 and within D-1 of a peak"};
  PropertyTally descending_run{"after a peak the next p_i - p_{i-1} - 1 firings descend"};
  PropertyTally long_update{"long avalanche update: 0 at max peak, +1 on the next D-1 columns"};
  PropertyTally peak_similarity{"consecutive long avalanches share peaks below max P^k"};
  PropertyTally influent_containment{"(i+1)-influent runs lie inside i-influent runs"};
  PropertyTally reconstruction{"replaying long-avalanche updates reproduces pi(N) from L+2(D-1)"};

  std::vector<const PropertyTally*> tallies() const;
  bool ok() const noexcept;
};

AvalancheLemmaReport check_avalanche_lemmas(ModelParams params, std::uint64_t n);

}  // namespace kspm
