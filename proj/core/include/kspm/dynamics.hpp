#pragma once

#include <cstdint>
#include <functional>

#include "kspm/configuration.hpp"

namespace kspm {

/// Applies the KSPM(D) transition on column i. Throws RuleViolation when
/// sigma_i < D.
Configuration fire(const Configuration& sigma, Column i, ModelParams params);

bool is_stable(const Configuration& sigma, ModelParams params) noexcept;

/// sigma with one more grain on column 0.
Configuration add_grain(Configuration sigma);

struct Stabilization {
  Configuration fixed_point;
  Strategy strategy;
};

/// Fires the leftmost fireable column until stable.
///
/// A firing budget derived from the mass guards termination; exceeding it
/// raises InternalError.
Stabilization stabilize_leftmost(const Configuration& sigma, ModelParams params);

/// Upper bound on the number of firings from any configuration of the given
/// mass. Every firing moves D-1 grains right by a total of D(D-1)/2 columns and
/// no grain ever passes column `mass`, so the number of firings is at most
/// mass^2 / (D(D-1)/2).
std::uint64_t firing_budget(std::int64_t mass, ModelParams params) noexcept;

/// Called once per grain with (k, avalanche s^k, pi(k)).
using AvalancheObserver =
    std::function<void(std::uint64_t k, const Strategy& avalanche, const Configuration& fixed)>;

/// pi(N) by the inductive scheme pi(k) = pi(pi(k-1) + one grain on column 0).
Configuration fixed_point(ModelParams params, std::uint64_t n,
                          const AvalancheObserver& observer = {});

/// Reusable incremental fixed-point iterator; `step()` adds one grain and
/// returns the leftmost avalanche it caused.
class FixedPointIterator {
 public:
  explicit FixedPointIterator(ModelParams params);

  const Strategy& step();

  std::uint64_t grains() const noexcept { return k_; }
  /// Current fixed point pi(k) as a canonical configuration.
  Configuration current() const;
  /// Raw slope buffer; may carry trailing zeros.
  std::span<const Slope> raw() const noexcept { return slopes_; }
  /// Index of the last non-zero slope plus one.
  std::size_t width() const noexcept;
  ModelParams params() const noexcept { return params_; }

 private:
  ModelParams params_;
  std::uint64_t k_ = 0;
  std::vector<Slope> slopes_;
  Strategy last_;
};

}  // namespace kspm
