#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kspm {

using Column = std::size_t;
using Slope = std::int64_t;

/// Rule parameter of KSPM(D). D = 2 is the classical sand pile model.
class ModelParams {
 public:
  explicit ModelParams(int d);

  int d() const noexcept { return d_; }
  /// D - 1: grains moved per firing, and the interval width.
  int spread() const noexcept { return d_ - 1; }

  friend bool operator==(ModelParams, ModelParams) = default;

 private:
  int d_;
};

/// Slope sequence sigma_i = h_i - h_{i+1}, implicitly followed by 0^omega.
///
/// Always stored in canonical form (no trailing zeros), so the defaulted
/// equality compares configurations exactly.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Slope> slopes);
  Configuration(std::initializer_list<Slope> slopes);

  /// sigma_i, zero past the stored prefix.
  Slope operator[](Column i) const noexcept {
    return i < slopes_.size() ? slopes_[i] : 0;
  }
  /// Number of stored entries; the last one is non-zero unless empty.
  std::size_t size() const noexcept { return slopes_.size(); }
  bool empty() const noexcept { return slopes_.empty(); }
  std::span<const Slope> slopes() const noexcept { return slopes_; }

  /// sum_i (i+1) * sigma_i, the number of grains.
  std::int64_t mass() const noexcept;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  void canonicalize();

  std::vector<Slope> slopes_;
};

/// Height profile h_0 >= h_1 >= ... >= 0, ultimately zero.
struct HeightProfile {
  std::vector<std::int64_t> heights;

  std::int64_t operator[](Column i) const noexcept {
    return i < heights.size() ? heights[i] : 0;
  }
  friend bool operator==(const HeightProfile&, const HeightProfile&) = default;
};

/// Suffix sums of the slopes.
HeightProfile heights(const Configuration& sigma);
/// Differences of a non-increasing profile; throws InputError otherwise.
Configuration from_heights(const HeightProfile& profile);

/// Ordered sequence of fired columns; time t is the 1-based position.
struct Strategy {
  std::vector<Column> firings;

  std::size_t size() const noexcept { return firings.size(); }
  bool empty() const noexcept { return firings.empty(); }
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

}  // namespace kspm
