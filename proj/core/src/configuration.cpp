#include "kspm/configuration.hpp"

#include <string>

#include "kspm/error.hpp"

namespace kspm {

ModelParams::ModelParams(int d) : d_(d) {
  if (d < 2) {
    throw InputError("KSPM(D) requires D >= 2, got D = " + std::to_string(d));
  }
}

Configuration::Configuration(std::vector<Slope> slopes) : slopes_(std::move(slopes)) {
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    if (slopes_[i] < 0) {
      throw InputError("negative slope at column " + std::to_string(i));
    }
  }
  canonicalize();
}

Configuration::Configuration(std::initializer_list<Slope> slopes)
    : Configuration(std::vector<Slope>(slopes)) {}

void Configuration::canonicalize() {
  while (!slopes_.empty() && slopes_.back() == 0) slopes_.pop_back();
}

std::int64_t Configuration::mass() const noexcept {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    total += static_cast<std::int64_t>(i + 1) * slopes_[i];
  }
  return total;
}

HeightProfile heights(const Configuration& sigma) {
  HeightProfile profile;
  profile.heights.resize(sigma.size());
  std::int64_t running = 0;
  for (std::size_t i = sigma.size(); i-- > 0;) {
    running += sigma[i];
    profile.heights[i] = running;
  }
  return profile;
}

Configuration from_heights(const HeightProfile& profile) {
  std::vector<Slope> slopes(profile.heights.size());
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const auto diff = profile[i] - profile[i + 1];
    if (diff < 0 || profile[i] < 0) {
      throw InputError("height profile is not non-increasing at column " + std::to_string(i));
    }
    slopes[i] = diff;
  }
  return Configuration(std::move(slopes));
}

}  // namespace kspm
