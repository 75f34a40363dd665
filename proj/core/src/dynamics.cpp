#include "kspm/dynamics.hpp"

#include <set>
#include <string>

#include "kspm/error.hpp"

namespace kspm {
namespace {

void apply_firing(std::vector<Slope>& s, Column i, int d) {
  const auto reach = i + static_cast<Column>(d - 1);
  if (s.size() <= reach) s.resize(reach + 1, 0);
  if (i > 0) s[i - 1] += d - 1;
  s[i] -= d;
  s[reach] += 1;
}

// Leftmost stabilization on a raw slope buffer. After firing column i only
// i-1, i and i+D-1 change; nothing left of i was fireable, so the next
// leftmost column is i-1, else i, else the smallest pending column.
void stabilize_in_place(std::vector<Slope>& s, ModelParams params, Strategy& out,
                        std::uint64_t budget) {
  const int d = params.d();
  std::set<Column> pending;
  for (Column i = 0; i < s.size(); ++i) {
    if (s[i] >= d) pending.insert(i);
  }
  std::uint64_t fired = 0;
  while (!pending.empty()) {
    Column i = *pending.begin();
    pending.erase(pending.begin());
    while (true) {
      if (++fired > budget) {
        throw InternalError("firing budget of " + std::to_string(budget) +
                            " exceeded during stabilization");
      }
      apply_firing(s, i, d);
      out.firings.push_back(i);
      const Column reach = i + static_cast<Column>(d - 1);
      if (s[reach] >= d) pending.insert(reach);
      if (i > 0 && s[i - 1] >= d) {
        if (s[i] >= d) pending.insert(i);
        i = i - 1;
        pending.erase(i);
      } else if (s[i] >= d) {
        // fire i again
      } else {
        break;
      }
    }
  }
}

}  // namespace

Configuration fire(const Configuration& sigma, Column i, ModelParams params) {
  if (sigma[i] < params.d()) {
    throw RuleViolation("column " + std::to_string(i) + " holds slope " +
                        std::to_string(sigma[i]) + " < D = " + std::to_string(params.d()));
  }
  std::vector<Slope> s(sigma.slopes().begin(), sigma.slopes().end());
  apply_firing(s, i, params.d());
  return Configuration(std::move(s));
}

bool is_stable(const Configuration& sigma, ModelParams params) noexcept {
  for (const auto v : sigma.slopes()) {
    if (v >= params.d()) return false;
  }
  return true;
}

Configuration add_grain(Configuration sigma) {
  std::vector<Slope> s(sigma.slopes().begin(), sigma.slopes().end());
  if (s.empty()) s.push_back(0);
  s[0] += 1;
  return Configuration(std::move(s));
}

std::uint64_t firing_budget(std::int64_t mass, ModelParams params) noexcept {
  const auto m = static_cast<std::uint64_t>(mass);
  const auto step = static_cast<std::uint64_t>(params.d()) * (params.d() - 1) / 2;
  return m * m / step + 1;
}

Stabilization stabilize_leftmost(const Configuration& sigma, ModelParams params) {
  std::vector<Slope> s(sigma.slopes().begin(), sigma.slopes().end());
  Stabilization result;
  stabilize_in_place(s, params, result.strategy, firing_budget(sigma.mass(), params));
  result.fixed_point = Configuration(std::move(s));
  return result;
}

FixedPointIterator::FixedPointIterator(ModelParams params) : params_(params) {}

const Strategy& FixedPointIterator::step() {
  ++k_;
  if (slopes_.empty()) slopes_.push_back(0);
  slopes_[0] += 1;
  last_.firings.clear();
  const int d = params_.d();
  if (slopes_[0] >= d) {
    // Only column 0 can be fireable, so the pending set starts as {0} and the
    // budget is the mass bound for k grains.
    stabilize_in_place(slopes_, params_, last_,
                       firing_budget(static_cast<std::int64_t>(k_), params_));
  }
  return last_;
}

Configuration FixedPointIterator::current() const {
  return Configuration(std::vector<Slope>(slopes_.begin(), slopes_.begin() + width()));
}

std::size_t FixedPointIterator::width() const noexcept {
  std::size_t w = slopes_.size();
  while (w > 0 && slopes_[w - 1] == 0) --w;
  return w;
}

Configuration fixed_point(ModelParams params, std::uint64_t n, const AvalancheObserver& observer) {
  FixedPointIterator it(params);
  for (std::uint64_t k = 1; k <= n; ++k) {
    const auto& avalanche = it.step();
    if (observer) observer(k, avalanche, it.current());
  }
  return it.current();
}

}  // namespace kspm
