#include "kspm/lemmas.hpp"

#include <algorithm>
#include <optional>

#include "kspm/dynamics.hpp"

namespace kspm {
namespace {

Slope at(std::span<const Slope> s, Column i) { return i < s.size() ? s[i] : 0; }

std::string where(std::uint64_t k, Column c) {
  return "k=" + std::to_string(k) + " column=" + std::to_string(c);
}

void check_peaks(const Avalanche& a, std::span<const Slope> before, int d,
                 AvalancheLemmaReport& report) {
  if (!a.max_fired) return;
  const auto w = static_cast<Column>(d - 1);
  const Column l = a.dense_start;
  // Hypothesis: columns l .. l+D-2 are all fired.
  if (*a.max_fired + 1 < l + w) return;

  for (Column p = l + w; p <= *a.max_fired + w + 1; ++p) {
    const bool is_peak = std::binary_search(a.peaks.begin(), a.peaks.end(), p);
    const bool near_peak = std::any_of(a.peaks.begin(), a.peaks.end(),
                                       [&](Column q) { return q < p && p <= q + w; });
    const bool predicted = at(before, p) == d - 1 && near_peak;
    report.peak_characterization.record(is_peak == predicted, where(a.index, p));
  }

  const auto& s = a.firings.firings;
  for (std::size_t j = 1; j < a.peaks.size(); ++j) {
    const Column p = a.peaks[j];
    if (p < l + w) continue;
    const auto t = static_cast<std::size_t>(std::find(s.begin(), s.end(), p) - s.begin());
    const std::size_t run = p - a.peaks[j - 1] - 1;
    bool ok = t + run < s.size();
    for (std::size_t u = t + 1; ok && u <= t + run; ++u) ok = s[u] + 1 == s[u - 1];
    report.descending_run.record(ok, where(a.index, p));
  }
}

bool fired_once(const Avalanche& a) {
  auto cols = a.firings.firings;
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

}  // namespace

void PropertyTally::record(bool ok, const std::string& location) {
  ++checked;
  if (ok) return;
  if (violations++ == 0) first_violation = location;
}

std::vector<const PropertyTally*> AvalancheLemmaReport::tallies() const {
  return {&fired_once,      &peak_characterization, &descending_run,
          &long_update,     &peak_similarity,       &influent_containment,
          &reconstruction};
}

bool AvalancheLemmaReport::ok() const noexcept {
  for (const auto* t : tallies()) {
    if (!t->ok()) return false;
  }
  return true;
}

AvalancheLemmaReport check_avalanche_lemmas(ModelParams params, std::uint64_t n) {
  AvalancheLemmaReport report;
  report.d = params.d();
  report.n = n;

  // Pass 1: the log (analyze would throw on a repeated column, so the
  // at-most-once property is tallied on the raw strategies in pass 2).
  AvalancheLog log;
  log.params = params;
  log.n = n;
  {
    FixedPointIterator it(params);
    for (std::uint64_t k = 1; k <= n; ++k) {
      Avalanche a;
      a.index = k;
      a.firings = it.step();
      if (fired_once(a)) analyze(a);
      log.avalanches.push_back(std::move(a));
    }
  }
  const auto phi = long_avalanches(log);
  const Column l = phi.density_column;
  const int d = params.d();
  const auto w = static_cast<Column>(params.spread());
  report.density_column = l;
  report.long_count = phi.indices.size();

  // Pass 2: replay with pi(k-1) at hand.
  FixedPointIterator it(params);
  std::vector<Slope> before;
  std::vector<Slope> mu;  // rebuilt from long-avalanche updates only
  std::optional<std::vector<Column>> previous_long_peaks;
  std::size_t next_long = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    before.assign(it.raw().begin(), it.raw().end());
    it.step();
    const auto& a = log.at(k);
    const bool once = fired_once(a);
    report.fired_once.record(once, where(k, 0));
    if (!once) continue;
    check_peaks(a, before, d, report);

    if (next_long >= phi.indices.size() || phi.indices[next_long] != k) continue;
    ++next_long;

    // Long-avalanche update identity.
    const Column top = *a.max_peak();
    const auto after = it.raw();
    bool ok = at(before, top) == d - 1 && at(after, top) == 0;
    const Column limit = std::max(before.size(), after.size()) + w + 1;
    for (Column c = l + w; ok && c < limit; ++c) {
      if (c == top) continue;
      const Slope expected = at(before, c) + ((c > top && c <= top + w) ? 1 : 0);
      ok = at(after, c) == expected;
    }
    report.long_update.record(ok, where(k, top));

    if (mu.size() <= top + w) mu.resize(top + w + 1, 0);
    mu[top] = 0;
    for (Column c = top + 1; c <= top + w; ++c) mu[c] += 1;

    // Peak similarity over peaks >= L + 2(D-1).
    std::vector<Column> current;
    for (const auto p : a.peaks) {
      if (p >= l + 2 * w) current.push_back(p);
    }
    if (previous_long_peaks && !previous_long_peaks->empty()) {
      const auto& prev = *previous_long_peaks;
      std::vector<Column> lhs(prev.begin(), prev.end() - 1);
      std::vector<Column> rhs;
      for (const auto p : current) {
        if (p < prev.back()) rhs.push_back(p);
      }
      report.peak_similarity.record(lhs == rhs, where(k, prev.back()));
    }
    previous_long_peaks = std::move(current);
  }

  if (n > 0) {
    const auto final_slopes = it.raw();
    bool ok = true;
    const Column limit = std::max(final_slopes.size(), mu.size());
    Column bad = 0;
    for (Column c = l + 2 * w; ok && c < limit; ++c) {
      ok = at(final_slopes, c) == at(mu, c);
      bad = c;
    }
    report.reconstruction.record(ok, where(n, bad));
  }

  if (report.fired_once.ok() && !phi.indices.empty()) {
    // Containment of (i+1)-influent runs in i-influent runs, from the base
    // interval until the words die out.
    const auto run_ids = [&](IntervalIndex i) {
      std::vector<long> ids;
      long id = -1;
      TypeLetter prev{};
      bool first = true;
      for (const auto k : phi.indices) {
        const auto t = avalanche_type(log.at(k), i, params, l);
        if (first || t != prev) ++id;
        first = false;
        prev = t;
        ids.push_back(t ? id : -1);
      }
      return ids;
    };
    for (auto i = base_interval(params, l);; ++i) {
      const auto outer = run_ids(i);
      const auto inner = run_ids(i + 1);
      if (std::all_of(outer.begin(), outer.end(), [](long v) { return v < 0; })) break;
      for (std::size_t j = 0; j < inner.size();) {
        if (inner[j] < 0) {
          ++j;
          continue;
        }
        std::size_t e = j;
        bool ok = outer[j] >= 0;
        while (e < inner.size() && inner[e] == inner[j]) {
          ok = ok && outer[e] == outer[j];
          ++e;
        }
        report.influent_containment.record(ok, "interval=" + std::to_string(i) +
                                                   " k=" + std::to_string(phi.indices[j]));
        j = e;
      }
    }
  }
  return report;
}

}  // namespace kspm
