#include "kspm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "kspm/dynamics.hpp"
#include "kspm/error.hpp"
#include "kspm/lemmas.hpp"
#include "kspm/parallel.hpp"
#include "kspm/transducer.hpp"
#include "kspm/wave.hpp"
#include "kspm/words.hpp"

namespace kspm {
namespace {

using Rng = std::mt19937_64;

CheckResult tally(std::string name, std::uint64_t checked, std::uint64_t violations,
                  std::string detail = {}, bool hard = true) {
  CheckResult r;
  r.name = std::move(name);
  r.checked = checked;
  r.violations = violations;
  r.passed = violations == 0;
  r.hard = hard;
  r.detail = std::move(detail);
  return r;
}

CheckResult from_tally(const PropertyTally& t, const std::string& prefix) {
  auto r = tally(prefix + t.name, t.checked, t.violations);
  if (!t.ok()) r.detail = "first violation at " + t.first_violation;
  return r;
}

// ---------------------------------------------------------------------------
// core-laws

std::vector<Column> fireable(const Configuration& s, int d) {
  std::vector<Column> out;
  for (Column i = 0; i < s.size(); ++i) {
    if (s[i] >= d) out.push_back(i);
  }
  return out;
}

Configuration random_configuration(Rng& rng, int d, std::int64_t max_mass) {
  std::uniform_int_distribution<std::size_t> length(1, 6);
  std::uniform_int_distribution<Slope> value(0, 2 * d + 1);
  while (true) {
    std::vector<Slope> s(length(rng));
    for (auto& v : s) v = value(rng);
    Configuration c(std::move(s));
    if (c.mass() <= max_mass) return c;
  }
}

enum class Policy { Leftmost, Rightmost, Random };

struct PolicyRun {
  Configuration fixed;
  std::uint64_t firings = 0;
  std::uint64_t mass_violations = 0;
};

PolicyRun stabilize_with(Configuration s, ModelParams p, Policy policy, Rng& rng) {
  PolicyRun run;
  const auto mass = s.mass();
  while (true) {
    const auto f = fireable(s, p.d());
    if (f.empty()) break;
    Column c = f.front();
    if (policy == Policy::Rightmost) c = f.back();
    if (policy == Policy::Random) {
      c = f[std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng)];
    }
    s = fire(s, c, p);
    ++run.firings;
    if (s.mass() != mass) ++run.mass_violations;
  }
  run.fixed = std::move(s);
  return run;
}

// Random legal strategy of at most `steps` firings; stops early at a fixed point.
std::vector<Column> random_strategy(Configuration s, ModelParams p, std::size_t steps, Rng& rng,
                                    Configuration& end) {
  std::vector<Column> strategy;
  for (std::size_t t = 0; t < steps; ++t) {
    const auto f = fireable(s, p.d());
    if (f.empty()) break;
    const auto c = f[std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng)];
    s = fire(s, c, p);
    strategy.push_back(c);
  }
  end = std::move(s);
  return strategy;
}

std::map<Column, std::size_t> counts(const std::vector<Column>& strategy) {
  std::map<Column, std::size_t> m;
  for (const auto c : strategy) ++m[c];
  return m;
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed || !c.hard; });
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << " (seed " << seed << ")\n";
  for (const auto& c : checks) {
    const char* tag = c.passed ? "PASS" : (c.hard ? "FAIL" : "NOTE");
    out << "  [" << tag << "] " << c.name << ": checked=" << c.checked
        << " violations=" << c.violations;
    if (!c.detail.empty()) out << "; " << c.detail;
    out << '\n';
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["passed"] = passed();
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"hard", c.hard},
                   {"checked", c.checked},
                   {"violations", c.violations},
                   {"detail", c.detail}});
  }
  return j.dump(2);
}

std::vector<std::string_view> suite_names() {
  return {"core-laws", "avalanche-lemmas", "appendix-words", "theorem3", "conjectureD"};
}

SuiteReport verify_core_laws(const VerifyOptions& o) {
  SuiteReport report{"core-laws", o.seed, {}};
  Rng rng(o.seed);
  const std::vector<int> ds{2, 3, 4, 5};

  std::uint64_t firings = 0, mass_bad = 0;
  std::uint64_t diamond_checked = 0, diamond_bad = 0;
  std::uint64_t equal_checked = 0, equal_bad = 0;
  std::uint64_t unequal_checked = 0, unequal_bad = 0;
  std::uint64_t converge_bad = 0;

  for (std::uint64_t sample = 0; sample < o.samples; ++sample) {
    const ModelParams p(ds[sample % ds.size()]);
    const auto sigma = random_configuration(rng, p.d(), o.max_mass);

    // Convergence under three policies, with mass tracked on every firing.
    const auto left = stabilize_with(sigma, p, Policy::Leftmost, rng);
    const auto right = stabilize_with(sigma, p, Policy::Rightmost, rng);
    const auto random = stabilize_with(sigma, p, Policy::Random, rng);
    firings += left.firings + right.firings + random.firings;
    mass_bad += left.mass_violations + right.mass_violations + random.mass_violations;
    const auto lib = stabilize_leftmost(sigma, p).fixed_point;
    if (!(left.fixed == right.fixed && left.fixed == random.fixed && left.fixed == lib)) {
      ++converge_bad;
    }

    // Diamond property.
    const auto f = fireable(sigma, p.d());
    if (f.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
      const auto i = pick(rng);
      auto j = pick(rng);
      if (j == i) j = (i + 1) % f.size();
      ++diamond_checked;
      const auto ij = fire(fire(sigma, f[i], p), f[j], p);
      const auto ji = fire(fire(sigma, f[j], p), f[i], p);
      if (!(ij == ji)) ++diamond_bad;
    }

    // Strategy equivalence: a random legal reordering of the same multiset.
    Configuration end0, end1;
    const auto s0 = random_strategy(sigma, p, 1 + sample % 40, rng, end0);
    {
      auto remaining = counts(s0);
      Configuration s = sigma;
      bool stuck = false;
      for (std::size_t t = 0; t < s0.size(); ++t) {
        std::vector<Column> options;
        for (const auto& [c, n] : remaining) {
          if (n > 0 && s[c] >= p.d()) options.push_back(c);
        }
        if (options.empty()) {
          stuck = true;
          break;
        }
        const auto c = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        --remaining[c];
        s = fire(s, c, p);
      }
      ++equal_checked;
      if (stuck || !(s == end0)) ++equal_bad;
    }
    // ... and an independent strategy: configurations coincide iff counts do.
    const auto s1 = random_strategy(sigma, p, 1 + (sample * 7) % 40, rng, end1);
    ++unequal_checked;
    if ((counts(s0) == counts(s1)) != (end0 == end1)) ++unequal_bad;
  }

  report.checks.push_back(tally("mass conserved on every firing", firings, mass_bad));
  report.checks.push_back(tally("diamond property", diamond_checked, diamond_bad));
  report.checks.push_back(
      tally("equal firing counts give equal configurations", equal_checked, equal_bad));
  report.checks.push_back(tally("configurations coincide iff firing counts coincide",
                                unequal_checked, unequal_bad));
  report.checks.push_back(
      tally("leftmost, rightmost and random stabilization agree", o.samples, converge_bad));

  // Incremental fixed points against direct stabilization of (N, 0^omega).
  const std::vector<int> direct_ds{3, 4, 5};
  std::vector<std::uint64_t> bad(direct_ds.size(), 0);
  parallel_for(direct_ds.size(), [&](std::size_t idx) {
    const ModelParams p(direct_ds[idx]);
    FixedPointIterator it(p);
    for (std::uint64_t n = 1; n <= o.direct_n_max; ++n) {
      it.step();
      const auto direct =
          stabilize_leftmost(Configuration{static_cast<Slope>(n)}, p).fixed_point;
      if (!(direct == it.current())) ++bad[idx];
    }
  });
  std::uint64_t total_bad = 0;
  for (const auto b : bad) total_bad += b;
  report.checks.push_back(tally("incremental fixed point equals direct stabilization (D=3,4,5)",
                                o.direct_n_max * direct_ds.size(), total_bad,
                                "N <= " + std::to_string(o.direct_n_max)));
  return report;
}

SuiteReport verify_avalanche_lemmas(const VerifyOptions& o) {
  SuiteReport report{"avalanche-lemmas", o.seed, {}};
  std::vector<AvalancheLemmaReport> reports(o.lemma_ds.size());
  parallel_for(o.lemma_ds.size(), [&](std::size_t i) {
    reports[i] = check_avalanche_lemmas(ModelParams(o.lemma_ds[i]), o.lemma_n_max);
  });
  for (const auto& r : reports) {
    const std::string prefix = "D=" + std::to_string(r.d) + ": ";
    for (const auto* t : r.tallies()) report.checks.push_back(from_tally(*t, prefix));
    report.checks.push_back(tally(prefix + "global density column and long avalanches", 1, 0,
                                  "N=" + std::to_string(r.n) + " L=" +
                                      std::to_string(r.density_column) +
                                      " long=" + std::to_string(r.long_count),
                                  false));
  }
  return report;
}

namespace {

Word from_bits(std::uint64_t bits, std::size_t length) {
  Word w(length);
  for (std::size_t i = 0; i < length; ++i) w[i] = static_cast<Letter>((bits >> i) & 1U);
  return w;
}

Word random_word(Rng& rng, std::size_t length) {
  // Half of the samples use a skewed letter frequency to reach large heights.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double bias = unit(rng) < 0.5 ? 0.5 : unit(rng);
  std::bernoulli_distribution coin(bias);
  Word w(length);
  for (auto& c : w) c = coin(rng) ? kB : kA;
  return w;
}

std::string edge_text(const TransducerMachine& m, const IntervalState& from, Letter letter) {
  const auto& e = m.edge(m.id_of(from), letter);
  const Letter l[] = {letter};
  return label(from) + " " + render_word(l, true) + "|" +
         (e.output.empty() ? std::string("eps") : render_word(e.output, true)) + " " +
         label(m.state(e.target));
}

}  // namespace

SuiteReport verify_appendix_words(const VerifyOptions& o) {
  SuiteReport report{"appendix-words", o.seed, {}};
  const auto exact = build_machine(3, OutputMode::AlgorithmExact);
  const auto figure = build_machine(3, OutputMode::FigureSuppressed);
  const auto q = [&](int a0, int a1) { return figure.id_of(IntervalState{{a0, a1}}); };
  const auto w = [](std::string_view s) { return parse_word(s, 3); };

  // Transition table against the D = 3 diagram.
  {
    const std::vector<std::string> expected{
        "21 a|a 12", "21 b|ab 11", "12 a|eps 22", "12 b|b 21",
        "11 a|eps 21", "11 b|eps 22", "22 a|ba 11", "22 b|ba 12",
        "00 a|eps 10", "00 b|eps 11", "10 a|eps 20", "10 b|eps 21",
        "20 a|eps 11", "20 b|eps 12"};
    std::uint64_t bad = 0;
    std::string detail;
    for (const auto& line : expected) {
      const IntervalState from{{line[0] - '0', line[1] - '0'}};
      const Letter letter = line[3] == 'a' ? kA : kB;
      const auto got = edge_text(figure, from, letter);
      if (got != line) {
        ++bad;
        detail += "[" + got + " != " + line + "] ";
      }
    }
    std::uint64_t recurrent = 0;
    for (std::size_t s = 0; s < figure.state_count(); ++s) recurrent += figure.recurrent(s);
    if (figure.state_count() != 7 || recurrent != 4) {
      ++bad;
      detail += "states=" + std::to_string(figure.state_count()) +
                " recurrent=" + std::to_string(recurrent);
    }
    report.checks.push_back(tally("D=3 machine matches the diagram (figure-suppressed)",
                                  expected.size() + 1, bad, detail));
    const auto e20a = edge_text(exact, IntervalState{{2, 0}}, kA);
    const auto e20b = edge_text(exact, IntervalState{{2, 0}}, kB);
    report.checks.push_back(tally("algorithm-exact transient outputs", 2, 0,
                                  e20a + ", " + e20b + " (diagram prints eps)", false));
  }

  // Worked examples.
  {
    std::uint64_t bad = 0;
    if (figure.run(w("abaaaaab")).output != w("abaab")) ++bad;
    for (int n = 1; n <= 200; ++n) {
      Word u, v;
      for (int j = 0; j < n; ++j) u.insert(u.end(), {kA, kB});
      for (int j = 0; j < n - 1; ++j) v.insert(v.end(), {kA, kB});
      if (figure.run(u).output != v || exact.run(u).output != v) ++bad;
    }
    report.checks.push_back(tally("t(abaaaaab) = abaab and t((ab)^n) = (ab)^(n-1), n <= 200",
                                  201, bad));
  }

  // Basic word tables.
  {
    const std::map<std::string, std::vector<std::pair<std::string, std::string>>> printed{
        {"11", {{"aaaa", "aba"}, {"aaab", "aba"}, {"aab", "ab"}, {"ab", "ab"}, {"ba", "ba"},
                {"bb", "ba"}}},
        {"21", {{"aaa", "aba"}, {"aab", "aba"}, {"ab", "ab"}, {"b", "ab"}}},
        {"22", {{"a", "ba"}, {"b", "ba"}}},
        {"12", {{"aa", "ba"}, {"ab", "ba"}, {"ba", "ba"}, {"bb", "ab"}}}};
    for (const auto& [name, rows] : printed) {
      const auto table = basic_words(figure, q(name[0] - '0', name[1] - '0'));
      std::vector<std::pair<std::string, std::string>> derived;
      for (const auto& b : table.words) {
        derived.emplace_back(render_word(b.word, true), render_word(b.image, true));
      }
      std::string text;
      for (const auto& [u, v] : derived) text += u + "->" + v + " ";
      if (name == "12") {
        // The printed "bb u -> ab" row disagrees with the transitions; the
        // first three rows must match, the bb row is reported as derived.
        std::uint64_t bad = 0;
        for (std::size_t i = 0; i < 3; ++i) {
          if (i >= derived.size() || derived[i] != rows[i]) ++bad;
        }
        report.checks.push_back(tally("basic words for 12 (aa, ab, ba rows)", 3, bad, text));
        const bool bb_bab = derived.size() == 4 && derived[3] == std::pair<std::string, std::string>{"bb", "bab"};
        report.checks.push_back(tally("basic word bb for 12 derived from transitions", 1,
                                      bb_bab ? 0 : 1,
                                      "derived bb -> " + (derived.size() == 4 ? derived[3].second : "?") +
                                          "; printed table lists bb u -> ab"));
      } else {
        report.checks.push_back(tally("basic words for " + name, rows.size(),
                                      derived == rows ? 0 : 1, text));
      }
    }
  }

  // Cycle identities and pattern erasure.
  {
    const auto t21 = q(2, 1);
    const auto aaaa = figure.run(w("aaaa"), t21);
    const auto bbbb = figure.run(w("bbbb"), t21);
    std::uint64_t bad = 0;
    if (aaaa.output != w("aba") || aaaa.end != t21) ++bad;
    if (bbbb.output != w("abbab") || bbbb.end != t21) ++bad;
    report.checks.push_back(tally("t'(aaaa) = aba and t'(bbbb) = abbab, both ending in 21", 2, bad));

    std::uint64_t checked = 0, erase_bad = 0;
    for (std::size_t s = 0; s < figure.state_count(); ++s) {
      if (!figure.recurrent(s)) continue;
      for (const auto& pat : {w("ab"), w("ba")}) {
        ++checked;
        const auto r = figure.run(pat, s);
        if (!(r.output == w("ab") || r.output == w("ba")) || r.end != s) ++erase_bad;
      }
    }
    report.checks.push_back(tally("ab and ba are erasable patterns in recurrent states", checked,
                                  erase_bad));
  }

  // Exhaustive word checks.
  {
    const auto t21 = q(2, 1);
    std::uint64_t checked = 0, t_prime = 0, t_of_l = 0, t_sq = 0, t_sq_exact = 0;
    std::uint64_t height_checked = 0, height_bad = 0, steps_checked = 0, steps_bad = 0;
    std::string steps_detail;
    for (std::size_t len = 0; len <= o.exhaustive_length; ++len) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        const auto u = from_bits(bits, len);
        ++checked;
        if (!in_language_l(figure.run(u, t21).output)) ++t_prime;
        const auto tu = figure.run(u).output;
        if (!in_language_l(figure.run(tu).output)) ++t_sq;
        if (!in_language_l(iterate(exact, u, 2))) ++t_sq_exact;
        if (in_language_l(u)) {
          if (!in_language_l(tu)) ++t_of_l;
          ++height_checked;
          if (4 * word_stats(tu).height > word_stats(u).height + 4) ++height_bad;
        }
        ++steps_checked;
        if (wave_steps(figure, u) > wave_steps_bound(len)) ++steps_bad;
      }
    }
    const auto range = "|u| <= " + std::to_string(o.exhaustive_length);
    report.checks.push_back(tally("t'(u) in L (exhaustive, figure-suppressed)", checked, t_prime, range));
    report.checks.push_back(tally("t(v) in L for v in L (exhaustive, figure-suppressed)",
                                  height_checked, t_of_l, range));
    report.checks.push_back(tally("t^2(u) in L (exhaustive, figure-suppressed)", checked, t_sq, range));
    report.checks.push_back(tally("t^2(u) in L (exhaustive, algorithm-exact)", checked, t_sq_exact,
                                  "soft check, reported only", false));
    report.checks.push_back(tally("h(t(v)) <= h(v)/4 + 1 for v in L (exhaustive)", height_checked,
                                  height_bad, range));
    report.checks.push_back(tally("wave steps within the logarithmic bound (exhaustive)",
                                  steps_checked, steps_bad, range));
  }

  // Randomized word checks.
  {
    Rng rng(o.seed);
    std::uniform_int_distribution<std::size_t> hlen(0, o.height_length >= 2 ? o.height_length - 2 : 0);
    std::uint64_t height_bad = 0;
    for (std::uint64_t s = 0; s < o.samples; ++s) {
      Word v{kA, kB};
      const auto rest = random_word(rng, hlen(rng));
      v.insert(v.end(), rest.begin(), rest.end());
      const auto tv = figure.run(v).output;
      if (4 * word_stats(tv).height > word_stats(v).height + 4) ++height_bad;
    }
    report.checks.push_back(tally("h(t(v)) <= h(v)/4 + 1 for random v in L", o.samples, height_bad,
                                  "|v| <= " + std::to_string(o.height_length)));

    std::uniform_int_distribution<std::size_t> slen(0, o.steps_length);
    std::uint64_t steps_bad = 0, worst = 0;
    for (std::uint64_t s = 0; s < o.samples; ++s) {
      const auto u = random_word(rng, slen(rng));
      const auto n = wave_steps(figure, u);
      const auto bound = wave_steps_bound(u.size());
      worst = std::max(worst, n);
      if (n > bound) ++steps_bad;
    }
    report.checks.push_back(tally("wave steps within the logarithmic bound (random)", o.samples,
                                  steps_bad,
                                  "|u| <= " + std::to_string(o.steps_length) +
                                      ", max steps observed " + std::to_string(worst)));
  }
  return report;
}

SuiteReport verify_theorem3(const VerifyOptions& o) {
  SuiteReport report{"theorem3", o.seed, {}};
  const ModelParams p(3);
  const auto envelope = calibrated_envelope(p);
  const auto density = density_envelope(p);
  std::uint64_t density_bad = 0;
  std::uint64_t first_density_bad = 0;
  double fit_sx = 0, fit_sy = 0, fit_sxx = 0, fit_sxy = 0;
  std::uint64_t fit_n = 0;
  const auto summary = theorem_sweep(p, o.theorem_n_max, envelope, [&](const SweepRow& row) {
    if (!density.contains(row.n, row.density_column)) {
      if (density_bad++ == 0) first_density_bad = row.n;
    }
    if (row.n >= 1000 && row.width > 0) {
      const double x = std::log(static_cast<double>(row.n));
      const double y = std::log(static_cast<double>(row.width));
      fit_sx += x;
      fit_sy += y;
      fit_sxx += x * x;
      fit_sxy += x * y;
      ++fit_n;
    }
  });
  const auto n_rows = o.theorem_n_max + 1;
  report.checks.push_back(tally("wave pattern matched for every N", n_rows, n_rows - summary.matched,
                                "N <= " + std::to_string(o.theorem_n_max)));
  std::ostringstream env;
  env << "i_N <= " << envelope.slope << " log2(N+2) + " << envelope.intercept
      << "; max i_N = " << summary.max_wave_start << ", max i_N/log2(N+2) = " << summary.max_ratio;
  if (summary.envelope_violations) env << ", first violation at N=" << summary.first_violation;
  report.checks.push_back(tally("i_N within the frozen logarithmic envelope", n_rows,
                                summary.envelope_violations, env.str()));
  std::ostringstream dens;
  dens << "L(3,N) <= " << density.slope << " log2(N+2) + " << density.intercept
       << "; max L = " << summary.max_density_column;
  if (density_bad) dens << ", first violation at N=" << first_density_bad;
  report.checks.push_back(
      tally("global density column within its logarithmic envelope", n_rows, density_bad, dens.str()));
  if (fit_n > 1) {
    const double k = static_cast<double>(fit_n);
    const double exponent = (k * fit_sxy - fit_sx * fit_sy) / (k * fit_sxx - fit_sx * fit_sx);
    std::ostringstream w;
    w << "width(N) ~ N^" << exponent << " over 10^3 <= N <= " << o.theorem_n_max
      << "; width(" << o.theorem_n_max << ") = " << summary.final_width;
    report.checks.push_back(tally("measured width growth", fit_n, 0, w.str(), false));
  }

  std::vector<PipelineReport> pipelines(o.pipeline_ns.size());
  parallel_for(o.pipeline_ns.size(),
               [&](std::size_t i) { pipelines[i] = pipeline_check(p, o.pipeline_ns[i]); });
  for (const auto& r : pipelines) {
    const auto n = "N=" + std::to_string(r.n) + ": ";
    std::uint64_t exact_bad = 0, figure_bad = 0, both_bad = 0;
    for (const auto& c : r.intervals) {
      exact_bad += !c.agree_exact;
      figure_bad += !c.agree_figure;
      both_bad += !c.agree_exact && !c.agree_figure;
    }
    const auto intervals = r.intervals.size();
    report.checks.push_back(tally(n + "simulated interval words equal transducer images", intervals,
                                  r.all_exact() || r.all_figure() ? 0 : both_bad,
                                  "winning mode: " + r.winning_mode() + " (algorithm-exact misses " +
                                      std::to_string(exact_bad) + ", figure-suppressed misses " +
                                      std::to_string(figure_bad) + ")"));
    std::uint64_t tails_bad = 0;
    for (const auto& t : r.tails) tails_bad += !t.agree;
    report.checks.push_back(tally(n + "predicted tails equal simulated tails", r.tails.size(),
                                  tails_bad));
    report.checks.push_back(tally(n + "wave start consistent with the predicted tail", 1,
                                  r.wave_consistent ? 0 : 1,
                                  "i_N = " + std::to_string(r.wave.start) + ", first cyclic interval " +
                                      (r.first_cyclic ? std::to_string(*r.first_cyclic) : "none")));
  }
  return report;
}

SuiteReport verify_conjecture(const VerifyOptions& o) {
  SuiteReport report{"conjectureD", o.seed, {}};
  std::vector<SweepSummary> summaries(o.conjecture_ds.size());
  std::vector<Envelope> envelopes;
  for (const auto d : o.conjecture_ds) envelopes.push_back(calibrated_envelope(ModelParams(d)));
  parallel_for(o.conjecture_ds.size(), [&](std::size_t i) {
    summaries[i] = theorem_sweep(ModelParams(o.conjecture_ds[i]), o.conjecture_n_max, envelopes[i]);
  });
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& s = summaries[i];
    const auto prefix = "D=" + std::to_string(s.d) + ": ";
    const auto rows = s.n_max + 1;
    report.checks.push_back(tally(prefix + "wave pattern matched for every N (experimental)", rows,
                                  rows - s.matched, "N <= " + std::to_string(s.n_max)));
    std::ostringstream env;
    env << "i_N <= " << envelopes[i].slope << " log2(N+2) + " << envelopes[i].intercept
        << "; max i_N = " << s.max_wave_start << ", max i_N/log2(N+2) = " << s.max_ratio
        << ", max L = " << s.max_density_column << ", width(N_max) = " << s.final_width;
    report.checks.push_back(tally(prefix + "i_N within the frozen logarithmic envelope", rows,
                                  s.envelope_violations, env.str()));
  }
  return report;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "core-laws") return verify_core_laws(options);
  if (name == "avalanche-lemmas") return verify_avalanche_lemmas(options);
  if (name == "appendix-words") return verify_appendix_words(options);
  if (name == "theorem3") return verify_theorem3(options);
  if (name == "conjectureD") return verify_conjecture(options);
  throw InputError("unknown suite '" + std::string(name) + "'");
}

}  // namespace kspm
