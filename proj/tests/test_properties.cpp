#include <random>

#include <gtest/gtest.h>

#include "kspm/avalanche.hpp"
#include "kspm/dynamics.hpp"
#include "kspm/transducer.hpp"
#include "kspm/words.hpp"
#include "oracle.hpp"

using kspm::Configuration;
using kspm::ModelParams;

namespace {

std::vector<std::int64_t> random_slopes(std::mt19937_64& rng, int max_mass) {
  std::uniform_int_distribution<int> len(1, 8);
  std::vector<std::int64_t> s(static_cast<std::size_t>(len(rng)), 0);
  int mass = 0;
  std::uniform_int_distribution<int> col(0, static_cast<int>(s.size()) - 1);
  std::uniform_int_distribution<int> budget(0, max_mass);
  const int target = budget(rng);
  while (mass < target) {
    const auto c = static_cast<std::size_t>(col(rng));
    if (mass + static_cast<int>(c) + 1 > target) break;
    s[c] += 1;
    mass += static_cast<int>(c) + 1;
  }
  return s;
}

kspm::Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin(0.5);
  kspm::Word u(len(rng));
  for (auto& x : u) x = coin(rng) ? kspm::kB : kspm::kA;
  return u;
}

}  // namespace

TEST(Property, LeftmostStabilizationMatchesOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int d = 2 + trial % 4;
    const auto s = random_slopes(rng, 60);
    std::vector<std::size_t> naive_strategy;
    const auto naive = oracle::stabilize(d, s, &naive_strategy);
    const auto lib = kspm::stabilize_leftmost(Configuration(s), ModelParams(d));
    ASSERT_EQ(lib.fixed_point, Configuration(naive));
    ASSERT_EQ(lib.strategy.firings, naive_strategy);
    ASSERT_EQ(lib.fixed_point.mass(), Configuration(s).mass());
  }
}

TEST(Property, AvalancheSequenceMatchesOracle) {
  for (int d = 2; d <= 5; ++d) {
    const auto run = oracle::simulate(d, 400);
    const auto log = kspm::record_avalanches(ModelParams(d), 400);
    ASSERT_EQ(log.avalanches.size(), run.avalanches.size());
    for (std::size_t k = 0; k < run.avalanches.size(); ++k) {
      ASSERT_EQ(log.avalanches[k].firings.firings, run.avalanches[k].firings) << d << " " << k + 1;
      ASSERT_EQ(log.avalanches[k].peaks, oracle::peaks(run.avalanches[k]));
      ASSERT_EQ(log.avalanches[k].dense_start, oracle::dense_start(run.avalanches[k]));
    }
    EXPECT_EQ(kspm::fixed_point(ModelParams(d), 400), Configuration(run.slopes));
  }
}

TEST(Property, FixedPointsAreStableAndConserveMass) {
  for (int d = 2; d <= 5; ++d) {
    kspm::FixedPointIterator it{ModelParams(d)};
    for (std::int64_t n = 1; n <= 2000; ++n) {
      it.step();
      const auto pi = it.current();
      ASSERT_TRUE(kspm::is_stable(pi, ModelParams(d)));
      ASSERT_EQ(pi.mass(), n);
    }
  }
}

TEST(Property, AvalanchesFireEachColumnOnce) {
  const auto log = kspm::record_avalanches(ModelParams(3), 3000);
  for (const auto& a : log.avalanches) {
    auto f = a.firings.firings;
    std::sort(f.begin(), f.end());
    ASSERT_TRUE(std::adjacent_find(f.begin(), f.end()) == f.end()) << a.index;
  }
}

TEST(Property, RecurrentRunsMatchFigureTable) {
  std::mt19937_64 rng(99);
  const auto m = kspm::build_machine(3, kspm::OutputMode::FigureSuppressed);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto u = random_word(rng, 40);
    const auto text = kspm::render_word(u, true);
    int end = 0;
    const auto expect = oracle::figure3_run(0, text, &end);
    const auto r = m.run(u);
    ASSERT_EQ(kspm::render_word(r.output, true), expect) << text;
    const auto& s = m.state(r.end).values;
    ASSERT_EQ(s[0] * 10 + s[1], end);
  }
}

TEST(Property, HeightShrinksUnderTransduction) {
  std::mt19937_64 rng(5);
  const auto m = kspm::build_machine(3, kspm::OutputMode::FigureSuppressed);
  int checked = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    auto u = random_word(rng, 300);
    if (u.size() >= 2) {
      u[0] = kspm::kA;
      u[1] = kspm::kB;
    }
    if (!kspm::in_language_l(u)) continue;
    ++checked;
    const auto tu = m.run(u).output;
    ASSERT_TRUE(kspm::in_language_l(tu));
    ASSERT_LE(4 * kspm::word_stats(tu).height, kspm::word_stats(u).height + 4);
  }
  EXPECT_GT(checked, 4000);
}

TEST(Property, AbPowersLoseOneBlock) {
  const auto m = kspm::build_machine(3);
  kspm::Word u;
  for (int n = 1; n <= 200; ++n) {
    u.push_back(kspm::kA);
    u.push_back(kspm::kB);
    const auto out = m.run(u).output;
    ASSERT_EQ(out.size(), u.size() - 2);
    ASSERT_TRUE(kspm::is_ab_prefix(out));
  }
}
