#include <gtest/gtest.h>

#include "kspm/configuration.hpp"
#include "kspm/dynamics.hpp"
#include "kspm/error.hpp"
#include "oracle.hpp"

using kspm::Configuration;
using kspm::ModelParams;

TEST(ModelParams, RejectsDBelowTwo) {
  EXPECT_THROW(ModelParams(1), kspm::InputError);
  EXPECT_THROW(ModelParams(0), kspm::InputError);
  EXPECT_EQ(ModelParams(2).spread(), 1);
}

TEST(Configuration, CanonicalFormDropsTrailingZeros) {
  const Configuration a{2, 1, 0, 0};
  const Configuration b{2, 1};
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a[7], 0);
  EXPECT_EQ((Configuration{0, 0}), Configuration{});
  EXPECT_THROW((Configuration{1, -1}), kspm::InputError);
}

TEST(Configuration, MassIsWeightedBySuffix) {
  EXPECT_EQ((Configuration{0, 2, 0, 0, 1}).mass(), 9);
  EXPECT_EQ(Configuration{}.mass(), 0);
}

TEST(Fire, RuleArithmetic) {
  const ModelParams d3(3);
  EXPECT_EQ(kspm::fire(Configuration{3, 0, 0}, 0, d3), (Configuration{0, 0, 1}));
  EXPECT_EQ(kspm::fire(Configuration{0, 4, 0, 0}, 1, d3), (Configuration{2, 1, 0, 1}));
}

TEST(Fire, RejectsNonFireableColumn) {
  EXPECT_THROW(kspm::fire(Configuration{2, 0}, 0, ModelParams(3)), kspm::RuleViolation);
  EXPECT_THROW(kspm::fire(Configuration{}, 5, ModelParams(3)), kspm::RuleViolation);
}

TEST(Stable, Examples) {
  const ModelParams d3(3);
  EXPECT_TRUE(kspm::is_stable(Configuration{2, 2, 1}, d3));
  EXPECT_FALSE(kspm::is_stable(Configuration{3, 0}, d3));
  EXPECT_TRUE(kspm::is_stable(Configuration{}, d3));
  EXPECT_TRUE(kspm::is_stable(Configuration{}, ModelParams(5)));
}

TEST(StabilizeLeftmost, NineGrainsInColumnZero) {
  const auto r = kspm::stabilize_leftmost(Configuration{9}, ModelParams(3));
  EXPECT_EQ(r.fixed_point, (Configuration{0, 2, 0, 0, 1}));
  EXPECT_EQ(r.strategy.firings, (std::vector<kspm::Column>{0, 0, 0, 2}));

  std::vector<std::size_t> naive;
  EXPECT_EQ(oracle::stabilize(3, {9}, &naive), (std::vector<std::int64_t>{0, 2, 0, 0, 1}));
  EXPECT_EQ(naive, (std::vector<std::size_t>{0, 0, 0, 2}));
}

TEST(StabilizeLeftmost, StableInputIsUntouched) {
  const auto r = kspm::stabilize_leftmost(Configuration{2}, ModelParams(3));
  EXPECT_EQ(r.fixed_point, Configuration{2});
  EXPECT_TRUE(r.strategy.empty());
}

TEST(StabilizeLeftmost, LastAvalancheOfNine) {
  const auto r = kspm::stabilize_leftmost(Configuration{3, 0, 2}, ModelParams(3));
  EXPECT_EQ(r.fixed_point, (Configuration{0, 2, 0, 0, 1}));
  EXPECT_EQ(r.strategy.firings, (std::vector<kspm::Column>{0, 2}));
}

TEST(AddGrain, Examples) {
  EXPECT_EQ(kspm::add_grain(Configuration{2, 0, 2}), (Configuration{3, 0, 2}));
  EXPECT_EQ(kspm::add_grain(Configuration{}), Configuration{1});
  EXPECT_EQ(kspm::add_grain(Configuration{0, 2, 0, 0, 1}), (Configuration{1, 2, 0, 0, 1}));
}

TEST(FixedPoint, SmallValues) {
  const ModelParams d3(3);
  EXPECT_EQ(kspm::fixed_point(d3, 0), Configuration{});
  EXPECT_EQ(kspm::fixed_point(d3, 3), (Configuration{0, 0, 1}));
  EXPECT_EQ(kspm::fixed_point(d3, 9), (Configuration{0, 2, 0, 0, 1}));
}

TEST(FixedPoint, ObserverSeesEveryAvalanche) {
  std::vector<std::uint64_t> ks;
  std::vector<std::vector<kspm::Column>> seen;
  const auto pi = kspm::fixed_point(ModelParams(3), 9,
                                    [&](std::uint64_t k, const kspm::Strategy& s, const Configuration&) {
                                      ks.push_back(k);
                                      seen.push_back(s.firings);
                                    });
  ASSERT_EQ(ks.size(), 9u);
  EXPECT_EQ(ks.front(), 1u);
  EXPECT_EQ(ks.back(), 9u);
  EXPECT_EQ(seen[2], (std::vector<kspm::Column>{0}));
  EXPECT_EQ(seen[8], (std::vector<kspm::Column>{0, 2}));
  EXPECT_EQ(pi.mass(), 9);
}

TEST(FixedPoint, IteratorMatchesDirectStabilization) {
  for (int d = 2; d <= 5; ++d) {
    const ModelParams p(d);
    kspm::FixedPointIterator it(p);
    for (std::uint64_t n = 1; n <= 150; ++n) {
      it.step();
      ASSERT_EQ(it.grains(), n);
      const auto direct =
          kspm::stabilize_leftmost(Configuration{static_cast<kspm::Slope>(n)}, p).fixed_point;
      ASSERT_EQ(it.current(), direct) << "D=" << d << " N=" << n;
    }
  }
}

TEST(FixedPoint, DegenerateDTwo) {
  // D = 2: every slope ends at 0 or 1, so pi(N) is a staircase.
  const auto pi = kspm::fixed_point(ModelParams(2), 10);
  for (auto s : pi.slopes()) EXPECT_LE(s, 1);
  EXPECT_EQ(pi.mass(), 10);
}

TEST(Heights, SuffixSums) {
  const auto h = kspm::heights(Configuration{0, 2, 0, 0, 1});
  EXPECT_EQ(h.heights, (std::vector<std::int64_t>{3, 3, 1, 1, 1}));
  EXPECT_TRUE(kspm::heights(Configuration{}).heights.empty());
  EXPECT_EQ(kspm::heights(Configuration{2}).heights, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(kspm::from_heights(h), (Configuration{0, 2, 0, 0, 1}));
  EXPECT_THROW(kspm::from_heights(kspm::HeightProfile{{1, 3}}), kspm::InputError);
}

TEST(FiringBudget, GrowsWithMass) {
  const ModelParams p(3);
  EXPECT_GE(kspm::firing_budget(100, p), kspm::firing_budget(10, p));
  EXPECT_GT(kspm::firing_budget(0, p), 0u);
}
