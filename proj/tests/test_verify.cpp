#include <atomic>
#include <cstdlib>
#include <vector>

#include <gtest/gtest.h>

#include "kspm/error.hpp"
#include "kspm/parallel.hpp"
#include "kspm/verify.hpp"

namespace {

kspm::VerifyOptions small() {
  kspm::VerifyOptions o;
  o.samples = 300;
  o.direct_n_max = 200;
  o.exhaustive_length = 8;
  o.height_length = 200;
  o.steps_length = 200;
  o.lemma_n_max = 500;
  o.theorem_n_max = 2000;
  o.pipeline_ns = {500};
  o.conjecture_n_max = 1000;
  return o;
}

}  // namespace

TEST(Verify, EverySuitePassesAtSmallScale) {
  for (const auto& name : kspm::suite_names()) {
    const auto report = kspm::run_suite(name, small());
    EXPECT_TRUE(report.passed()) << report.to_text();
    EXPECT_FALSE(report.checks.empty()) << name;
  }
}

TEST(Verify, SeededReportsAreDeterministic) {
  const auto a = kspm::run_suite("appendix-words", small());
  const auto b = kspm::run_suite("appendix-words", small());
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Verify, UnknownSuiteIsInputError) {
  EXPECT_THROW(kspm::run_suite("nope", small()), kspm::InputError);
}

TEST(Verify, ReportsStateTwelveDiscrepancy) {
  const auto report = kspm::run_suite("appendix-words", small());
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.detail.find("bb -> bab") != std::string::npos) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Parallel, EveryIndexRunsOnce) {
  std::vector<std::atomic<int>> hits(64);
  kspm::parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_GE(kspm::worker_count(), 1u);
}

TEST(Parallel, ThreadCapFromEnvironment) {
  ::setenv("KSPM_THREADS", "1", 1);
  EXPECT_EQ(kspm::worker_count(), 1u);
  ::unsetenv("KSPM_THREADS");
}
