#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "kspm/error.hpp"

using namespace kspm::cli;

namespace {

RunConfig config(int d) {
  RunConfig cfg;
  cfg.d = d;
  return cfg;
}

}  // namespace

TEST(Cli, FixedPointFormats) {
  auto cfg = config(3);
  cfg.n = 9;
  cfg.format = "json";
  std::ostringstream out;
  EXPECT_EQ(cmd_fixedpoint(cfg, out), kExitOk);
  EXPECT_EQ(out.str(), "[0,2,0,0,1]\n");

  cfg.n = 0;
  out.str("");
  EXPECT_EQ(cmd_fixedpoint(cfg, out), kExitOk);
  EXPECT_EQ(out.str(), "[]\n");

  cfg.n = 9;
  cfg.format = "heights";
  out.str("");
  cmd_fixedpoint(cfg, out);
  EXPECT_EQ(out.str(), "[3,3,1,1,1]\n");

  cfg.format = "xml";
  EXPECT_THROW(cmd_fixedpoint(cfg, out), kspm::InputError);
}

TEST(Cli, RejectsDOne) {
  auto cfg = config(1);
  cfg.n = 3;
  cfg.format = "json";
  std::ostringstream out;
  EXPECT_THROW(cmd_fixedpoint(cfg, out), kspm::InputError);
}

TEST(Cli, AvalanchesDFourFiveHundred) {
  auto cfg = config(4);
  cfg.n = 500;
  cfg.format = "ascii";
  cfg.interval = 4;
  cfg.threshold = "relaxed";
  std::ostringstream out;
  EXPECT_EQ(cmd_avalanches(cfg, out), kExitOk);
  const auto text = out.str();
  std::size_t runs = 0;
  for (auto pos = text.find("<- type"); pos != std::string::npos; pos = text.find("<- type", pos + 1)) {
    ++runs;
  }
  EXPECT_EQ(runs, 10u);
}

TEST(Cli, AvalanchesJsonl) {
  auto cfg = config(3);
  cfg.n = 9;
  cfg.format = "jsonl";
  std::ostringstream out;
  EXPECT_EQ(cmd_avalanches(cfg, out), kExitOk);
  std::istringstream lines(out.str());
  std::string line, last;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ++count;
    last = line;
  }
  EXPECT_EQ(count, 9u);
  EXPECT_NE(last.find("\"firings\":[0,2]"), std::string::npos);
}

TEST(Cli, TransducerBuildRunSteps) {
  auto cfg = config(3);
  std::ostringstream out;
  EXPECT_EQ(cmd_transducer_build(cfg, out), kExitOk);
  EXPECT_NE(out.str().find("digraph"), std::string::npos);

  cfg.input = "abaaaaab";
  out.str("");
  EXPECT_EQ(cmd_transducer_run(cfg, out), kExitOk);
  EXPECT_EQ(out.str().rfind("abaab\n", 0), 0u);

  cfg.input = "bbbb";
  cfg.from = "21";
  out.str("");
  cmd_transducer_run(cfg, out);
  EXPECT_EQ(out.str(), "abbab\nend state: 21\n");

  cfg.input = "abc";
  cfg.from.clear();
  EXPECT_THROW(cmd_transducer_run(cfg, out), kspm::InputError);

  cfg.input = "bbbbbbbbbb";
  out.str("");
  EXPECT_EQ(cmd_transducer_steps(cfg, out), kExitOk);
  EXPECT_NE(out.str().find("steps: "), std::string::npos);
}

TEST(Cli, SweepCsv) {
  auto cfg = config(3);
  cfg.n_max = 20;
  std::ostringstream out;
  EXPECT_EQ(cmd_sweep(cfg, out), kExitOk);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "N,i_N,L,width,match_mode");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 21u);
}

TEST(Cli, PipelineJson) {
  auto cfg = config(3);
  cfg.n = 1000;
  std::ostringstream out;
  EXPECT_EQ(cmd_pipeline(cfg, out), kExitOk);
  EXPECT_NE(out.str().find("winning_mode"), std::string::npos);
}

TEST(Cli, VerifyDeterministic) {
  auto cfg = config(3);
  cfg.suite = "appendix-words";
  cfg.verify.exhaustive_length = 8;
  cfg.verify.samples = 200;
  cfg.verify.height_length = 100;
  cfg.verify.steps_length = 100;
  std::ostringstream a, b;
  EXPECT_EQ(cmd_verify(cfg, a), kExitOk);
  EXPECT_EQ(cmd_verify(cfg, b), kExitOk);
  EXPECT_EQ(a.str(), b.str());

  cfg.suite = "conjectureD";
  cfg.verify.conjecture_ds = {4};
  cfg.verify.conjecture_n_max = 1000;
  std::ostringstream c;
  EXPECT_EQ(cmd_verify(cfg, c), kExitOk);
  EXPECT_NE(c.str().find("experimental"), std::string::npos);
}
