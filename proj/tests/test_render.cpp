#include <gtest/gtest.h>

#include "kspm/avalanche.hpp"
#include "kspm/render.hpp"

using kspm::ModelParams;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Balanced-tag check good enough for the renderer's flat output.
bool well_formed(const std::string& svg) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = svg.find('<', pos)) != std::string::npos) {
    const auto end = svg.find('>', pos);
    if (end == std::string::npos) return false;
    const auto tag = svg.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;
    const auto name_end = tag.find_first_of(" \t\n");
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else {
      stack.push_back(tag.substr(0, name_end));
    }
  }
  return stack.empty();
}

}  // namespace

TEST(Ascii, DFourFiveHundredRuns) {
  const auto log = kspm::record_avalanches(ModelParams(4), 500);
  kspm::ChartOptions options;
  options.interval = 4;
  options.threshold = kspm::TypeThreshold::Relaxed;
  const auto chart = kspm::render_ascii(log, options);
  EXPECT_EQ(chart.rfind("# KSPM(4) N=500 L=6", 0), 0u);
  EXPECT_EQ(count(chart, "<- type"), 10u);
  EXPECT_EQ(count(chart, " |"), 23u);
}

TEST(Ascii, NoticeWithoutLongAvalanches) {
  const auto chart = kspm::render_ascii(kspm::record_avalanches(ModelParams(3), 5));
  EXPECT_NE(chart.find("no long avalanches"), std::string::npos);
}

TEST(Svg, WellFormed) {
  const auto log = kspm::record_avalanches(ModelParams(4), 500);
  kspm::ChartOptions options;
  options.interval = 4;
  options.threshold = kspm::TypeThreshold::Relaxed;
  const auto svg = kspm::render_svg(log, options);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_TRUE(well_formed(svg));
  EXPECT_TRUE(well_formed(kspm::render_svg(kspm::record_avalanches(ModelParams(3), 5))));
}
