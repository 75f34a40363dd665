#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kspm/verify.hpp"

namespace kspm::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  int d = 3;
  std::uint64_t n = 0;
  std::uint64_t n_max = 0;
  std::string format;
  std::string mode = "algorithm-exact";
  std::uint64_t seed = 7;
  std::string suite;
  std::string input;
  std::string from;  ///< transducer start state label, empty for the initial state
  bool ab = false;   ///< a/b letters for D = 3
  std::optional<std::size_t> interval;
  std::string threshold = "strict";
  VerifyOptions verify;
};

int cmd_fixedpoint(const RunConfig& cfg, std::ostream& out);
int cmd_avalanches(const RunConfig& cfg, std::ostream& out);
int cmd_transducer_build(const RunConfig& cfg, std::ostream& out);
int cmd_transducer_run(const RunConfig& cfg, std::ostream& out);
int cmd_transducer_steps(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_pipeline(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace kspm::cli
