#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kspm {

/// Outcome of one verified property.
struct CheckResult {
  std::string name;
  bool passed = true;
  bool hard = true;  ///< soft checks are reported but never fail a suite
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  /// True when every hard check passed.
  bool passed() const noexcept;
  std::string to_text() const;
  std::string to_json() const;
};

/// Defaults equal the acceptance thresholds.
struct VerifyOptions {
  std::uint64_t seed = 7;
  std::uint64_t samples = 10000;        ///< random configurations / words
  std::int64_t max_mass = 60;           ///< core-laws random configurations
  std::uint64_t direct_n_max = 2000;    ///< fixed_point vs direct stabilization
  std::size_t exhaustive_length = 14;   ///< appendix-words exhaustive bound
  std::size_t height_length = 2000;     ///< random words for the height lemma
  std::size_t steps_length = 5000;      ///< random words for the step bound
  std::uint64_t lemma_n_max = 10000;    ///< avalanche-lemmas
  std::vector<int> lemma_ds{3, 4, 5};
  std::uint64_t theorem_n_max = 100000; ///< theorem3 sweep
  std::vector<std::uint64_t> pipeline_ns{1000, 10000};
  std::vector<int> conjecture_ds{4, 5};
  std::uint64_t conjecture_n_max = 10000;
};

std::vector<std::string_view> suite_names();

SuiteReport verify_core_laws(const VerifyOptions& options);
SuiteReport verify_avalanche_lemmas(const VerifyOptions& options);
SuiteReport verify_appendix_words(const VerifyOptions& options);
SuiteReport verify_theorem3(const VerifyOptions& options);
SuiteReport verify_conjecture(const VerifyOptions& options);

/// Dispatch by name; throws InputError for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

}  // namespace kspm
