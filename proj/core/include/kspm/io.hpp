#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kspm/avalanche.hpp"
#include "kspm/configuration.hpp"
#include "kspm/lemmas.hpp"
#include "kspm/wave.hpp"

namespace kspm::io {

/// Canonical JSON array, e.g. "[0,2,0,0,1]".
std::string to_json(const Configuration& sigma);
std::string to_json(const HeightProfile& profile);
/// Parses a JSON array of non-negative integers. Throws InputError.
Configuration configuration_from_json(std::string_view text);
HeightProfile heights_from_json(std::string_view text);

/// One avalanche record: {"k":..,"firings":[..],"peaks":[..],"dense_start":..}.
struct AvalancheRecord {
  std::uint64_t k = 0;
  std::vector<Column> firings;
  std::vector<Column> peaks;
  Column dense_start = 0;

  friend bool operator==(const AvalancheRecord&, const AvalancheRecord&) = default;
};

AvalancheRecord to_record(const Avalanche& avalanche);
std::string to_json_line(const AvalancheRecord& record);
AvalancheRecord record_from_json_line(std::string_view line);
void write_avalanche_log(std::ostream& out, const AvalancheLog& log);
std::vector<AvalancheRecord> read_avalanche_log(std::istream& in);

/// CSV with header "N,i_N,L,width,match_mode".
inline constexpr std::string_view kSweepHeader = "N,i_N,L,width,match_mode";
struct SweepRecord {
  SweepRow row;
  std::string match_mode;

  friend bool operator==(const SweepRecord& a, const SweepRecord& b) {
    return a.row.n == b.row.n && a.row.wave_start == b.row.wave_start &&
           a.row.density_column == b.row.density_column && a.row.width == b.row.width &&
           a.match_mode == b.match_mode;
  }
};
std::string to_csv_line(const SweepRecord& record);
SweepRecord sweep_record_from_csv(std::string_view line);
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

std::string to_json(const PipelineReport& report, bool ab_letters = false);
std::string to_json(const AvalancheLemmaReport& report);

}  // namespace kspm::io
