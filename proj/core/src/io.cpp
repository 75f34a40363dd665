#include "kspm/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "kspm/error.hpp"

namespace kspm::io {
namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::int64_t> integer_array(std::string_view text) {
  const auto j = parse(text);
  if (!j.is_array()) throw InputError("expected a JSON array of integers");
  std::vector<std::int64_t> values;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("expected a JSON array of integers");
    values.push_back(v.get<std::int64_t>());
  }
  return values;
}

std::string word_string(const std::vector<std::uint8_t>& w, bool ab) { return render_word(w, ab); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::uint64_t parse_unsigned(std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("expected an unsigned integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string to_json(const Configuration& sigma) {
  return json(std::vector<Slope>(sigma.slopes().begin(), sigma.slopes().end())).dump();
}

std::string to_json(const HeightProfile& profile) { return json(profile.heights).dump(); }

Configuration configuration_from_json(std::string_view text) {
  return Configuration(integer_array(text));
}

HeightProfile heights_from_json(std::string_view text) {
  HeightProfile profile{integer_array(text)};
  from_heights(profile);  // validates monotonicity
  while (!profile.heights.empty() && profile.heights.back() == 0) profile.heights.pop_back();
  return profile;
}

AvalancheRecord to_record(const Avalanche& a) {
  return {a.index, a.firings.firings, a.peaks, a.dense_start};
}

std::string to_json_line(const AvalancheRecord& r) {
  json j;
  j["k"] = r.k;
  j["firings"] = r.firings;
  j["peaks"] = r.peaks;
  j["dense_start"] = r.dense_start;
  return j.dump();
}

AvalancheRecord record_from_json_line(std::string_view line) {
  const auto j = parse(line);
  if (!j.is_object()) throw InputError("avalanche record must be a JSON object");
  return {field<std::uint64_t>(j, "k"), field<std::vector<Column>>(j, "firings"),
          field<std::vector<Column>>(j, "peaks"), field<Column>(j, "dense_start")};
}

void write_avalanche_log(std::ostream& out, const AvalancheLog& log) {
  for (const auto& a : log.avalanches) out << to_json_line(to_record(a)) << '\n';
}

std::vector<AvalancheRecord> read_avalanche_log(std::istream& in) {
  std::vector<AvalancheRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(record_from_json_line(line));
  }
  return records;
}

std::string to_csv_line(const SweepRecord& r) {
  return std::to_string(r.row.n) + ',' + std::to_string(r.row.wave_start) + ',' +
         std::to_string(r.row.density_column) + ',' + std::to_string(r.row.width) + ',' +
         r.match_mode;
}

SweepRecord sweep_record_from_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (cells.size() != 5) {
    throw InputError("sweep CSV row needs 5 cells, got " + std::to_string(cells.size()));
  }
  SweepRecord r;
  r.row.n = parse_unsigned(cells[0]);
  r.row.wave_start = parse_unsigned(cells[1]);
  r.row.density_column = parse_unsigned(cells[2]);
  r.row.width = parse_unsigned(cells[3]);
  r.match_mode = std::string(cells[4]);
  r.row.matched = r.match_mode != "none";
  return r;
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::vector<SweepRecord> rows;
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw InputError("sweep CSV must start with the header '" + std::string(kSweepHeader) + "'");
  }
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(sweep_record_from_csv(line));
  }
  return rows;
}

std::string to_json(const PipelineReport& r, bool ab_letters) {
  const bool ab = ab_letters && r.d == 3;
  json j;
  j["D"] = r.d;
  j["N"] = r.n;
  j["L"] = r.density_column;
  j["long_avalanches"] = r.long_count;
  j["base_interval"] = r.base;
  j["base_word"] = word_string(r.base_word, ab);
  j["winning_mode"] = r.winning_mode();
  j["all_exact"] = r.all_exact();
  j["all_figure"] = r.all_figure();
  j["tails_agree"] = r.tails_agree();
  j["wave"] = {{"i_N", r.wave.start},
               {"left_blocks", r.wave.left_blocks},
               {"right_blocks", r.wave.right_blocks},
               {"has_zero", r.wave.has_zero}};
  j["first_cyclic_interval"] = r.first_cyclic ? json(*r.first_cyclic) : json(nullptr);
  j["wave_consistent"] = r.wave_consistent;
  auto& intervals = j["intervals"] = json::array();
  for (const auto& c : r.intervals) {
    intervals.push_back({{"interval", c.interval},
                         {"input", word_string(c.input, ab)},
                         {"simulated_next", word_string(c.simulated, ab)},
                         {"image_algorithm_exact", word_string(c.image_exact, ab)},
                         {"image_figure_suppressed", word_string(c.image_figure, ab)},
                         {"boundary_flag", c.boundary_flag},
                         {"agree_algorithm_exact", c.agree_exact},
                         {"agree_figure_suppressed", c.agree_figure}});
  }
  auto& tails = j["tails"] = json::array();
  for (const auto& t : r.tails) {
    tails.push_back({{"interval", t.interval},
                     {"anchor_column", t.anchor},
                     {"x", t.prediction.x},
                     {"p", t.prediction.p},
                     {"y", t.prediction.y},
                     {"predicted", t.prediction.pattern},
                     {"simulated", t.simulated},
                     {"agree", t.agree}});
  }
  return j.dump(2);
}

std::string to_json(const AvalancheLemmaReport& r) {
  json j;
  j["D"] = r.d;
  j["N"] = r.n;
  j["L"] = r.density_column;
  j["long_avalanches"] = r.long_count;
  j["ok"] = r.ok();
  auto& checks = j["checks"] = json::array();
  for (const auto* t : r.tallies()) {
    checks.push_back({{"name", t->name},
                      {"checked", t->checked},
                      {"violations", t->violations},
                      {"first_violation", t->first_violation}});
  }
  return j.dump(2);
}

}  // namespace kspm::io
