#include "commands.hpp"

#include <ostream>

#include "kspm/avalanche.hpp"
#include "kspm/dynamics.hpp"
#include "kspm/error.hpp"
#include "kspm/io.hpp"
#include "kspm/render.hpp"
#include "kspm/transducer.hpp"
#include "kspm/wave.hpp"
#include "kspm/words.hpp"

namespace kspm::cli {
namespace {

TypeThreshold parse_threshold(const std::string& text) {
  if (text == "strict") return TypeThreshold::Strict;
  if (text == "relaxed") return TypeThreshold::Relaxed;
  throw InputError("unknown threshold '" + text + "' (expected strict or relaxed)");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const auto* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const auto* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw InputError("unsupported --format '" + format + "' (expected one of " + list + ")");
}

TransducerMachine::StateId start_state(const TransducerMachine& m, const std::string& from) {
  if (from.empty()) return m.initial();
  IntervalState s;
  for (const char c : from) {
    if (c < '0' || c > '9') throw InputError("state label '" + from + "' must be digits");
    s.values.push_back(c - '0');
  }
  return m.id_of(s);
}

// Height staircase, one text row per grain level, tallest first.
void draw_heights(const Configuration& sigma, std::ostream& out) {
  const auto h = heights(sigma);
  const auto top = h.heights.empty() ? 0 : h.heights.front();
  for (auto level = top; level >= 1; --level) {
    std::string row;
    for (const auto v : h.heights) row += v >= level ? '#' : ' ';
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
}

}  // namespace

int cmd_fixedpoint(const RunConfig& cfg, std::ostream& out) {
  const ModelParams params(cfg.d);
  const auto format = cfg.format.empty() ? std::string("json") : cfg.format;
  require_format(format, {"json", "heights", "ascii"});
  const auto sigma = fixed_point(params, cfg.n);
  if (format == "json") {
    out << io::to_json(sigma) << '\n';
  } else if (format == "heights") {
    out << io::to_json(heights(sigma)) << '\n';
  } else {
    out << "# pi(" << cfg.n << ") for KSPM(" << cfg.d << "): " << io::to_json(sigma) << '\n';
    draw_heights(sigma, out);
  }
  return kExitOk;
}

int cmd_avalanches(const RunConfig& cfg, std::ostream& out) {
  const ModelParams params(cfg.d);
  const auto format = cfg.format.empty() ? std::string("ascii") : cfg.format;
  require_format(format, {"ascii", "svg", "jsonl"});
  const auto log = record_avalanches(params, cfg.n);
  if (format == "jsonl") {
    io::write_avalanche_log(out, log);
    return kExitOk;
  }
  ChartOptions options;
  options.threshold = parse_threshold(cfg.threshold);
  const auto l = global_density_column(log);
  options.interval = cfg.interval.value_or(base_interval(params, l, options.threshold));
  out << (format == "svg" ? render_svg(log, options) : render_ascii(log, options));
  return kExitOk;
}

int cmd_transducer_build(const RunConfig& cfg, std::ostream& out) {
  const auto machine = build_machine(cfg.d, parse_output_mode(cfg.mode));
  out << to_dot(machine, cfg.ab);
  return kExitOk;
}

int cmd_transducer_run(const RunConfig& cfg, std::ostream& out) {
  const auto machine = build_machine(cfg.d, parse_output_mode(cfg.mode));
  const auto word = parse_word(cfg.input, cfg.d);
  const bool ab = cfg.d == 3 && (cfg.ab || cfg.input.find_first_of("ab") != std::string::npos);
  const auto result = machine.run(word, start_state(machine, cfg.from));
  out << render_word(result.output, ab) << '\n';
  out << "end state: " << label(machine.state(result.end)) << '\n';
  return kExitOk;
}

int cmd_transducer_steps(const RunConfig& cfg, std::ostream& out) {
  if (cfg.d != 3) throw InputError("the step trajectory is defined for D = 3");
  const auto machine = build_machine(3, parse_output_mode(cfg.mode));
  auto word = parse_word(cfg.input, 3);
  const bool ab = cfg.ab || cfg.input.find_first_of("ab") != std::string::npos;
  const auto steps = wave_steps(machine, word);
  for (std::uint64_t n = 0; n <= steps; ++n) {
    out << "t^" << n << ": " << (word.empty() ? std::string("eps") : render_word(word, ab))
        << '\n';
    word = machine.run(word).output;
  }
  out << "steps: " << steps << " (bound " << wave_steps_bound(cfg.input.size()) << ")\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const ModelParams params(cfg.d);
  const auto format = cfg.format.empty() ? std::string("csv") : cfg.format;
  require_format(format, {"csv"});
  Envelope envelope{1e300, 0};
  try {
    envelope = calibrated_envelope(params);
  } catch (const InputError&) {
    // uncalibrated D: rows only
  }
  out << io::kSweepHeader << '\n';
  const auto summary = theorem_sweep(params, cfg.n_max, envelope, [&](const SweepRow& row) {
    out << io::to_csv_line({row, row.matched ? "wave" : "none"}) << '\n';
  });
  return summary.matched == cfg.n_max + 1 && summary.envelope_violations == 0 ? kExitOk
                                                                              : kExitFailed;
}

int cmd_pipeline(const RunConfig& cfg, std::ostream& out) {
  const auto report = pipeline_check(ModelParams(cfg.d), cfg.n);
  out << io::to_json(report, cfg.ab) << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto format = cfg.format.empty() ? std::string("text") : cfg.format;
  require_format(format, {"text", "json"});
  const auto report = run_suite(cfg.suite, cfg.verify);
  out << (format == "json" ? report.to_json() + "\n" : report.to_text());
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace kspm::cli
