#include "kspm/wave.hpp"

#include <algorithm>

namespace kspm {
namespace {

std::vector<Slope> tail_from(const Configuration& sigma, Column anchor) {
  std::vector<Slope> tail;
  for (Column c = anchor; c < sigma.size(); ++c) tail.push_back(sigma[c]);
  return tail;
}

}  // namespace

bool agrees_modulo_boundary(std::span<const std::uint8_t> simulated,
                            std::span<const std::uint8_t> image, bool boundary_flag,
                            std::size_t last_output_length) {
  if (std::equal(simulated.begin(), simulated.end(), image.begin(), image.end())) return true;
  if (!boundary_flag || simulated.size() > image.size()) return false;
  if (image.size() - simulated.size() > last_output_length) return false;
  return std::equal(simulated.begin(), simulated.end(), image.begin());
}

bool PipelineReport::all_exact() const noexcept {
  return std::all_of(intervals.begin(), intervals.end(),
                     [](const IntervalComparison& c) { return c.agree_exact; });
}

bool PipelineReport::all_figure() const noexcept {
  return std::all_of(intervals.begin(), intervals.end(),
                     [](const IntervalComparison& c) { return c.agree_figure; });
}

bool PipelineReport::tails_agree() const noexcept {
  return std::all_of(tails.begin(), tails.end(), [](const TailCheck& t) { return t.agree; });
}

std::string PipelineReport::winning_mode() const {
  const bool exact = all_exact();
  const bool figure = all_figure();
  if (exact && figure) return "both";
  if (exact) return std::string(to_string(OutputMode::AlgorithmExact));
  if (figure) return std::string(to_string(OutputMode::FigureSuppressed));
  return "neither";
}

PipelineReport pipeline_check(ModelParams params, std::uint64_t n) {
  return pipeline_check(record_avalanches(params, n));
}

PipelineReport pipeline_check(const AvalancheLog& log) {
  const auto params = log.params;
  PipelineReport report;
  report.d = params.d();
  report.n = log.n;

  const auto phi = long_avalanches(log);
  report.density_column = phi.density_column;
  report.long_count = phi.indices.size();
  report.base = base_interval(params, phi.density_column);

  const Configuration final_point =
      log.snapshots.count(log.n) ? log.snapshots.at(log.n) : Configuration{};
  report.wave = wave_match(final_point, params);

  const auto exact = build_machine(params.d(), OutputMode::AlgorithmExact);
  const auto figure = build_machine(params.d(), OutputMode::FigureSuppressed);
  const auto w = static_cast<Column>(params.spread());

  auto current = influent_type_word(log, phi, report.base);
  report.base_word = current.letters;
  for (auto i = report.base;; ++i) {
    auto next = influent_type_word(log, phi, i + 1);

    IntervalComparison cmp;
    cmp.interval = i;
    cmp.input = current.letters;
    cmp.simulated = next.letters;
    cmp.boundary_flag = current.boundary_flag;
    const auto compare = [&](const TransducerMachine& m, std::vector<std::uint8_t>& image) {
      const auto run = m.run(current.letters);
      image = run.output;
      std::size_t last = 0;
      if (!current.letters.empty()) {
        const std::span<const Letter> head(current.letters.data(), current.letters.size() - 1);
        last = run.output.size() - m.run(head).output.size();
      }
      return agrees_modulo_boundary(cmp.simulated, image, cmp.boundary_flag, last);
    };
    cmp.agree_exact = compare(exact, cmp.image_exact);
    cmp.agree_figure = compare(figure, cmp.image_figure);

    TailCheck tail;
    tail.interval = i;
    tail.anchor = w * i;
    tail.simulated = tail_from(final_point, tail.anchor);
    if (const auto shape = cyclic_shape(current.letters, params)) {
      tail.prediction.x = shape->x;
      tail.prediction.p = shape->p;
      tail.prediction.y = current.run_sizes.back();
      try {
        tail.prediction = predict_tail(params, shape->x, shape->p, tail.prediction.y);
        tail.agree = tail.prediction.pattern == tail.simulated;
      } catch (const std::domain_error&) {
        tail.agree = false;
      }
      if (!report.first_cyclic) {
        report.first_cyclic = i;
        const int p = shape->p;
        const bool full = tail.prediction.y == shape->x + 1;
        // Leading partial block: (p..1), or (p+1..1) unless that is a full block.
        const Column lead = full ? (p + 1 == params.spread() ? 0 : static_cast<Column>(p + 1))
                                 : static_cast<Column>(p);
        report.wave_consistent = tail.agree && report.wave.start <= tail.anchor + lead;
      }
      report.tails.push_back(std::move(tail));
    } else if (current.letters.empty()) {
      tail.prediction.p = -1;
      tail.agree = tail.simulated.empty();
      report.tails.push_back(std::move(tail));
    }

    report.intervals.push_back(std::move(cmp));
    if (current.letters.empty()) break;
    current = std::move(next);
  }
  return report;
}

}  // namespace kspm
