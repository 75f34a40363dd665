#include "kspm/words.hpp"

#include <cmath>
#include <string>

#include "kspm/error.hpp"

namespace kspm {

WordStats word_stats(std::span<const Letter> u) {
  WordStats stats;
  std::int64_t balance = 0;
  for (const auto c : u) {
    balance += c == kA ? 1 : -1;
    stats.max_height = std::max<std::uint64_t>(stats.max_height,
                                               static_cast<std::uint64_t>(std::llabs(balance)));
  }
  stats.height = static_cast<std::uint64_t>(std::llabs(balance));
  stats.in_l = in_language_l(u);
  return stats;
}

bool in_language_l(std::span<const Letter> u) noexcept {
  if (u.empty()) return true;
  if (u.size() == 1) return u[0] == kA;
  return u[0] == kA && u[1] == kB;
}

bool is_ab_prefix(std::span<const Letter> u) noexcept {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != (i % 2 == 0 ? kA : kB)) return false;
  }
  return true;
}

BasicWordTable basic_words(const TransducerMachine& machine, TransducerMachine::StateId q) {
  BasicWordTable table;
  const auto depth_limit = static_cast<std::size_t>(2 * machine.d() * machine.d());
  const auto letters = machine.alphabet_size();

  struct Frame {
    Word word;
    Word image;
    TransducerMachine::StateId state;
  };
  std::vector<Frame> stack{{{}, {}, q}};
  while (!stack.empty()) {
    auto frame = std::move(stack.back());
    stack.pop_back();
    // Push in reverse so that letter 0 is explored first.
    for (std::size_t a = letters; a-- > 0;) {
      const auto letter = static_cast<Letter>(a);
      const auto& e = machine.edge(frame.state, letter);
      Frame child{frame.word, frame.image, e.target};
      child.word.push_back(letter);
      child.image.insert(child.image.end(), e.output.begin(), e.output.end());
      if (child.image.size() >= 2) {
        table.words.push_back({std::move(child.word), std::move(child.image), child.state});
      } else if (child.word.size() >= depth_limit) {
        table.truncated = true;
      } else {
        stack.push_back(std::move(child));
      }
    }
  }
  std::sort(table.words.begin(), table.words.end(),
            [](const BasicWord& x, const BasicWord& y) { return x.word < y.word; });
  return table;
}

Decomposition decompose_from(const TransducerMachine& machine, TransducerMachine::StateId from,
                             std::span<const Letter> u) {
  Decomposition result;
  result.entered = true;
  auto state = from;
  Word current;
  std::size_t image = 0;
  for (const auto letter : u) {
    const auto& e = machine.edge(state, letter);
    current.push_back(letter);
    image += e.output.size();
    state = e.target;
    if (image >= 2) {
      result.factors.push_back(std::move(current));
      current.clear();
      image = 0;
    }
  }
  result.residual = std::move(current);
  return result;
}

Decomposition decompose(const TransducerMachine& machine, std::span<const Letter> u) {
  auto state = machine.initial();
  std::size_t used = 0;
  while (!machine.recurrent(state) && used < u.size()) {
    state = machine.edge(state, u[used]).target;
    ++used;
  }
  if (!machine.recurrent(state)) {
    Decomposition partial;
    partial.entry.assign(u.begin(), u.end());
    return partial;
  }
  auto result = decompose_from(machine, state, u.subspan(used));
  result.entry.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(used));
  return result;
}

std::uint64_t wave_steps_bound(std::uint64_t length) {
  const double l = static_cast<double>(length);
  const double x = std::log(4.0 * l + 4.0 / 3.0) / std::log(4.0) -
                   std::log(2.0 / 3.0) / std::log(4.0) + 3.0;
  return static_cast<std::uint64_t>(std::ceil(x)) + 1;
}

std::uint64_t wave_steps(const TransducerMachine& machine, std::span<const Letter> u,
                         std::uint64_t limit) {
  Word w(u.begin(), u.end());
  std::uint64_t n = 0;
  while (!is_ab_prefix(w)) {
    if (++n > limit) {
      throw InternalError("t^n(u) is not a prefix of (ab)^omega after " + std::to_string(limit) +
                          " iterations");
    }
    w = machine.run(w).output;
  }
  return n;
}

}  // namespace kspm
