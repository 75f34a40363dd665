#include "kspm/transducer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "kspm/error.hpp"

namespace kspm {
namespace {

void check_letter(Letter alpha, int d) {
  if (static_cast<int>(alpha) > d - 2) {
    throw InputError("letter " + std::to_string(alpha) + " is outside the alphabet {0.." +
                     std::to_string(d - 2) + "}");
  }
}

// Kosaraju; returns the component id of every node and whether that
// component has no outgoing edge.
std::vector<char> terminal_components(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> radj(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto v : adj[u]) radj[v].push_back(u);
  }

  std::vector<std::size_t> order;
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        const auto v = adj[u][next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }

  std::vector<long> comp(n, -1);
  long count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = count;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto v : radj[u]) {
        if (comp[v] < 0) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }

  std::vector<char> terminal(static_cast<std::size_t>(count), 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto v : adj[u]) {
      if (comp[u] != comp[v]) terminal[static_cast<std::size_t>(comp[u])] = 0;
    }
  }
  std::vector<char> result(n);
  for (std::size_t u = 0; u < n; ++u) result[u] = terminal[static_cast<std::size_t>(comp[u])];
  return result;
}

}  // namespace

std::string label(const IntervalState& state) {
  std::string out;
  const bool wide = std::any_of(state.values.begin(), state.values.end(),
                                [](int v) { return v > 9; });
  for (std::size_t i = 0; i < state.values.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(state.values[i]);
  }
  return out;
}

std::optional<Letter> f_peak(const IntervalState& state, Letter alpha, int d) {
  const auto& a = state.values;
  bool triggered = false;
  for (std::size_t m = 0; m <= alpha && m < a.size(); ++m) {
    if (a[m] == d - 1) triggered = true;
  }
  if (!triggered) return std::nullopt;
  for (std::size_t m = a.size(); m-- > 0;) {
    if (a[m] == d - 1) return static_cast<Letter>(m);
  }
  return std::nullopt;
}

Transition delta(const IntervalState& state, Letter alpha, int d) {
  check_letter(alpha, d);
  if (state.values.size() != static_cast<std::size_t>(d - 1)) {
    throw InputError("interval state " + label(state) + " does not have D-1 entries");
  }
  Transition result{state, {}};
  auto& a = result.next.values;
  const int guard = d * (d - 1);
  for (int depth = 0;; ++depth) {
    if (depth > guard) {
      throw InternalError("delta recursion exceeded " + std::to_string(guard) + " steps");
    }
    const auto peak = f_peak(result.next, alpha, d);
    if (!peak) {
      for (std::size_t m = 0; m <= alpha; ++m) a[m] += 1;
      return result;
    }
    result.output.push_back(*peak);
    a[*peak] = 0;
    for (std::size_t m = *peak + 1; m < a.size(); ++m) a[m] += 1;
  }
}

std::string_view to_string(OutputMode mode) noexcept {
  return mode == OutputMode::AlgorithmExact ? "algorithm-exact" : "figure-suppressed";
}

OutputMode parse_output_mode(std::string_view text) {
  if (text == "algorithm-exact") return OutputMode::AlgorithmExact;
  if (text == "figure-suppressed") return OutputMode::FigureSuppressed;
  throw InputError("unknown machine mode '" + std::string(text) +
                   "' (expected algorithm-exact or figure-suppressed)");
}

TransducerMachine::StateId TransducerMachine::id_of(const IntervalState& state) const {
  if (auto id = find(state)) return *id;
  throw InputError("state " + label(state) + " is not reachable in the D=" +
                   std::to_string(d_) + " machine");
}

std::optional<TransducerMachine::StateId> TransducerMachine::find(
    const IntervalState& state) const {
  const auto it = index_.find(state);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const TransducerMachine::Edge& TransducerMachine::edge(StateId from, Letter letter) const {
  check_letter(letter, d_);
  return table_.at(from * alphabet_size() + letter);
}

TransducerMachine::RunResult TransducerMachine::run(std::span<const Letter> input,
                                                    StateId from) const {
  RunResult result{from, {}};
  for (const auto letter : input) {
    const auto& e = edge(result.end, letter);
    result.output.insert(result.output.end(), e.output.begin(), e.output.end());
    result.end = e.target;
  }
  return result;
}

TransducerMachine build_machine(int d, OutputMode mode) {
  if (d < 2) throw InputError("KSPM(D) requires D >= 2, got D = " + std::to_string(d));
  TransducerMachine m;
  m.d_ = d;
  m.mode_ = mode;
  const auto letters = static_cast<std::size_t>(d - 1);

  IntervalState initial{std::vector<int>(letters, 0)};
  m.states_.push_back(initial);
  m.index_.emplace(initial, 0);
  std::vector<std::vector<std::size_t>> adj;
  for (std::size_t s = 0; s < m.states_.size(); ++s) {
    adj.emplace_back();
    for (std::size_t a = 0; a < letters; ++a) {
      auto step = delta(m.states_[s], static_cast<Letter>(a), d);
      auto [it, fresh] = m.index_.emplace(step.next, m.states_.size());
      if (fresh) m.states_.push_back(step.next);
      m.table_.push_back({it->second, std::move(step.output)});
      adj.back().push_back(it->second);
    }
  }
  m.recurrent_ = terminal_components(adj);
  if (mode == OutputMode::FigureSuppressed) {
    for (std::size_t s = 0; s < m.states_.size(); ++s) {
      if (m.recurrent_[s]) continue;
      for (std::size_t a = 0; a < letters; ++a) m.table_[s * letters + a].output.clear();
    }
  }
  return m;
}

Word iterate(const TransducerMachine& machine, Word u, std::uint64_t n) {
  for (std::uint64_t j = 0; j < n; ++j) u = machine.run(u).output;
  return u;
}

std::string render_word(std::span<const Letter> word, bool ab) {
  std::string out;
  out.reserve(word.size());
  for (const auto c : word) {
    if (ab) {
      out += static_cast<char>('a' + c);
    } else if (c < 10) {
      out += static_cast<char>('0' + c);
    } else {
      out += '<' + std::to_string(c) + '>';
    }
  }
  return out;
}

Word parse_word(std::string_view text, int d) {
  Word word;
  word.reserve(text.size());
  for (const char c : text) {
    int v = -1;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (d == 3 && (c == 'a' || c == 'b')) {
      v = c - 'a';
    }
    if (v < 0 || v > d - 2) {
      throw InputError(std::string("letter '") + c + "' is outside the D=" + std::to_string(d) +
                       " type alphabet");
    }
    word.push_back(static_cast<Letter>(v));
  }
  return word;
}

std::string to_dot(const TransducerMachine& machine, bool ab_letters) {
  const bool ab = ab_letters && machine.d() == 3;
  std::ostringstream out;
  out << "digraph kspm_d" << machine.d() << " {\n";
  out << "  rankdir=LR;\n";
  out << "  // mode: " << to_string(machine.mode()) << "\n";
  for (std::size_t s = 0; s < machine.state_count(); ++s) {
    out << "  s" << s << " [label=\"" << label(machine.state(s)) << "\"";
    if (s == machine.initial()) out << ", shape=doublecircle";
    else out << ", shape=circle";
    if (machine.recurrent(s)) out << ", style=filled, fillcolor=gray70";
    out << "];\n";
  }
  for (std::size_t s = 0; s < machine.state_count(); ++s) {
    for (std::size_t a = 0; a < machine.alphabet_size(); ++a) {
      const Letter letter[] = {static_cast<Letter>(a)};
      const auto& e = machine.edge(s, letter[0]);
      const auto output = e.output.empty() ? std::string("eps") : render_word(e.output, ab);
      out << "  s" << s << " -> s" << e.target << " [label=\"" << render_word(letter, ab) << "|"
          << output << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace kspm
