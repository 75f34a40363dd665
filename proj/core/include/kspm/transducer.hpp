#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kspm {

/// Letter of the type alphabet {0, ..., D-2}.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Slopes (a_0, ..., a_{D-2}) of one interval: the transducer state.
struct IntervalState {
  std::vector<int> values;

  friend auto operator<=>(const IntervalState&, const IntervalState&) = default;
  friend bool operator==(const IntervalState&, const IntervalState&) = default;
};

/// "21" style label (digits concatenated; comma separated when D > 10).
std::string label(const IntervalState& state);

/// f: the largest position holding D-1 when some position m <= alpha holds
/// D-1, epsilon otherwise.
std::optional<Letter> f_peak(const IntervalState& state, Letter alpha, int d);

struct Transition {
  IntervalState next;
  Word output;
};

/// g(A, alpha, epsilon): new interval state and the types emitted on the next
/// interval. Throws InternalError if the recursion exceeds D(D-1) steps.
Transition delta(const IntervalState& state, Letter alpha, int d);

/// Output convention on transient states: AlgorithmExact keeps whatever the
/// recursion emits; FigureSuppressed replaces outputs leaving transient
/// states by epsilon.
enum class OutputMode { AlgorithmExact, FigureSuppressed };

std::string_view to_string(OutputMode mode) noexcept;
/// "algorithm-exact" | "figure-suppressed"; throws InputError otherwise.
OutputMode parse_output_mode(std::string_view text);

/// Deterministic word transducer over the reachable interval states.
class TransducerMachine {
 public:
  using StateId = std::size_t;

  struct Edge {
    StateId target = 0;
    Word output;
  };

  struct RunResult {
    StateId end = 0;
    Word output;
  };

  int d() const noexcept { return d_; }
  OutputMode mode() const noexcept { return mode_; }
  std::size_t alphabet_size() const noexcept { return static_cast<std::size_t>(d_ - 1); }
  std::size_t state_count() const noexcept { return states_.size(); }
  StateId initial() const noexcept { return 0; }

  const IntervalState& state(StateId id) const { return states_.at(id); }
  /// Throws InputError for a state that is not reachable.
  StateId id_of(const IntervalState& state) const;
  std::optional<StateId> find(const IntervalState& state) const;

  bool recurrent(StateId id) const { return recurrent_.at(id) != 0; }
  const Edge& edge(StateId from, Letter letter) const;

  /// Folds the transition table over `input` from `from`. Throws InputError
  /// on a letter outside the alphabet.
  RunResult run(std::span<const Letter> input, StateId from) const;
  RunResult run(std::span<const Letter> input) const { return run(input, initial()); }

 private:
  friend TransducerMachine build_machine(int d, OutputMode mode);

  int d_ = 0;
  OutputMode mode_ = OutputMode::AlgorithmExact;
  std::vector<IntervalState> states_;
  std::map<IntervalState, StateId> index_;
  std::vector<Edge> table_;  // states_ x alphabet
  std::vector<char> recurrent_;
};

/// Breadth-first closure of delta from the all-zero state. A state is
/// recurrent when it lies in a terminal strongly connected component.
TransducerMachine build_machine(int d, OutputMode mode = OutputMode::AlgorithmExact);

/// t^n(u).
Word iterate(const TransducerMachine& machine, Word u, std::uint64_t n);

/// Graphviz rendering: one node per state, edges labelled "letter|output".
std::string to_dot(const TransducerMachine& machine, bool ab_letters = false);

/// Digits 0..D-2, or a/b when D = 3 and `ab` is set.
std::string render_word(std::span<const Letter> word, bool ab = false);
/// Accepts digits below D-1; for D = 3 also 'a'/'b'. Throws InputError.
Word parse_word(std::string_view text, int d);

}  // namespace kspm
