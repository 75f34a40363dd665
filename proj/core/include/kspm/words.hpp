#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kspm/transducer.hpp"

// Word analysis of the KSPM(3) transducer over the alphabet {a = 0, b = 1}.

namespace kspm {

inline constexpr Letter kA = 0;
inline constexpr Letter kB = 1;

struct WordStats {
  std::uint64_t height = 0;      ///< | |u|_a - |u|_b |
  std::uint64_t max_height = 0;  ///< max height over prefixes
  bool in_l = false;             ///< u in {ab v} + {epsilon, a}
};

WordStats word_stats(std::span<const Letter> u);
bool in_language_l(std::span<const Letter> u) noexcept;
/// Prefix of (ab)^omega (including the empty word).
bool is_ab_prefix(std::span<const Letter> u) noexcept;

struct BasicWord {
  Word word;
  Word image;
  TransducerMachine::StateId end = 0;
};

struct BasicWordTable {
  std::vector<BasicWord> words;  ///< in lexicographic order
  bool truncated = false;        ///< a branch hit the 2 D^2 depth guard
};

/// Minimal words u with |t_q(u)| >= 2 whose proper prefixes all have images
/// shorter than 2.
BasicWordTable basic_words(const TransducerMachine& machine, TransducerMachine::StateId q);

struct Decomposition {
  Word entry;                ///< shortest prefix reaching a recurrent state
  bool entered = false;      ///< false when u never leaves the transient states
  std::vector<Word> factors; ///< basic words for the running state
  Word residual;             ///< proper prefix of a basic word, possibly empty
};

/// u = entry . factors . residual.
Decomposition decompose(const TransducerMachine& machine, std::span<const Letter> u);

/// Decomposition into basic words for the running state starting at `from`
/// (no entry word).
Decomposition decompose_from(const TransducerMachine& machine, TransducerMachine::StateId from,
                             std::span<const Letter> u);

/// ceil(log4(4l + 4/3) - log4(2/3) + 3) + 1.
std::uint64_t wave_steps_bound(std::uint64_t length);

/// Minimal n such that t^n(u) is a prefix of (ab)^omega. Throws InternalError
/// past `limit` iterations.
std::uint64_t wave_steps(const TransducerMachine& machine, std::span<const Letter> u,
                         std::uint64_t limit = 4096);

}  // namespace kspm
