#pragma once

#include <cstddef>
#include <span>

#include "cfgcausal/sequence.hpp"

namespace cfgcausal {

// Number of phrases in the LZ76 exhaustive production history.
struct LzCount {
  std::size_t phrases = 0;

  friend auto operator<=>(const LzCount&, const LzCount&) = default;
};

// LZ76 complexity. Scanning left to right, a phrase starting at i grows to
// s[i..j] while s[i..j] occurs as a substring of s[0..j-1]; the first j where
// it does not closes the phrase. A trailing partial phrase counts as one.
//
// Runs in O(n) expected time via a suffix automaton that records the first end
// position of every state.
LzCount lz76(const SymbolicSequence& s);
LzCount lz76(std::span<const Symbol> s);

enum class ConcatOrder { kXThenY, kYThenX };

// lz76 of the concatenation x.y or y.x.
LzCount lz_joint(const SymbolicSequence& x, const SymbolicSequence& y, ConcatOrder order);

}  // namespace cfgcausal
