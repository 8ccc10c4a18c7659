#include "cfgcausal/lz.hpp"

#include <cstdint>
#include <vector>

#include "cfgcausal/error.hpp"

namespace cfgcausal {

namespace {

// Suffix automaton with per-state first end position. Transitions live in a
// flat edge pool as singly-linked lists; alphabets here are small (binary or
// nucleotide), so a linear scan beats hashing.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::span<const Symbol> s) {
    states_.reserve(2 * s.size() + 1);
    edges_.reserve(3 * s.size() + 1);
    states_.push_back({0, -1, -1, -1});
    for (std::size_t i = 0; i < s.size(); ++i) extend(s[i], static_cast<std::int32_t>(i));
  }

  std::int32_t next(std::int32_t state, Symbol c) const {
    for (std::int32_t e = states_[state].head; e != -1; e = edges_[e].next) {
      if (edges_[e].symbol == c) return edges_[e].target;
    }
    return -1;
  }

  std::int32_t first_end(std::int32_t state) const { return states_[state].first_end; }

 private:
  struct State {
    std::int32_t len;
    std::int32_t link;
    std::int32_t first_end;
    std::int32_t head;
  };
  struct Edge {
    Symbol symbol;
    std::int32_t target;
    std::int32_t next;
  };

  void set_edge(std::int32_t state, Symbol c, std::int32_t target) {
    for (std::int32_t e = states_[state].head; e != -1; e = edges_[e].next) {
      if (edges_[e].symbol == c) {
        edges_[e].target = target;
        return;
      }
    }
    edges_.push_back({c, target, states_[state].head});
    states_[state].head = static_cast<std::int32_t>(edges_.size() - 1);
  }

  void copy_edges(std::int32_t from, std::int32_t to) {
    for (std::int32_t e = states_[from].head; e != -1; e = edges_[e].next) {
      edges_.push_back({edges_[e].symbol, edges_[e].target, states_[to].head});
      states_[to].head = static_cast<std::int32_t>(edges_.size() - 1);
    }
  }

  void extend(Symbol c, std::int32_t pos) {
    const auto cur = static_cast<std::int32_t>(states_.size());
    states_.push_back({states_[last_].len + 1, -1, pos, -1});
    std::int32_t p = last_;
    while (p != -1 && next(p, c) == -1) {
      set_edge(p, c, cur);
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const std::int32_t q = next(p, c);
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const auto clone = static_cast<std::int32_t>(states_.size());
        states_.push_back({states_[p].len + 1, states_[q].link, states_[q].first_end, -1});
        copy_edges(q, clone);
        while (p != -1 && next(p, c) == q) {
          set_edge(p, c, clone);
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last_ = cur;
  }

  std::vector<State> states_;
  std::vector<Edge> edges_;
  std::int32_t last_ = 0;
};

}  // namespace

LzCount lz76(std::span<const Symbol> s) {
  if (s.empty()) throw InvalidInput("lz76 requires a non-empty sequence");
  const SuffixAutomaton sam(s);
  const std::size_t n = s.size();
  std::size_t phrases = 0;
  std::size_t i = 0;
  while (i < n) {
    // s[i..i+m-1] is reproducible iff its first occurrence starts before i.
    std::int32_t state = 0;
    std::size_t m = 0;
    while (i + m < n) {
      const std::int32_t nxt = sam.next(state, s[i + m]);
      const auto first_start = static_cast<std::int64_t>(sam.first_end(nxt)) -
                               static_cast<std::int64_t>(m);
      if (first_start >= static_cast<std::int64_t>(i)) break;
      state = nxt;
      ++m;
    }
    ++phrases;
    i += m + 1;
  }
  return {phrases};
}

LzCount lz76(const SymbolicSequence& s) { return lz76(s.symbols()); }

LzCount lz_joint(const SymbolicSequence& x, const SymbolicSequence& y, ConcatOrder order) {
  const auto& first = order == ConcatOrder::kXThenY ? x : y;
  const auto& second = order == ConcatOrder::kXThenY ? y : x;
  std::vector<Symbol> joined;
  joined.reserve(first.size() + second.size());
  joined.insert(joined.end(), first.symbols().begin(), first.symbols().end());
  joined.insert(joined.end(), second.symbols().begin(), second.symbols().end());
  return lz76(std::span<const Symbol>(joined));
}

}  // namespace cfgcausal
