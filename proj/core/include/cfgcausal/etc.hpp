#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cfgcausal/sequence.hpp"

namespace cfgcausal {

// One pair substitution: every non-overlapping (left, right) becomes output.
struct Rule {
  Symbol left = 0;
  Symbol right = 0;
  Symbol output = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Ordered pair-substitution rules inferred by NSRPS. Rule k was step k + 1 and
// outputs first_fresh + k.
class Grammar {
 public:
  Grammar() = default;
  explicit Grammar(Symbol first_fresh) : first_fresh_(first_fresh) {}
  // Throws InvalidInput unless outputs run first_fresh, first_fresh + 1, ...
  Grammar(Symbol first_fresh, std::vector<Rule> rules);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  Symbol first_fresh() const noexcept { return first_fresh_; }
  Symbol next_fresh() const noexcept { return first_fresh_ + static_cast<Symbol>(rules_.size()); }

  // Appends (left, right) -> next_fresh() and returns the new symbol.
  Symbol add(Symbol left, Symbol right);

  friend bool operator==(const Grammar&, const Grammar&) = default;

 private:
  Symbol first_fresh_ = 0;
  std::vector<Rule> rules_;
};

struct EtcResult {
  std::size_t steps = 0;
  Grammar grammar;
  // steps / (L - 1), or 0 when L == 1.
  double normalized = 0.0;
};

// Effort-To-Compress: run NSRPS until the sequence is constant (length 1
// included). Each step counts non-overlapping occurrences of every adjacent
// pair greedily left to right, picks the most frequent pair (ties go to the
// pair whose first occurrence is leftmost), and replaces its non-overlapping
// occurrences left to right with a fresh symbol. Fresh ids start at the
// input's alphabet_size.
EtcResult etc_compress(const SymbolicSequence& s);

// Shorthand for etc_compress(s).normalized.
double normalized_etc(const SymbolicSequence& s);

enum class ConditionalCounting {
  kFiringRules,  // count only rules whose pair was present when applied
  kAllRules,     // count every rule of the grammar
};

struct ConditionalResult {
  std::size_t applied_steps = 0;
  SymbolicSequence residual;
};

// Replays `grammar` on `target`: rules in order, once each, each substituting
// its pair non-overlapping left to right. The residual's alphabet is
// max(target.alphabet_size(), grammar.next_fresh()) so that compressing it
// continues fresh allocation past the grammar's symbols.
//
// Throws InvalidInput if the target alphabet reaches into the grammar's
// output ids.
ConditionalResult etc_conditional(const SymbolicSequence& target, const Grammar& grammar,
                                  ConditionalCounting counting = ConditionalCounting::kFiringRules);

// "left right -> output", one rule per line, inference order.
std::string to_text(const Grammar& grammar);
Grammar grammar_from_text(std::string_view text);

}  // namespace cfgcausal
