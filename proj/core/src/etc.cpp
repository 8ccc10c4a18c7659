#include "cfgcausal/etc.hpp"

#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cfgcausal/error.hpp"

namespace cfgcausal {

Grammar::Grammar(Symbol first_fresh, std::vector<Rule> rules)
    : first_fresh_(first_fresh), rules_(std::move(rules)) {
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    if (rules_[k].output != first_fresh_ + k) {
      throw InvalidInput("grammar rule " + std::to_string(k) + " has output " +
                         std::to_string(rules_[k].output) + ", expected " +
                         std::to_string(first_fresh_ + k));
    }
  }
}

Symbol Grammar::add(Symbol left, Symbol right) {
  const Symbol out = next_fresh();
  rules_.push_back({left, right, out});
  return out;
}

namespace {

using Pos = std::int32_t;
constexpr Pos kNone = -1;

constexpr std::uint64_t pair_key(Symbol a, Symbol b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}
constexpr Symbol key_left(std::uint64_t k) { return static_cast<Symbol>(k >> 32); }
constexpr Symbol key_right(std::uint64_t k) { return static_cast<Symbol>(k & 0xffffffffu); }

// Doubly-linked sequence with an index from each adjacent pair to the ordered
// set of positions where it starts. Positions are original indices, so
// integer order is sequence order.
//
// With counting enabled it also keeps the non-overlapping frequency of every
// pair and a priority set ordered by (frequency desc, first position asc).
// Frequencies of (a, b) with a != b equal the occurrence count; for (a, a)
// they are sum(floor(run_length / 2)) over maximal runs of a, tracked through
// run endpoints so each substitution stays O(log n).
class PairIndex {
 public:
  PairIndex(std::span<const Symbol> s, Symbol symbol_limit, bool counting)
      : sym_(s.begin(), s.end()),
        prev_(s.size()),
        next_(s.size()),
        counting_(counting),
        length_(s.size()) {
    const auto n = static_cast<Pos>(s.size());
    for (Pos i = 0; i < n; ++i) {
      prev_[i] = i - 1;
      next_[i] = i + 1 < n ? i + 1 : kNone;
    }
    symbol_count_.assign(symbol_limit, 0);
    for (Symbol c : sym_) {
      if (symbol_count_[c]++ == 0) ++distinct_;
    }
    for (Pos i = 0; i + 1 < n; ++i) add_occurrence(i);

    if (counting_) {
      run_other_.assign(s.size(), kNone);
      run_len_.assign(s.size(), 0);
      run_pairs_.assign(symbol_limit, 0);
      Pos start = 0;
      for (Pos i = 0; i < n; ++i) {
        if (i + 1 == n || sym_[i + 1] != sym_[i]) {
          const Pos len = i - start + 1;
          run_other_[start] = i;
          run_other_[i] = start;
          run_len_[start] = run_len_[i] = len;
          run_pairs_[sym_[i]] += len / 2;
          start = i + 1;
        }
      }
      refresh_priorities();
    }
  }

  std::size_t length() const { return length_; }
  bool constant() const { return distinct_ <= 1; }

  // Most frequent pair, ties to the leftmost first occurrence. Requires
  // counting and a non-constant sequence.
  std::uint64_t best_pair() const { return std::get<2>(*priority_.begin()); }

  // Replaces the non-overlapping occurrences of `key` left to right with
  // `output`. Returns false if the pair does not occur.
  bool substitute(std::uint64_t key, Symbol output) {
    auto it = pairs_.find(key);
    if (it == pairs_.end() || it->second.positions.empty()) return false;

    std::vector<Pos> chosen;
    chosen.reserve(it->second.positions.size());
    Pos blocked = kNone;
    for (Pos p : it->second.positions) {
      if (p == blocked) continue;
      chosen.push_back(p);
      blocked = next_[p];
    }
    for (Pos p : chosen) replace_at(p, output);
    if (counting_) refresh_priorities();
    return true;
  }

  std::vector<Symbol> materialize() const {
    std::vector<Symbol> out;
    out.reserve(length_);
    for (Pos i = length_ ? 0 : kNone; i != kNone; i = next_[i]) out.push_back(sym_[i]);
    return out;
  }

 private:
  struct Slot {
    std::set<Pos> positions;
    std::int64_t ranked_count = 0;  // entry currently in priority_, 0 if none
    Pos ranked_first = kNone;
    bool dirty = false;
  };
  // (-count, first position, key): begin() is the pair to substitute next.
  using Entry = std::tuple<std::int64_t, Pos, std::uint64_t>;

  void mark_dirty(std::uint64_t key, Slot& slot) {
    if (!slot.dirty) {
      slot.dirty = true;
      dirty_.push_back(key);
    }
  }

  void add_occurrence(Pos p) {
    const auto key = pair_key(sym_[p], sym_[next_[p]]);
    auto& slot = pairs_[key];
    slot.positions.insert(p);
    if (counting_) mark_dirty(key, slot);
  }

  void remove_occurrence(Pos p) {
    const auto key = pair_key(sym_[p], sym_[next_[p]]);
    auto& slot = pairs_.at(key);
    slot.positions.erase(p);
    if (counting_) mark_dirty(key, slot);
  }

  void touch_run_pairs(Symbol a, std::int64_t delta) {
    if (delta == 0) return;
    run_pairs_[a] += delta;
    const auto key = pair_key(a, a);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) mark_dirty(key, it->second);
  }

  // Removes p from its run; p must be a run endpoint.
  void detach_from_run(Pos p) {
    const Pos other = run_other_[p];
    const Pos len = run_len_[p];
    touch_run_pairs(sym_[p], (len - 1) / 2 - len / 2);
    if (len == 1) return;
    const Pos inner = other > p ? next_[p] : prev_[p];
    run_other_[other] = inner;
    run_other_[inner] = other;
    run_len_[other] = run_len_[inner] = len - 1;
  }

  // Joins the run ending at `left_end` with the run starting right after it.
  void merge_runs(Pos left_end, Pos right_start) {
    const Pos left_start = run_other_[left_end];
    const Pos right_end = run_other_[right_start];
    const Pos a = run_len_[left_end];
    const Pos b = run_len_[right_start];
    touch_run_pairs(sym_[left_end], (a + b) / 2 - a / 2 - b / 2);
    run_other_[left_start] = right_end;
    run_other_[right_end] = left_start;
    run_len_[left_start] = run_len_[right_end] = a + b;
  }

  void replace_at(Pos i, Symbol output) {
    const Pos j = next_[i];
    const Pos p = prev_[i];
    const Pos n = next_[j];

    if (p != kNone) remove_occurrence(p);
    remove_occurrence(i);
    if (n != kNone) remove_occurrence(j);

    if (counting_) {
      // i ends its run or starts it (greedy left-to-right over an (a, a) run),
      // and once i is gone j starts its run.
      detach_from_run(i);
      detach_from_run(j);
    }

    for (Symbol c : {sym_[i], sym_[j]}) {
      if (--symbol_count_[c] == 0) --distinct_;
    }
    if (symbol_count_[output]++ == 0) ++distinct_;

    sym_[i] = output;
    next_[i] = n;
    if (n != kNone) prev_[n] = i;
    --length_;

    if (counting_) {
      run_other_[i] = i;
      run_len_[i] = 1;
      if (p != kNone && sym_[p] == output) merge_runs(p, i);
      if (n != kNone && sym_[n] == output) merge_runs(i, n);
    }

    if (p != kNone) add_occurrence(p);
    if (n != kNone) add_occurrence(i);
  }

  void refresh_priorities() {
    for (const auto key : dirty_) {
      auto it = pairs_.find(key);
      auto& slot = it->second;
      slot.dirty = false;
      if (slot.ranked_count > 0) priority_.erase({-slot.ranked_count, slot.ranked_first, key});
      const Symbol a = key_left(key);
      const std::int64_t count = a == key_right(key)
                                     ? run_pairs_[a]
                                     : static_cast<std::int64_t>(slot.positions.size());
      if (slot.positions.empty()) {
        pairs_.erase(it);
        continue;
      }
      slot.ranked_count = count;
      slot.ranked_first = *slot.positions.begin();
      if (count > 0) priority_.insert({-count, slot.ranked_first, key});
    }
    dirty_.clear();
  }

  std::vector<Symbol> sym_;
  std::vector<Pos> prev_;
  std::vector<Pos> next_;
  bool counting_;
  std::size_t length_;
  std::vector<std::size_t> symbol_count_;
  std::size_t distinct_ = 0;

  std::unordered_map<std::uint64_t, Slot> pairs_;

  std::vector<Pos> run_other_;
  std::vector<Pos> run_len_;
  std::vector<std::int64_t> run_pairs_;
  std::set<Entry> priority_;
  std::vector<std::uint64_t> dirty_;
};

}  // namespace

EtcResult etc_compress(const SymbolicSequence& s) {
  const Symbol first_fresh = s.alphabet_size();
  // Each step shortens the sequence, so at most size - 1 fresh symbols.
  PairIndex index(s.symbols(), first_fresh + static_cast<Symbol>(s.size()), true);
  EtcResult result{0, Grammar(first_fresh), 0.0};
  while (index.length() > 1 && !index.constant()) {
    const auto key = index.best_pair();
    const Symbol out = result.grammar.add(key_left(key), key_right(key));
    index.substitute(key, out);
    ++result.steps;
  }
  result.normalized =
      s.size() > 1 ? static_cast<double>(result.steps) / static_cast<double>(s.size() - 1) : 0.0;
  return result;
}

double normalized_etc(const SymbolicSequence& s) { return etc_compress(s).normalized; }

ConditionalResult etc_conditional(const SymbolicSequence& target, const Grammar& grammar,
                                  ConditionalCounting counting) {
  if (!grammar.empty() && target.alphabet_size() > grammar.first_fresh()) {
    throw InvalidInput("target alphabet (" + std::to_string(target.alphabet_size()) +
                       ") overlaps grammar symbols starting at " +
                       std::to_string(grammar.first_fresh()));
  }
  const Symbol limit = std::max(target.alphabet_size(), grammar.next_fresh());
  PairIndex index(target.symbols(), limit, false);
  std::size_t applied = 0;
  for (const Rule& rule : grammar.rules()) {
    if (index.substitute(pair_key(rule.left, rule.right), rule.output)) ++applied;
  }
  if (counting == ConditionalCounting::kAllRules) applied = grammar.size();
  return {applied, SymbolicSequence(index.materialize(), limit)};
}

std::string to_text(const Grammar& grammar) {
  std::ostringstream out;
  for (const Rule& r : grammar.rules()) out << r.left << ' ' << r.right << " -> " << r.output << '\n';
  return out.str();
}

Grammar grammar_from_text(std::string_view text) {
  std::vector<Rule> rules;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Rule r;
    std::string arrow;
    if (!(fields >> r.left >> r.right >> arrow >> r.output) || arrow != "->") {
      throw FormatError("grammar line " + std::to_string(line_no) + ": expected 'left right -> output'");
    }
    rules.push_back(r);
  }
  const Symbol first = rules.empty() ? 0 : rules.front().output;
  return Grammar(first, std::move(rules));
}

}  // namespace cfgcausal
