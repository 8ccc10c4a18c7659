#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfgcausal {

using Symbol = std::uint32_t;

// An ordered, non-empty list of symbol ids, all strictly below alphabet_size.
// Immutable after construction.
class SymbolicSequence {
 public:
  // Throws InvalidInput if `symbols` is empty, alphabet_size is zero, or any
  // id is out of range.
  SymbolicSequence(std::vector<Symbol> symbols, Symbol alphabet_size);

  // Alphabet is max(symbols) + 1.
  static SymbolicSequence from_symbols(std::vector<Symbol> symbols);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const std::vector<Symbol>& vector() const noexcept { return symbols_; }
  Symbol alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  // Same symbols, larger alphabet bound. `alphabet_size` must not shrink the
  // bound below what the symbols need.
  SymbolicSequence with_alphabet(Symbol alphabet_size) const;

  // Compares symbols only; the alphabet bound is not part of identity.
  friend bool operator==(const SymbolicSequence& a, const SymbolicSequence& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  Symbol alphabet_size_;
};

// Finite real-valued series prior to discretization.
class RealSeries {
 public:
  // Throws InvalidInput on NaN or infinity.
  explicit RealSeries(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

// Equal-width bins over [min, max]; interior edges join the upper bin and the
// last bin is closed at max. A constant series maps to all zeros.
SymbolicSequence discretize_equiwidth(const RealSeries& series, int bins);

// Bins by empirical rank: the value of stable rank r (0-based) of n goes to
// bin floor(r * bins / n). Tied values all take the bin of the lowest rank in
// their tie group, so a constant series maps to all zeros.
SymbolicSequence discretize_equifrequency(const RealSeries& series, int bins);

// A=1, C=2, G=3, T=4 (case-insensitive); id 0 is unused and alphabet_size is 5.
SymbolicSequence encode_nucleotides(std::string_view text);

// Inverse of encode_nucleotides, producing uppercase letters.
std::string decode_nucleotides(const SymbolicSequence& sequence);

struct FastaRecord {
  std::string id;
  std::string body;

  friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

// One record per '>' header. The id is the header text up to the first
// whitespace; body lines are concatenated with all whitespace removed.
std::vector<FastaRecord> parse_fasta(std::string_view text);

struct SequencePair {
  SymbolicSequence x;
  SymbolicSequence y;
};

// Two-line pair file: line 1 is x, line 2 is y, values separated by commas
// and/or whitespace. With `discretize_bins` > 0 the lines are read as reals and
// binned equi-width; otherwise they must be non-negative integers. Both
// sequences share one alphabet. Blank lines and '#' comment lines are skipped.
SequencePair parse_pair_file(std::string_view text, int discretize_bins = 0);

}  // namespace cfgcausal
