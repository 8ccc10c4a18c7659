#include "cfgcausal/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "cfgcausal/error.hpp"

namespace cfgcausal {

SymbolicSequence::SymbolicSequence(std::vector<Symbol> symbols, Symbol alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (symbols_.empty()) throw InvalidInput("symbolic sequence must not be empty");
  if (alphabet_size_ == 0) throw InvalidInput("alphabet size must be positive");
  const auto it = std::find_if(symbols_.begin(), symbols_.end(),
                               [&](Symbol s) { return s >= alphabet_size_; });
  if (it != symbols_.end()) {
    throw InvalidInput("symbol " + std::to_string(*it) + " outside alphabet of size " +
                       std::to_string(alphabet_size_));
  }
}

SymbolicSequence SymbolicSequence::from_symbols(std::vector<Symbol> symbols) {
  if (symbols.empty()) throw InvalidInput("symbolic sequence must not be empty");
  const Symbol max = *std::max_element(symbols.begin(), symbols.end());
  return SymbolicSequence(std::move(symbols), max + 1);
}

SymbolicSequence SymbolicSequence::with_alphabet(Symbol alphabet_size) const {
  return SymbolicSequence(symbols_, alphabet_size);
}

RealSeries::RealSeries(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidInput("non-finite value at index " + std::to_string(i));
    }
  }
}

namespace {

void check_binning(const RealSeries& series, int bins) {
  if (bins < 2) throw InvalidInput("bins must be at least 2");
  if (series.size() == 0) throw InvalidInput("series must not be empty");
}

}  // namespace

SymbolicSequence discretize_equiwidth(const RealSeries& series, int bins) {
  check_binning(series, bins);
  const auto values = series.values();
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  std::vector<Symbol> out(values.size(), 0);
  if (lo == hi) return SymbolicSequence(std::move(out), static_cast<Symbol>(bins));

  const double width = (hi - lo) / bins;
  for (std::size_t i = 0; i < values.size(); ++i) {
    // Edges are lo + k*width; compare against them directly so values sitting
    // exactly on an edge land in the upper bin regardless of division rounding.
    int b = static_cast<int>(std::floor((values[i] - lo) / width));
    b = std::clamp(b, 0, bins - 1);
    while (b + 1 < bins && values[i] >= lo + (b + 1) * width) ++b;
    while (b > 0 && values[i] < lo + b * width) --b;
    out[i] = static_cast<Symbol>(b);
  }
  return SymbolicSequence(std::move(out), static_cast<Symbol>(bins));
}

SymbolicSequence discretize_equifrequency(const RealSeries& series, int bins) {
  check_binning(series, bins);
  const auto values = series.values();
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<Symbol> out(n, 0);
  std::size_t group_rank = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == 0 || values[order[r]] != values[order[r - 1]]) group_rank = r;
    out[order[r]] = static_cast<Symbol>(group_rank * static_cast<std::size_t>(bins) / n);
  }
  return SymbolicSequence(std::move(out), static_cast<Symbol>(bins));
}

SymbolicSequence encode_nucleotides(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (std::toupper(static_cast<unsigned char>(text[i]))) {
      case 'A': out.push_back(1); break;
      case 'C': out.push_back(2); break;
      case 'G': out.push_back(3); break;
      case 'T': out.push_back(4); break;
      default: throw AmbiguousNucleotide(text[i], i);
    }
  }
  if (out.empty()) throw InvalidInput("empty nucleotide sequence");
  return SymbolicSequence(std::move(out), 5);
}

std::string decode_nucleotides(const SymbolicSequence& sequence) {
  static constexpr char kLetters[] = {'?', 'A', 'C', 'G', 'T'};
  std::string out;
  out.reserve(sequence.size());
  for (Symbol s : sequence.symbols()) {
    if (s < 1 || s > 4) throw InvalidInput("symbol " + std::to_string(s) + " is not a nucleotide");
    out.push_back(kLetters[s]);
  }
  return out;
}

std::vector<FastaRecord> parse_fasta(std::string_view text) {
  std::vector<FastaRecord> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() == '>') {
      std::string_view header = line.substr(1);
      const auto ws = header.find_first_of(" \t");
      records.push_back({std::string(header.substr(0, ws)), {}});
      continue;
    }
    const bool blank = std::all_of(line.begin(), line.end(),
                                   [](unsigned char c) { return std::isspace(c); });
    if (blank) continue;
    if (records.empty()) {
      throw FormatError("FASTA line " + std::to_string(line_no) + ": sequence data before first header");
    }
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) records.back().body.push_back(c);
    }
  }
  if (records.empty()) throw FormatError("FASTA input contains no records");
  for (const auto& r : records) {
    if (r.body.empty()) throw FormatError("FASTA record '" + r.id + "' has an empty body");
  }
  return records;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view field, int line) {
  T value{};
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("pair file line " + std::to_string(line) + ": cannot parse '" +
                      std::string(field) + "'");
  }
  return value;
}

}  // namespace

SequencePair parse_pair_file(std::string_view text, int discretize_bins) {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<int> row_lines;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    rows.push_back(std::move(fields));
    row_lines.push_back(line_no);
  }
  if (rows.size() != 2) {
    throw FormatError("pair file must contain exactly two data lines, found " +
                      std::to_string(rows.size()));
  }

  if (discretize_bins > 0) {
    std::vector<SymbolicSequence> seqs;
    for (int r = 0; r < 2; ++r) {
      std::vector<double> values;
      for (auto f : rows[r]) values.push_back(parse_number<double>(f, row_lines[r]));
      seqs.push_back(discretize_equiwidth(RealSeries(std::move(values)), discretize_bins));
    }
    return {seqs[0], seqs[1]};
  }

  std::vector<Symbol> parsed[2];
  Symbol alphabet = 1;
  for (int r = 0; r < 2; ++r) {
    for (auto f : rows[r]) {
      if (f.front() == '-') {
        throw FormatError("pair file line " + std::to_string(row_lines[r]) +
                          ": negative symbol '" + std::string(f) + "'");
      }
      const auto v = parse_number<Symbol>(f, row_lines[r]);
      parsed[r].push_back(v);
      alphabet = std::max(alphabet, v + 1);
    }
  }
  return {SymbolicSequence(std::move(parsed[0]), alphabet),
          SymbolicSequence(std::move(parsed[1]), alphabet)};
}

}  // namespace cfgcausal
