#include <gtest/gtest.h>

#include <random>

#include "cfgcausal/error.hpp"
#include "cfgcausal/sequence.hpp"

using namespace cfgcausal;

namespace {

std::vector<Symbol> bins_of(std::vector<double> values, int bins) {
  return discretize_equiwidth(RealSeries(std::move(values)), bins).vector();
}

}  // namespace

TEST(SymbolicSequence, RejectsEmptyAndOutOfRange) {
  EXPECT_THROW(SymbolicSequence({}, 2), InvalidInput);
  EXPECT_THROW(SymbolicSequence({0, 2}, 2), InvalidInput);
  EXPECT_THROW(SymbolicSequence({0}, 0), InvalidInput);
  EXPECT_EQ(SymbolicSequence::from_symbols({3, 1}).alphabet_size(), 4u);
}

TEST(Equiwidth, BoundaryJoinsUpperBin) {
  EXPECT_EQ(bins_of({0.0, 0.5, 1.0}, 2), (std::vector<Symbol>{0, 1, 1}));
}

TEST(Equiwidth, ConstantSeriesIsAllZero) {
  const auto s = discretize_equiwidth(RealSeries({3.0, 3.0, 3.0}), 4);
  EXPECT_EQ(s.vector(), (std::vector<Symbol>{0, 0, 0}));
  EXPECT_EQ(s.alphabet_size(), 4u);
}

TEST(Equiwidth, FourValuesFourBins) {
  EXPECT_EQ(bins_of({1.0, 2.0, 3.0, 4.0}, 4), (std::vector<Symbol>{0, 1, 2, 3}));
}

TEST(Equiwidth, Errors) {
  EXPECT_THROW(RealSeries({1.0, std::nan("")}), InvalidInput);
  EXPECT_THROW(RealSeries({1.0, INFINITY}), InvalidInput);
  EXPECT_THROW(discretize_equiwidth(RealSeries({1.0, 2.0}), 1), InvalidInput);
  EXPECT_THROW(discretize_equiwidth(RealSeries({}), 2), InvalidInput);
}

TEST(Equiwidth, LengthBinsAndAffineInvariance) {
  std::mt19937_64 rng(11);
  const double alphas[] = {0.5, 2.0, 4.0};
  for (int trial = 0; trial < 300; ++trial) {
    const int bins = 2 << (trial % 3);  // 2, 4, 8 keep edges dyadic and exact
    std::vector<double> v(1 + rng() % 40);
    for (auto& x : v) x = static_cast<double>(static_cast<int>(rng() % 101) - 50);
    const auto base = bins_of(v, bins);
    ASSERT_EQ(base.size(), v.size());
    for (Symbol s : base) ASSERT_LT(s, static_cast<Symbol>(bins));

    const double alpha = alphas[trial % 3];
    const double beta = static_cast<double>(static_cast<int>(rng() % 21) - 10);
    std::vector<double> w(v);
    for (auto& x : w) x = alpha * x + beta;
    ASSERT_EQ(bins_of(w, bins), base);
  }
}

TEST(Equifrequency, Examples) {
  auto eq = [](std::vector<double> v, int bins) {
    return discretize_equifrequency(RealSeries(std::move(v)), bins).vector();
  };
  EXPECT_EQ(eq({1, 2, 3, 4}, 2), (std::vector<Symbol>{0, 0, 1, 1}));
  EXPECT_EQ(eq({7, 7, 7, 7}, 2), (std::vector<Symbol>{0, 0, 0, 0}));
  EXPECT_EQ(eq({5, 1, 3, 2, 4, 6}, 3), (std::vector<Symbol>{2, 0, 1, 0, 1, 2}));
  EXPECT_THROW(eq({1, 2}, 1), InvalidInput);
}

TEST(Nucleotides, Encoding) {
  EXPECT_EQ(encode_nucleotides("ACGT").vector(), (std::vector<Symbol>{1, 2, 3, 4}));
  EXPECT_EQ(encode_nucleotides("AAAA").vector(), (std::vector<Symbol>{1, 1, 1, 1}));
  EXPECT_EQ(encode_nucleotides("acgt").vector(), (std::vector<Symbol>{1, 2, 3, 4}));
  EXPECT_EQ(encode_nucleotides("A").alphabet_size(), 5u);
  try {
    encode_nucleotides("ACGN");
    FAIL() << "expected AmbiguousNucleotide";
  } catch (const AmbiguousNucleotide& e) {
    EXPECT_EQ(e.character(), 'N');
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Nucleotides, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::string s(1 + rng() % 64, 'A');
    for (auto& c : s) c = "ACGT"[rng() % 4];
    EXPECT_EQ(decode_nucleotides(encode_nucleotides(s)), s);
  }
}

TEST(Fasta, SingleAndMultiLineRecords) {
  EXPECT_EQ(parse_fasta(">s1\nACGT\n"), (std::vector<FastaRecord>{{"s1", "ACGT"}}));
  EXPECT_EQ(parse_fasta(">s1\nAC\nGT\n>s2\nTTTT\n"),
            (std::vector<FastaRecord>{{"s1", "ACGT"}, {"s2", "TTTT"}}));
  EXPECT_EQ(parse_fasta(">s1 description here\r\nAC GT\r\n").front().id, "s1");
}

TEST(Fasta, Errors) {
  EXPECT_THROW(parse_fasta(">s1\n\n"), FormatError);
  EXPECT_THROW(parse_fasta(""), FormatError);
  EXPECT_THROW(parse_fasta("ACGT\n>s1\nA\n"), FormatError);
}

TEST(Fasta, RecordCountMatchesHeaders) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const std::size_t records = 1 + rng() % 10;
    std::string text;
    for (std::size_t r = 0; r < records; ++r) {
      text += ">r" + std::to_string(r) + "\n";
      for (std::size_t l = 0, lines = 1 + rng() % 3; l < lines; ++l) text += "ACGTN\n";
    }
    EXPECT_EQ(parse_fasta(text).size(), records);
  }
}

TEST(PairFile, IntegerLines) {
  const auto pair = parse_pair_file("0 1 1 0\n2,0, 1\n");
  EXPECT_EQ(pair.x.vector(), (std::vector<Symbol>{0, 1, 1, 0}));
  EXPECT_EQ(pair.y.vector(), (std::vector<Symbol>{2, 0, 1}));
  EXPECT_EQ(pair.x.alphabet_size(), 3u);
  EXPECT_EQ(pair.y.alphabet_size(), 3u);
}

TEST(PairFile, DiscretizedLines) {
  const auto pair = parse_pair_file("# comment\n0.0 0.5 1.0\n\n3.5,-1,2\n", 2);
  EXPECT_EQ(pair.x.vector(), (std::vector<Symbol>{0, 1, 1}));
  EXPECT_EQ(pair.y.vector(), (std::vector<Symbol>{1, 0, 1}));
}

TEST(PairFile, Errors) {
  EXPECT_THROW(parse_pair_file("0 1\n"), FormatError);
  EXPECT_THROW(parse_pair_file("0 1\n1 -1\n"), FormatError);
  EXPECT_THROW(parse_pair_file("0 1\n1 0.5\n"), FormatError);
  EXPECT_THROW(parse_pair_file("0 1\n1 0\n1 1\n"), FormatError);
}
