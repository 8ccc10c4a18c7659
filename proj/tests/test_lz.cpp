#include <gtest/gtest.h>

#include <random>

#include "cfgcausal/error.hpp"
#include "cfgcausal/lz.hpp"
#include "oracles/naive.hpp"

using namespace cfgcausal;

namespace {

std::size_t lz(std::vector<Symbol> s) { return lz76(SymbolicSequence::from_symbols(std::move(s))).phrases; }

}  // namespace

TEST(Lz76, Examples) {
  EXPECT_EQ(lz({0}), 1u);
  EXPECT_EQ(lz({0, 0, 0, 0}), 2u);
  // 0 | 001 | 10 | 100 | 1000 | 101
  EXPECT_EQ(lz({0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1}), 6u);
  EXPECT_THROW(lz76(std::span<const Symbol>{}), InvalidInput);
}

TEST(Lz76, OracleAgreesOnExamples) {
  EXPECT_EQ(oracle::lz76({0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1}), 6u);
  EXPECT_EQ(oracle::lz76({0, 1, 0, 1}), 3u);
  EXPECT_EQ(oracle::lz76({0, 0}), 2u);
}

TEST(LzJoint, Examples) {
  const auto zero = SymbolicSequence({0}, 2);
  EXPECT_EQ(lz_joint(zero, zero, ConcatOrder::kXThenY).phrases, 2u);
  const auto zo = SymbolicSequence({0, 1}, 2);
  EXPECT_EQ(lz_joint(zo, zo, ConcatOrder::kXThenY).phrases, 3u);
  const auto a = SymbolicSequence({0, 0, 1}, 2);
  const auto b = SymbolicSequence({1, 1}, 2);
  EXPECT_EQ(lz_joint(a, b, ConcatOrder::kXThenY).phrases, oracle::lz76({0, 0, 1, 1, 1}));
  EXPECT_EQ(lz_joint(a, b, ConcatOrder::kYThenX).phrases, oracle::lz76({1, 1, 0, 0, 1}));
}

TEST(Lz76, ExhaustiveAgainstOracle) {
  for (Symbol alphabet = 1; alphabet <= 3; ++alphabet) {
    for (std::size_t len = 1; len <= 12; ++len) {
      std::vector<Symbol> s(len, 0);
      while (true) {
        ASSERT_EQ(lz76(std::span<const Symbol>(s)).phrases, oracle::lz76(s));
        std::size_t k = 0;
        while (k < len && ++s[k] == alphabet) s[k++] = 0;
        if (k == len) break;
      }
    }
  }
}

TEST(Lz76, RandomLongerAgainstOracle) {
  std::mt19937_64 rng(76);
  for (int i = 0; i < 1000; ++i) {
    const auto s = oracle::random_sequence(rng, 13 + rng() % 200, 2 + rng() % 4);
    ASSERT_EQ(lz76(std::span<const Symbol>(s)).phrases, oracle::lz76(s));
  }
}

TEST(Lz76, PrefixMonotonicity) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto s = oracle::random_sequence(rng, 2 + rng() % 300, 2 + rng() % 3);
    const std::size_t cut = 1 + rng() % (s.size() - 1);
    const std::span<const Symbol> full(s);
    ASSERT_LE(lz76(full.first(cut)).phrases, lz76(full).phrases);
  }
}

TEST(Lz76, ConstantSequencesAtMostTwo) {
  for (std::size_t n = 2; n < 500; n += 7) EXPECT_LE(lz(std::vector<Symbol>(n, 1)), 2u);
}

TEST(Lz76, BoundedByLength) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto s = oracle::random_sequence(rng, 1 + rng() % 100, 1 + rng() % 5);
    const auto c = lz76(std::span<const Symbol>(s)).phrases;
    ASSERT_GE(c, 1u);
    ASSERT_LE(c, s.size());
  }
}
