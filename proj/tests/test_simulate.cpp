#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cfgcausal/error.hpp"
#include "cfgcausal/random.hpp"
#include "cfgcausal/simulate.hpp"

using namespace cfgcausal;

namespace {

double variance(std::span<const double> v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(v.size() - 1);
}

}  // namespace

TEST(Ar1, SameSeedSameSeries) {
  ArConfig c;
  c.phi = 0.4;
  c.seed = 77;
  const auto a = ar1_coupled(c);
  const auto b = ar1_coupled(c);
  EXPECT_TRUE(std::ranges::equal(a.x.values(), b.x.values()));
  EXPECT_TRUE(std::ranges::equal(a.y.values(), b.y.values()));
  c.seed = 78;
  EXPECT_FALSE(std::ranges::equal(a.x.values(), ar1_coupled(c).x.values()));
}

TEST(Ar1, StartsAtZeroWithRequestedLength) {
  ArConfig c;
  c.n = 50;
  const auto p = ar1_coupled(c);
  EXPECT_EQ(p.x.size(), 50u);
  EXPECT_EQ(p.y.size(), 50u);
  EXPECT_EQ(p.x.values()[0], 0.0);
  EXPECT_EQ(p.y.values()[0], 0.0);
}

TEST(Ar1, RecurrenceHolds) {
  ArConfig c;
  c.phi = 0.3;
  c.seed = 5;
  c.n = 200;
  const auto p = ar1_coupled(c);
  Rng rng(c.seed);
  const auto x = p.x.values();
  const auto y = p.y.values();
  for (std::size_t t = 1; t < c.n; ++t) {
    const double ny = rng.normal();
    const double nx = rng.normal();
    ASSERT_EQ(y[t], c.b * y[t - 1] + c.noise_intensity * ny);
    ASSERT_EQ(x[t], c.a * x[t - 1] + c.phi * y[t - 1] + c.noise_intensity * nx);
  }
}

TEST(Ar1, VanishingNoiseStaysAtZero) {
  ArConfig c;
  c.noise_intensity = 1e-12;
  for (std::uint64_t s = 0; s < 5; ++s) {
    c.seed = s;
    const auto p = ar1_coupled(c);
    for (double v : p.x.values()) ASSERT_LT(std::abs(v), 1e-10);
    for (double v : p.y.values()) ASSERT_LT(std::abs(v), 1e-10);
  }
}

TEST(Ar1, StrongCouplingInflatesDrivenVariance) {
  ArConfig c;
  c.phi = 0.8;
  for (std::uint64_t s = 0; s < 50; ++s) {
    c.seed = s;
    const auto p = ar1_coupled(c);
    ASSERT_GT(variance(p.x.values()), variance(p.y.values()));
  }
}

TEST(Ar1, RejectsBadConfigs) {
  ArConfig c;
  c.a = 1.0;
  EXPECT_THROW(ar1_coupled(c), InvalidInput);
  c = {};
  c.phi = -0.1;
  EXPECT_THROW(ar1_coupled(c), InvalidInput);
  c = {};
  c.n = 1;
  EXPECT_THROW(ar1_coupled(c), InvalidInput);
  c = {};
  c.noise_intensity = 0.0;
  EXPECT_THROW(ar1_coupled(c), InvalidInput);
}

TEST(PhiGrid, TwentyValues) {
  const auto g = default_phi_grid();
  ASSERT_EQ(g.size(), 20u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g[3], 0.15);
  EXPECT_EQ(g.back(), 0.95);
}

TEST(ChildSeed, DistinctOverGrid) {
  std::set<std::uint64_t> seen;
  for (std::uint32_t i = 0; i < 20; ++i) {
    for (std::uint32_t t = 0; t < 1000; ++t) seen.insert(child_seed(42, i, t));
  }
  EXPECT_EQ(seen.size(), 20000u);
}

TEST(Benchmark, ShapeOrderAndJobIndependence) {
  BenchmarkSpec spec;
  spec.phis = {0.0, 0.5};
  spec.trials_per_phi = 6;
  spec.base.n = 120;
  spec.master_seed = 9;
  const auto serial = run_benchmark(spec);
  ASSERT_EQ(serial.size(), 12u);
  for (std::size_t k = 0; k < serial.size(); ++k) {
    EXPECT_EQ(serial[k].phi_index, k / 6);
    EXPECT_EQ(serial[k].trial, k % 6);
    EXPECT_EQ(serial[k].truth, Direction::kYtoX);
    EXPECT_EQ(serial[k].verdicts.size(), 3u);
  }
  spec.jobs = 4;
  const auto parallel = run_benchmark(spec);
  ASSERT_EQ(parallel.size(), serial.size());
  for (std::size_t k = 0; k < serial.size(); ++k) EXPECT_EQ(parallel[k].verdicts, serial[k].verdicts);

  std::ostringstream a, b;
  write_benchmark_csv(a, serial);
  write_benchmark_csv(b, parallel);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().rfind("phi,trial,truth,model,direction,score_xy,score_yx,strength\n", 0), 0u);
}
