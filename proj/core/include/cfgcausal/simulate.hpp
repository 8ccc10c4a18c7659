#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "cfgcausal/causal.hpp"
#include "cfgcausal/sequence.hpp"

namespace cfgcausal {

// Unidirectionally coupled AR(1) pair, Y driving X:
//   Y(t) = b Y(t-1) + v N_Y(t)
//   X(t) = a X(t-1) + phi Y(t-1) + v N_X(t)
// with X(0) = Y(0) = 0 and no burn-in.
struct ArConfig {
  double a = 0.8;
  double b = 0.8;
  double phi = 0.0;
  std::size_t n = 1000;
  double noise_intensity = 0.01;
  std::uint64_t seed = 0;
};

struct ArPair {
  RealSeries x;
  RealSeries y;
};

// Normal draws come from Rng(config.seed) (Marsaglia polar over mt19937_64),
// N_Y(t) then N_X(t) at each t >= 1.
// Throws InvalidInput on |a| >= 1, |b| >= 1, phi < 0, n < 2 or v <= 0.
ArPair ar1_coupled(const ArConfig& config);

// The coupling grid 0, 0.05, ..., 0.95.
std::vector<double> default_phi_grid();

struct BenchmarkSpec {
  std::vector<double> phis = default_phi_grid();
  std::size_t trials_per_phi = 1000;
  int bins = 2;
  std::vector<Model> models{std::begin(kAllModels), std::end(kAllModels)};
  std::uint64_t master_seed = 0;
  // Dynamics other than phi and seed are taken from here.
  ArConfig base;
  CausalConfig causal;
  unsigned jobs = 1;
};

struct BenchmarkRecord {
  double phi = 0.0;
  std::size_t phi_index = 0;
  std::size_t trial = 0;
  Direction truth = Direction::kYtoX;
  std::vector<CausalVerdict> verdicts;  // one per BenchmarkSpec::models entry
};

// Trial (phi index i, trial t) simulates with child_seed(master_seed, i, t),
// bins both series equi-width and evaluates every model. Records come back
// ordered by (phi index, trial) whatever the job count.
std::vector<BenchmarkRecord> run_benchmark(const BenchmarkSpec& spec);

// Rows: phi,trial,truth,model,direction,score_xy,score_yx,strength. No
// header comment; callers prepend their own.
void write_benchmark_csv(std::ostream& out, std::span<const BenchmarkRecord> records);

}  // namespace cfgcausal
