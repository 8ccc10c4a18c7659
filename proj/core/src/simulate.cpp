#include "cfgcausal/simulate.hpp"

#include <cmath>

#include "cfgcausal/error.hpp"
#include "cfgcausal/parallel.hpp"
#include "cfgcausal/random.hpp"
#include "cfgcausal/format.hpp"

namespace cfgcausal {

ArPair ar1_coupled(const ArConfig& config) {
  if (!(std::abs(config.a) < 1.0) || !(std::abs(config.b) < 1.0)) {
    throw InvalidInput("AR self-coefficients must satisfy |a| < 1 and |b| < 1");
  }
  if (!(config.phi >= 0.0)) throw InvalidInput("coupling phi must be non-negative");
  if (config.n < 2) throw InvalidInput("AR series need at least 2 samples");
  if (!(config.noise_intensity > 0.0)) throw InvalidInput("noise intensity must be positive");

  Rng rng(config.seed);
  std::vector<double> x(config.n, 0.0);
  std::vector<double> y(config.n, 0.0);
  const double v = config.noise_intensity;
  for (std::size_t t = 1; t < config.n; ++t) {
    const double noise_y = rng.normal();
    const double noise_x = rng.normal();
    y[t] = config.b * y[t - 1] + v * noise_y;
    x[t] = config.a * x[t - 1] + config.phi * y[t - 1] + v * noise_x;
  }
  return {RealSeries(std::move(x)), RealSeries(std::move(y))};
}

std::vector<double> default_phi_grid() {
  std::vector<double> grid;
  for (int k = 0; k < 20; ++k) grid.push_back(k / 20.0);
  return grid;
}

std::vector<BenchmarkRecord> run_benchmark(const BenchmarkSpec& spec) {
  if (spec.trials_per_phi < 1) throw InvalidInput("trials_per_phi must be at least 1");
  if (spec.models.empty()) throw InvalidInput("no models selected");
  const std::size_t total = spec.phis.size() * spec.trials_per_phi;
  std::vector<BenchmarkRecord> records(total);

  parallel_for(total, spec.jobs, [&](std::size_t k) {
    const std::size_t phi_index = k / spec.trials_per_phi;
    const std::size_t trial = k % spec.trials_per_phi;
    ArConfig ar = spec.base;
    ar.phi = spec.phis[phi_index];
    ar.seed = child_seed(spec.master_seed, static_cast<std::uint32_t>(phi_index),
                         static_cast<std::uint32_t>(trial));
    const auto pair = ar1_coupled(ar);
    const auto x = discretize_equiwidth(pair.x, spec.bins);
    const auto y = discretize_equiwidth(pair.y, spec.bins);

    BenchmarkRecord& rec = records[k];
    rec.phi = ar.phi;
    rec.phi_index = phi_index;
    rec.trial = trial;
    rec.truth = Direction::kYtoX;
    if (x == y) {
      // The models reject identical inputs; with nothing to distinguish the
      // directions the trial is recorded as undecided on every model.
      for (Model m : spec.models) {
        rec.verdicts.push_back({m, Direction::kUndecided, 0.0, 0.0, 0.0,
                                !(m == Model::kEtcE &&
                                  spec.causal.efficacy_polarity == EfficacyPolarity::kHigherWins)});
      }
      return;
    }
    rec.verdicts = evaluate_models(x, y, spec.models, spec.causal);
  });
  return records;
}

void write_benchmark_csv(std::ostream& out, std::span<const BenchmarkRecord> records) {
  out << "phi,trial,truth,model,direction,score_xy,score_yx,strength\n";
  for (const auto& r : records) {
    for (const auto& v : r.verdicts) {
      out << format_double(r.phi) << ',' << r.trial << ',' << to_string(r.truth) << ','
          << to_string(v.model) << ',' << to_string(v.direction) << ','
          << format_double(v.score_xy) << ',' << format_double(v.score_yx) << ','
          << format_double(v.strength) << '\n';
    }
  }
}

}  // namespace cfgcausal
