#include "cfgcausal/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "cfgcausal/error.hpp"
#include "cfgcausal/random.hpp"

namespace cfgcausal {

namespace {

void check_trim(double trim) {
  if (!(trim >= 0.0 && trim < 0.5)) throw InvalidInput("trim must lie in [0, 0.5)");
}

std::size_t tail_count(std::size_t n, double trim) {
  return static_cast<std::size_t>(std::floor(trim * static_cast<double>(n)));
}

struct Summary {
  double trimmed_mean;
  double squared_se;
};

// Sorts `values` in place.
Summary summarize(std::vector<double>& values, double trim) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const std::size_t g = tail_count(n, trim);
  const std::size_t h = n - 2 * g;
  const double tm = std::accumulate(values.begin() + g, values.end() - g, 0.0) / static_cast<double>(h);

  const double lo = values[g];
  const double hi = values[n - g - 1];
  double sum = 0.0;
  for (double v : values) sum += std::clamp(v, lo, hi);
  const double wmean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) {
    const double d = std::clamp(v, lo, hi) - wmean;
    ss += d * d;
  }
  // (n - 1) * s_w^2 with s_w^2 = ss / (n - 1)
  const double se2 = h > 1 ? ss / (static_cast<double>(h) * static_cast<double>(h - 1))
                           : std::numeric_limits<double>::infinity();
  return {tm, se2};
}

std::vector<double> checked_copy(std::span<const double> values, double trim) {
  check_trim(trim);
  if (values.empty()) throw InvalidInput("empty sample");
  if (2 * tail_count(values.size(), trim) >= values.size()) {
    throw InvalidInput("trimming leaves no values");
  }
  return {values.begin(), values.end()};
}

}  // namespace

double trimmed_mean(std::span<const double> values, double trim) {
  auto v = checked_copy(values, trim);
  return summarize(v, trim).trimmed_mean;
}

double winsorized_variance(std::span<const double> values, double trim) {
  auto v = checked_copy(values, trim);
  if (v.size() < 2) throw InvalidInput("winsorized variance needs at least 2 values");
  const std::size_t n = v.size();
  const std::size_t h = n - 2 * tail_count(n, trim);
  const double se2 = summarize(v, trim).squared_se;
  return se2 * static_cast<double>(h) * static_cast<double>(h - 1) / static_cast<double>(n - 1);
}

double yuen_squared_se(std::span<const double> values, double trim) {
  auto v = checked_copy(values, trim);
  return summarize(v, trim).squared_se;
}

TrimmedComparison yuen_bootstrap_t(std::span<const double> a, std::span<const double> b,
                                   double trim, std::size_t iterations, double confidence,
                                   std::uint64_t seed) {
  check_trim(trim);
  if (a.size() < 4 || b.size() < 4) throw InvalidInput("each group needs at least 4 values");
  if (!(confidence > 0.0 && confidence < 1.0)) throw InvalidInput("confidence must lie in (0, 1)");
  if (iterations == 0) throw InvalidInput("iterations must be positive");

  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  if (2 * tail_count(sa.size(), trim) + 2 > sa.size() || 2 * tail_count(sb.size(), trim) + 2 > sb.size()) {
    throw InvalidInput("trimming leaves fewer than 2 values in a group");
  }
  const Summary summary_a = summarize(sa, trim);
  const Summary summary_b = summarize(sb, trim);
  const double se = std::sqrt(summary_a.squared_se + summary_b.squared_se);
  if (se == 0.0) throw DegenerateVariance();

  std::vector<double> centred_a(a.size());
  std::vector<double> centred_b(b.size());
  std::transform(a.begin(), a.end(), centred_a.begin(), [&](double v) { return v - summary_a.trimmed_mean; });
  std::transform(b.begin(), b.end(), centred_b.begin(), [&](double v) { return v - summary_b.trimmed_mean; });

  const bool a_first = !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  Rng rng(seed);
  std::vector<double> draw_a(a.size());
  std::vector<double> draw_b(b.size());
  auto resample = [&](const std::vector<double>& from, std::vector<double>& to) {
    for (auto& v : to) v = from[rng.below(from.size())];
  };

  std::vector<double> abs_t(iterations);
  for (std::size_t it = 0; it < iterations; ++it) {
    if (a_first) {
      resample(centred_a, draw_a);
      resample(centred_b, draw_b);
    } else {
      resample(centred_b, draw_b);
      resample(centred_a, draw_a);
    }
    const Summary boot_a = summarize(draw_a, trim);
    const Summary boot_b = summarize(draw_b, trim);
    const double top = boot_a.trimmed_mean - boot_b.trimmed_mean;
    const double bottom = std::sqrt(boot_a.squared_se + boot_b.squared_se);
    abs_t[it] = bottom > 0.0 ? std::abs(top) / bottom
                             : (top == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  }
  std::sort(abs_t.begin(), abs_t.end());
  auto index = static_cast<std::size_t>(std::llround(confidence * static_cast<double>(iterations)));
  index = std::clamp<std::size_t>(index, 1, iterations) - 1;

  TrimmedComparison out;
  out.diff = summary_a.trimmed_mean - summary_b.trimmed_mean;
  out.critical_value = abs_t[index];
  out.standard_error = se;
  out.ci_low = out.diff - out.critical_value * se;
  out.ci_high = out.diff + out.critical_value * se;
  out.trim = trim;
  out.iterations = iterations;
  out.confidence = confidence;
  return out;
}

nlohmann::json to_json(const TrimmedComparison& c) {
  return {{"diff", c.diff},         {"ci_low", c.ci_low},         {"ci_high", c.ci_high},
          {"trim", c.trim},         {"iterations", c.iterations}, {"confidence", c.confidence}};
}

}  // namespace cfgcausal
