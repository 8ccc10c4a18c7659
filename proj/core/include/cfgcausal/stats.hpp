#pragma once

#include <cstdint>
#include <span>

#include <nlohmann/json.hpp>

namespace cfgcausal {

// Mean after dropping floor(trim * n) values from each tail.
// Throws InvalidInput if trim is outside [0, 0.5) or nothing remains.
double trimmed_mean(std::span<const double> values, double trim);

// Variance of the sample winsorized at floor(trim * n) per tail (n - 1
// denominator).
double winsorized_variance(std::span<const double> values, double trim);

// Yuen's squared standard error of a trimmed mean: (n - 1) s_w^2 / (h (h - 1))
// with h = n - 2 floor(trim * n).
double yuen_squared_se(std::span<const double> values, double trim);

struct TrimmedComparison {
  double diff = 0.0;  // trimmed mean of a minus trimmed mean of b
  double ci_low = 0.0;
  double ci_high = 0.0;
  double trim = 0.2;
  std::size_t iterations = 0;
  double confidence = 0.95;
  double standard_error = 0.0;  // sqrt(d_a + d_b)
  double critical_value = 0.0;  // bootstrap quantile of |t*|
};

// Bootstrap-t comparison of trimmed means with a symmetric interval.
//
// Each group is centred on its own trimmed mean; every iteration resamples
// both centred groups with replacement and records
// t* = (tm(a*) - tm(b*)) / sqrt(d(a*) + d(b*)). With c the
// round(confidence * iterations)-th smallest |t*|, the interval is
// diff -/+ c * sqrt(d(a) + d(b)). A zero denominator gives t* = 0 when the
// numerator is zero as well and +infinity otherwise.
//
// The group that compares lexicographically smaller always draws first from
// Rng(seed), so swapping a and b negates diff and mirrors the interval
// exactly.
//
// Throws InvalidInput for groups under 4 values, trim outside [0, 0.5),
// confidence outside (0, 1) or zero iterations; DegenerateVariance when both
// groups have zero winsorized variance.
TrimmedComparison yuen_bootstrap_t(std::span<const double> a, std::span<const double> b,
                                   double trim, std::size_t iterations, double confidence,
                                   std::uint64_t seed);

// {diff, ci_low, ci_high, trim, iterations, confidence}
nlohmann::json to_json(const TrimmedComparison& c);

}  // namespace cfgcausal
