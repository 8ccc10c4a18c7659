#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfgcausal/causal.hpp"

namespace cfgcausal {

struct CurvePoint {
  double rate = 0.0;
  double accuracy = 0.0;
};

// Accuracy over the top ceil(rate * N) verdicts by strength (stable
// descending sort, so the earlier index wins ties). Undecided verdicts keep
// their strength for ranking and are then resolved by a fair coin: one draw
// from Rng(coin_seed) per undecided verdict, in input order, shared by every
// rate. Truths must be decided directions; rates must lie in (0, 1].
std::vector<CurvePoint> decision_rate_accuracy(std::span<const CausalVerdict> verdicts,
                                               std::span<const Direction> truths,
                                               std::span<const double> rates,
                                               std::uint64_t coin_seed);

// Rank-based AUROC (Mann-Whitney), ties count one half. `positive[i]` marks
// an x -> y label. nullopt when only one class is present.
std::optional<double> auroc(std::span<const double> scores, std::span<const bool> positive);

// Average precision: sweep thresholds over distinct scores in descending
// order and sum precision * recall increment. nullopt without positives.
std::optional<double> auprc(std::span<const double> scores, std::span<const bool> positive);

// 0.01, 0.02, ..., 1.00
std::vector<double> default_decision_rates();

struct EvalOptions {
  std::vector<double> rates = default_decision_rates();
  std::uint64_t coin_seed = 0;
  // Rank each verdict together with its mirror (x and y exchanged, truth
  // flipped). A battery with a single ground-truth orientation otherwise has
  // one class and no ROC.
  bool orientation_balanced = false;
};

struct EvalReport {
  std::vector<CurvePoint> decision_rate_curve;  // rates strictly increasing, last 1.0
  std::optional<double> auroc;
  std::optional<double> auprc;
  double overall_accuracy = 0.0;
  std::size_t count = 0;
};

// Rates are sorted, deduplicated and completed with 1.0. Ranking metrics use
// signed_score() with x -> y as the positive class.
EvalReport evaluate(std::span<const CausalVerdict> verdicts, std::span<const Direction> truths,
                    const EvalOptions& options = {});

// Undefined metrics serialize as null.
nlohmann::json to_json(const EvalReport& report);

}  // namespace cfgcausal
