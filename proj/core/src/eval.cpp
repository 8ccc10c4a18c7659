#include "cfgcausal/eval.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "cfgcausal/error.hpp"
#include "cfgcausal/random.hpp"

namespace cfgcausal {

namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InvalidInput("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

std::vector<CurvePoint> decision_rate_accuracy(std::span<const CausalVerdict> verdicts,
                                               std::span<const Direction> truths,
                                               std::span<const double> rates,
                                               std::uint64_t coin_seed) {
  check_lengths(verdicts.size(), truths.size());
  if (verdicts.empty()) throw InvalidInput("no verdicts to evaluate");
  for (double r : rates) {
    if (!(r > 0.0 && r <= 1.0)) throw InvalidInput("decision rates must lie in (0, 1]");
  }
  for (Direction t : truths) {
    if (t == Direction::kUndecided) throw InvalidInput("ground truth must be a direction");
  }

  const std::size_t n = verdicts.size();
  Rng coin(coin_seed);
  std::vector<char> correct(n);
  for (std::size_t i = 0; i < n; ++i) {
    Direction d = verdicts[i].direction;
    if (d == Direction::kUndecided) d = coin.coin() ? Direction::kXtoY : Direction::kYtoX;
    correct[i] = d == truths[i];
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return verdicts[a].strength > verdicts[b].strength;
  });
  // prefix[k] = correct among the top k
  std::vector<std::size_t> prefix(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + correct[order[k]];

  std::vector<CurvePoint> curve;
  curve.reserve(rates.size());
  for (double r : rates) {
    auto top = static_cast<std::size_t>(std::ceil(r * static_cast<double>(n) - 1e-9));
    top = std::clamp<std::size_t>(top, 1, n);
    curve.push_back({r, static_cast<double>(prefix[top]) / static_cast<double>(top)});
  }
  return curve;
}

std::optional<double> auroc(std::span<const double> scores, std::span<const bool> positive) {
  check_lengths(scores.size(), positive.size());
  const std::size_t n = scores.size();
  const auto n_pos = static_cast<std::size_t>(std::count(positive.begin(), positive.end(), true));
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) return std::nullopt;

  // Mid-ranks over tied scores.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double positive_rank_sum = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (positive[order[k]]) positive_rank_sum += mid_rank;
    }
    i = j;
  }
  const double p = static_cast<double>(n_pos);
  const double u = positive_rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * static_cast<double>(n_neg));
}

std::optional<double> auprc(std::span<const double> scores, std::span<const bool> positive) {
  check_lengths(scores.size(), positive.size());
  const std::size_t n = scores.size();
  const auto n_pos = static_cast<std::size_t>(std::count(positive.begin(), positive.end(), true));
  if (n_pos == 0) return std::nullopt;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double area = 0.0;
  std::size_t tp = 0;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    std::size_t new_tp = 0;
    while (j < n && scores[order[j]] == scores[order[i]]) {
      new_tp += positive[order[j]];
      ++j;
    }
    tp += new_tp;
    seen = j;
    const double precision = static_cast<double>(tp) / static_cast<double>(seen);
    area += precision * static_cast<double>(new_tp) / static_cast<double>(n_pos);
    i = j;
  }
  return area;
}

std::vector<double> default_decision_rates() {
  std::vector<double> rates;
  for (int k = 1; k <= 100; ++k) rates.push_back(k / 100.0);
  return rates;
}

EvalReport evaluate(std::span<const CausalVerdict> verdicts, std::span<const Direction> truths,
                    const EvalOptions& options) {
  std::vector<double> rates = options.rates;
  rates.push_back(1.0);
  std::sort(rates.begin(), rates.end());
  rates.erase(std::unique(rates.begin(), rates.end()), rates.end());

  EvalReport report;
  report.count = verdicts.size();
  report.decision_rate_curve = decision_rate_accuracy(verdicts, truths, rates, options.coin_seed);
  report.overall_accuracy = report.decision_rate_curve.back().accuracy;

  std::vector<double> scores;
  std::vector<char> labels;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    scores.push_back(signed_score(verdicts[i]));
    labels.push_back(truths[i] == Direction::kXtoY);
    if (options.orientation_balanced) {
      scores.push_back(signed_score(mirrored(verdicts[i])));
      labels.push_back(truths[i] != Direction::kXtoY);
    }
  }
  // std::vector<bool> has no contiguous storage for std::span.
  const std::unique_ptr<bool[]> positive(new bool[labels.size()]);
  std::copy(labels.begin(), labels.end(), positive.get());
  const std::span<const bool> pos(positive.get(), labels.size());
  report.auroc = auroc(scores, pos);
  report.auprc = auprc(scores, pos);
  return report;
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json curve = nlohmann::json::array();
  for (const auto& p : report.decision_rate_curve) {
    curve.push_back({{"rate", p.rate}, {"accuracy", p.accuracy}});
  }
  nlohmann::json j;
  j["count"] = report.count;
  j["overall_accuracy"] = report.overall_accuracy;
  j["auroc"] = report.auroc ? nlohmann::json(*report.auroc) : nlohmann::json(nullptr);
  j["auprc"] = report.auprc ? nlohmann::json(*report.auprc) : nlohmann::json(nullptr);
  j["decision_rate_curve"] = std::move(curve);
  return j;
}

}  // namespace cfgcausal
