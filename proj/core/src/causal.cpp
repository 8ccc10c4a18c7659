#include "cfgcausal/causal.hpp"

#include <algorithm>
#include <cmath>

#include "cfgcausal/error.hpp"

namespace cfgcausal {

double signed_score(const CausalVerdict& v) {
  return v.lower_wins ? v.score_yx - v.score_xy : v.score_xy - v.score_yx;
}

Direction mirrored(Direction d) {
  switch (d) {
    case Direction::kXtoY: return Direction::kYtoX;
    case Direction::kYtoX: return Direction::kXtoY;
    case Direction::kUndecided: return Direction::kUndecided;
  }
  return d;
}

CausalVerdict mirrored(const CausalVerdict& v) {
  CausalVerdict m = v;
  std::swap(m.score_xy, m.score_yx);
  m.direction = mirrored(v.direction);
  return m;
}

namespace {

CausalVerdict decide(Model model, double score_xy, double score_yx, bool lower_wins,
                     double threshold) {
  CausalVerdict v;
  v.model = model;
  v.score_xy = score_xy;
  v.score_yx = score_yx;
  v.strength = std::abs(score_yx - score_xy);
  v.lower_wins = lower_wins;
  // Margin in favour of x -> y under this model's rule.
  const double margin = lower_wins ? score_yx - score_xy : score_xy - score_yx;
  if (margin > threshold) {
    v.direction = Direction::kXtoY;
  } else if (-margin > threshold) {
    v.direction = Direction::kYtoX;
  } else {
    v.direction = Direction::kUndecided;
  }
  return v;
}

void check_pair(const SymbolicSequence& x, const SymbolicSequence& y, const CausalConfig& config) {
  if (x.size() < 2 || y.size() < 2) throw InvalidInput("causal models need sequences of length >= 2");
  if (x == y) throw IdenticalInput();
  if (!(config.threshold >= 0.0)) throw InvalidInput("threshold must be non-negative");
}

// Cross-compression of `target` under `source`'s grammar.
struct CrossCompression {
  std::size_t applied_steps = 0;
  std::size_t residual_length = 0;
  std::size_t residual_etc = 0;
};

CrossCompression cross_compress(const SequenceProfile& source, const SequenceProfile& target,
                                ConditionalCounting counting) {
  auto cond = etc_conditional(target.sequence(), source.etc().grammar, counting);
  const auto residual_etc = etc_compress(cond.residual).steps;
  return {cond.applied_steps, cond.residual.size(), residual_etc};
}

double efficacy_score(const CrossCompression& c) {
  if (c.residual_length <= 1) return 0.0;
  return static_cast<double>(c.residual_etc) / static_cast<double>(c.residual_length - 1);
}

double penalty_score(const CrossCompression& c, const SequenceProfile& target) {
  return static_cast<double>(c.applied_steps) + static_cast<double>(c.residual_etc) -
         static_cast<double>(target.etc().steps);
}

}  // namespace

SequenceProfile::SequenceProfile(SymbolicSequence sequence)
    : sequence_(std::move(sequence)), etc_(etc_compress(sequence_)), lz_(lz76(sequence_)) {}

std::vector<CausalVerdict> evaluate_models(const SequenceProfile& x, const SequenceProfile& y,
                                           std::span<const Model> models,
                                           const CausalConfig& config) {
  check_pair(x.sequence(), y.sequence(), config);
  if (x.sequence().alphabet_size() != y.sequence().alphabet_size()) {
    const Symbol alphabet = std::max(x.sequence().alphabet_size(), y.sequence().alphabet_size());
    return evaluate_models(SequenceProfile(x.sequence().with_alphabet(alphabet)),
                           SequenceProfile(y.sequence().with_alphabet(alphabet)), models, config);
  }

  std::optional<CrossCompression> xy;  // y under G_x
  std::optional<CrossCompression> yx;  // x under G_y
  auto ensure_cross = [&] {
    if (!xy) {
      xy = cross_compress(x, y, config.conditional);
      yx = cross_compress(y, x, config.conditional);
    }
  };

  std::vector<CausalVerdict> out;
  out.reserve(models.size());
  for (Model m : models) {
    switch (m) {
      case Model::kEtcP:
        ensure_cross();
        out.push_back(decide(m, penalty_score(*xy, y), penalty_score(*yx, x), true,
                             config.threshold));
        break;
      case Model::kEtcE:
        ensure_cross();
        out.push_back(decide(m, efficacy_score(*xy), efficacy_score(*yx),
                             config.efficacy_polarity == EfficacyPolarity::kLowerWins,
                             config.threshold));
        break;
      case Model::kLzP: {
        const auto joint_xy = lz_joint(x.sequence(), y.sequence(), ConcatOrder::kXThenY);
        const auto joint_yx = config.joint_lz == JointLzMode::kShared
                                  ? joint_xy
                                  : lz_joint(x.sequence(), y.sequence(), ConcatOrder::kYThenX);
        const double score_xy = static_cast<double>(joint_xy.phrases) -
                                static_cast<double>(x.lz().phrases);
        const double score_yx = static_cast<double>(joint_yx.phrases) -
                                static_cast<double>(y.lz().phrases);
        out.push_back(decide(m, score_xy, score_yx, true, config.threshold));
        break;
      }
    }
  }
  return out;
}

std::vector<CausalVerdict> evaluate_models(const SymbolicSequence& x, const SymbolicSequence& y,
                                           std::span<const Model> models,
                                           const CausalConfig& config) {
  check_pair(x, y, config);
  const Symbol alphabet = std::max(x.alphabet_size(), y.alphabet_size());
  return evaluate_models(SequenceProfile(x.with_alphabet(alphabet)),
                         SequenceProfile(y.with_alphabet(alphabet)), models, config);
}

namespace {

CausalVerdict single(Model m, const SymbolicSequence& x, const SymbolicSequence& y,
                     const CausalConfig& config) {
  const Model models[] = {m};
  return evaluate_models(x, y, models, config).front();
}

}  // namespace

CausalVerdict etc_penalty(const SymbolicSequence& x, const SymbolicSequence& y,
                          const CausalConfig& config) {
  return single(Model::kEtcP, x, y, config);
}

CausalVerdict etc_efficacy(const SymbolicSequence& x, const SymbolicSequence& y,
                           const CausalConfig& config) {
  return single(Model::kEtcE, x, y, config);
}

CausalVerdict lz_penalty(const SymbolicSequence& x, const SymbolicSequence& y,
                         const CausalConfig& config) {
  return single(Model::kLzP, x, y, config);
}

std::string_view to_string(Model m) {
  switch (m) {
    case Model::kEtcP: return "etc-p";
    case Model::kEtcE: return "etc-e";
    case Model::kLzP: return "lz-p";
  }
  return "?";
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kXtoY: return "x->y";
    case Direction::kYtoX: return "y->x";
    case Direction::kUndecided: return "undecided";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view name) {
  for (Model m : kAllModels) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view text) {
  for (Direction d : {Direction::kXtoY, Direction::kYtoX, Direction::kUndecided}) {
    if (to_string(d) == text) return d;
  }
  return std::nullopt;
}

nlohmann::json to_json(const CausalVerdict& v) {
  return {{"model", std::string(to_string(v.model))},
          {"direction", std::string(to_string(v.direction))},
          {"score_xy", v.score_xy},
          {"score_yx", v.score_yx},
          {"strength", v.strength}};
}

}  // namespace cfgcausal
