#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfgcausal/etc.hpp"
#include "cfgcausal/lz.hpp"
#include "cfgcausal/sequence.hpp"

namespace cfgcausal {

enum class Model { kEtcP, kEtcE, kLzP };
inline constexpr Model kAllModels[] = {Model::kEtcP, Model::kEtcE, Model::kLzP};

enum class Direction { kXtoY, kYtoX, kUndecided };

// How lz_penalty estimates the joint complexity.
enum class JointLzMode {
  kShared,            // J = LZ(x.y) in both directions
  kDirectionMatched,  // J_xy = LZ(x.y), J_yx = LZ(y.x)
};

// Which efficacy score names the cause. The documented rule is kHigherWins.
enum class EfficacyPolarity { kHigherWins, kLowerWins };

struct CausalConfig {
  // Differences at or below this are Undecided.
  double threshold = 0.0;
  JointLzMode joint_lz = JointLzMode::kShared;
  ConditionalCounting conditional = ConditionalCounting::kFiringRules;
  EfficacyPolarity efficacy_polarity = EfficacyPolarity::kHigherWins;
};

struct CausalVerdict {
  Model model = Model::kLzP;
  Direction direction = Direction::kUndecided;
  double score_xy = 0.0;
  double score_yx = 0.0;
  double strength = 0.0;  // |score_yx - score_xy|
  // True when the smaller score marks the cause (penalty models).
  bool lower_wins = true;

  friend bool operator==(const CausalVerdict&, const CausalVerdict&) = default;
};

// Positive when the verdict's scores favour x -> y.
double signed_score(const CausalVerdict& v);

// The same verdict seen with x and y exchanged.
CausalVerdict mirrored(const CausalVerdict& v);
Direction mirrored(Direction d);

// ETC-P: score_xy = ETC(y|G_x) + ETC(y_residual) - ETC(y); smaller wins.
CausalVerdict etc_penalty(const SymbolicSequence& x, const SymbolicSequence& y,
                          const CausalConfig& config = {});

// ETC-E: score_xy = ETC(y_residual) / (len(y_residual) - 1), 0 for a residual
// of length 1; larger wins unless the polarity is switched.
CausalVerdict etc_efficacy(const SymbolicSequence& x, const SymbolicSequence& y,
                           const CausalConfig& config = {});

// LZ-P: score_xy = J - LZ(x), score_yx = J - LZ(y); smaller wins.
CausalVerdict lz_penalty(const SymbolicSequence& x, const SymbolicSequence& y,
                         const CausalConfig& config = {});

// Per-sequence quantities every model needs. Build once and reuse when one
// sequence is paired against many (reference or candidate runs).
class SequenceProfile {
 public:
  explicit SequenceProfile(SymbolicSequence sequence);

  const SymbolicSequence& sequence() const noexcept { return sequence_; }
  const EtcResult& etc() const noexcept { return etc_; }
  LzCount lz() const noexcept { return lz_; }

 private:
  SymbolicSequence sequence_;
  EtcResult etc_;
  LzCount lz_;
};

// Evaluates `models` in order, sharing the cross-compression work between
// ETC-P and ETC-E. Profiles over different alphabets are rebuilt on the
// union alphabet first.
std::vector<CausalVerdict> evaluate_models(const SequenceProfile& x, const SequenceProfile& y,
                                           std::span<const Model> models,
                                           const CausalConfig& config = {});

std::vector<CausalVerdict> evaluate_models(const SymbolicSequence& x, const SymbolicSequence& y,
                                           std::span<const Model> models,
                                           const CausalConfig& config = {});

std::string_view to_string(Model m);
std::string_view to_string(Direction d);
std::optional<Model> parse_model(std::string_view name);
std::optional<Direction> parse_direction(std::string_view text);

// {model, direction, score_xy, score_yx, strength}
nlohmann::json to_json(const CausalVerdict& v);

}  // namespace cfgcausal
