#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfgcausal/causal.hpp"
#include "cfgcausal/sequence.hpp"
#include "cfgcausal/stats.hpp"

namespace cfgcausal {

struct CohortMember {
  std::string id;
  std::string group;
  SymbolicSequence sequence;
};

struct Reject {
  std::string id;
  std::string reason;
};

// sequence_id -> group
using GroupManifest = std::map<std::string, std::string, std::less<>>;

inline constexpr std::string_view kUnassignedGroup = "unassigned";

// CSV "sequence_id,group". A first line reading exactly sequence_id,group is
// treated as a header; blank and '#' lines are skipped.
GroupManifest parse_manifest(std::string_view text);

struct CohortLoad {
  std::vector<CohortMember> members;
  std::vector<Reject> rejects;
};

// Nucleotide-encodes each record. Records that fail encoding are listed as
// rejects instead of aborting; ids missing from the manifest get
// kUnassignedGroup.
CohortLoad encode_cohort(std::span<const FastaRecord> records, const GroupManifest& manifest);

struct PipelineOptions {
  std::vector<Model> models{std::begin(kAllModels), std::end(kAllModels)};
  CausalConfig causal;
  unsigned jobs = 1;
};

struct PairRunRecord {
  std::string reference_id;
  std::string sequence_id;
  std::string group;
  std::vector<CausalVerdict> verdicts;  // one per PipelineOptions::models entry
};

struct ReferenceRun {
  std::vector<PairRunRecord> records;
  // Cohort ids equal to the reference, which the models cannot compare.
  std::vector<std::string> skipped;
};

// Pairs x = reference with y = each cohort member; the expected direction is
// x -> y. Records keep cohort order. Throws InvalidInput for an empty cohort
// or when every member is skipped.
ReferenceRun run_reference_experiment(std::string_view reference_id,
                                      const SymbolicSequence& reference,
                                      std::span<const CohortMember> cohort,
                                      const PipelineOptions& options);

struct ProportionReport {
  std::string group;
  Model model = Model::kLzP;
  std::size_t n = 0;
  std::size_t expected = 0;  // verdicts equal to x -> y; Undecided never counts
  double proportion = 0.0;
};

// One report per (group, model), groups sorted by name and models in the
// records' verdict order.
std::vector<ProportionReport> proportions(std::span<const PairRunRecord> records);

// Number of groups whose proportion for `model` is at least `min_proportion`.
std::size_t groups_meeting(std::span<const ProportionReport> reports, Model model,
                           double min_proportion);

struct StrengthPair {
  std::string sequence_id;
  std::string group;
  Model model = Model::kLzP;
  double strength_a = 0.0;  // x = candidate a, y = sequence
  double strength_b = 0.0;  // x = candidate b, y = sequence
};

struct CandidateRun {
  std::vector<StrengthPair> pairs;  // cohort order, then model order
  std::vector<std::string> skipped;  // members identical to a candidate
};

// Causal strength of every cohort member against both candidates; directions
// are ignored. Throws InvalidInput when the candidates are identical.
CandidateRun run_candidate_experiment(const SymbolicSequence& candidate_a,
                                      const SymbolicSequence& candidate_b,
                                      std::span<const CohortMember> cohort,
                                      const PipelineOptions& options);

struct CandidateComparison {
  std::string group;
  Model model = Model::kLzP;
  std::size_t n = 0;
  TrimmedComparison comparison;  // strength_a - strength_b
};

struct ComparisonOptions {
  double trim = 0.2;
  std::size_t iterations = 5000;
  double confidence = 0.95;
  std::uint64_t seed = 0;
};

// yuen_bootstrap_t per (group, model) on strength_a against strength_b. Each
// cell gets its own child seed. Groups with fewer than 4 members or zero
// spread in both columns are left out of the result.
std::vector<CandidateComparison> compare_candidates(std::span<const StrengthPair> pairs,
                                                    const ComparisonOptions& options);

// reference_id,sequence_id,group,model,direction,score_xy,score_yx,strength
void write_records_csv(std::ostream& out, std::span<const PairRunRecord> records);
// group,model,n,expected,proportion
void write_proportions_csv(std::ostream& out, std::span<const ProportionReport> reports);
// sequence_id,group,model,strength_a,strength_b
void write_strengths_csv(std::ostream& out, std::span<const StrengthPair> pairs);

}  // namespace cfgcausal
