#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cfgcausal/error.hpp"
#include "cfgcausal/pipeline.hpp"

using namespace cfgcausal;

namespace {

std::string random_dna(std::mt19937_64& rng, std::size_t n) {
  std::string s(n, 'A');
  for (auto& c : s) c = "ACGT"[rng() % 4];
  return s;
}

std::vector<CohortMember> cohort_of(std::mt19937_64& rng, std::size_t count, std::size_t len) {
  std::vector<CohortMember> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({"s" + std::to_string(i), i % 2 ? "odd" : "even",
                   encode_nucleotides(random_dna(rng, len))});
  }
  return out;
}

PairRunRecord record(std::string group, Direction d) {
  CausalVerdict v;
  v.model = Model::kLzP;
  v.direction = d;
  return {"ref", "id", std::move(group), {v}};
}

}  // namespace

TEST(Manifest, HeaderCommentsAndDuplicates) {
  const auto m = parse_manifest("sequence_id,group\n# note\ns1,alpha\n\ns2, beta\n");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at("s1"), "alpha");
  EXPECT_EQ(m.at("s2"), "beta");
  EXPECT_THROW(parse_manifest("s1,a\ns1,b\n"), FormatError);
  EXPECT_THROW(parse_manifest("s1\n"), FormatError);
}

TEST(Cohort, RejectsAmbiguousRecordsAndDefaultsGroup) {
  const std::vector<FastaRecord> records{{"a", "ACGT"}, {"b", "ACNT"}, {"c", "GGCA"}};
  GroupManifest manifest{{"a", "g1"}};
  const auto load = encode_cohort(records, manifest);
  ASSERT_EQ(load.members.size(), 2u);
  EXPECT_EQ(load.members[0].group, "g1");
  EXPECT_EQ(load.members[1].group, kUnassignedGroup);
  ASSERT_EQ(load.rejects.size(), 1u);
  EXPECT_EQ(load.rejects[0].id, "b");
  EXPECT_FALSE(load.rejects[0].reason.empty());
}

TEST(ReferenceRun, OneRecordPerMember) {
  std::mt19937_64 rng(51);
  const auto ref = encode_nucleotides(random_dna(rng, 200));
  const auto cohort = cohort_of(rng, 1, 200);
  const auto run = run_reference_experiment("ref", ref, cohort, {});
  ASSERT_EQ(run.records.size(), 1u);
  EXPECT_EQ(run.records[0].verdicts.size(), 3u);
  EXPECT_EQ(run.records[0].reference_id, "ref");
}

TEST(ReferenceRun, SkipsCopiesOfReference) {
  std::mt19937_64 rng(52);
  auto cohort = cohort_of(rng, 3, 100);
  const auto ref = cohort[1].sequence;
  const auto run = run_reference_experiment("ref", ref, cohort, {});
  EXPECT_EQ(run.records.size(), 2u);
  EXPECT_EQ(run.skipped, std::vector<std::string>{"s1"});
  EXPECT_THROW(run_reference_experiment("ref", ref, std::span(cohort).subspan(1, 1), {}),
               InvalidInput);
  EXPECT_THROW(run_reference_experiment("ref", ref, {}, {}), InvalidInput);
}

TEST(ReferenceRun, JobCountDoesNotChangeOutput) {
  std::mt19937_64 rng(53);
  const auto ref = encode_nucleotides(random_dna(rng, 300));
  const auto cohort = cohort_of(rng, 12, 300);
  PipelineOptions serial;
  PipelineOptions parallel;
  parallel.jobs = 4;
  std::ostringstream a, b;
  write_records_csv(a, run_reference_experiment("r", ref, cohort, serial).records);
  write_records_csv(b, run_reference_experiment("r", ref, cohort, parallel).records);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Proportions, Fixtures) {
  std::vector<PairRunRecord> records{record("g", Direction::kXtoY), record("g", Direction::kXtoY),
                                     record("g", Direction::kXtoY), record("g", Direction::kYtoX),
                                     record("h", Direction::kUndecided)};
  const auto reports = proportions(records);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].group, "g");
  EXPECT_EQ(reports[0].n, 4u);
  EXPECT_EQ(reports[0].expected, 3u);
  EXPECT_EQ(reports[0].proportion, 0.75);
  EXPECT_EQ(reports[1].proportion, 0.0);
  EXPECT_EQ(groups_meeting(reports, Model::kLzP, 0.5), 1u);
  EXPECT_EQ(groups_meeting(reports, Model::kEtcP, 0.5), 0u);

  std::vector<PairRunRecord> all{record("g", Direction::kXtoY), record("g", Direction::kXtoY)};
  EXPECT_EQ(proportions(all)[0].proportion, 1.0);
}

TEST(Candidates, ShapeAndErrors) {
  std::mt19937_64 rng(54);
  const auto a = encode_nucleotides(random_dna(rng, 150));
  const auto b = encode_nucleotides(random_dna(rng, 150));
  const auto cohort = cohort_of(rng, 5, 150);
  const auto run = run_candidate_experiment(a, b, cohort, {});
  ASSERT_EQ(run.pairs.size(), 15u);
  EXPECT_EQ(run.pairs[0].sequence_id, "s0");
  EXPECT_EQ(run.pairs[0].model, Model::kEtcP);
  EXPECT_EQ(run.pairs[2].model, Model::kLzP);
  for (const auto& p : run.pairs) {
    EXPECT_GE(p.strength_a, 0.0);
    EXPECT_GE(p.strength_b, 0.0);
  }
  EXPECT_THROW(run_candidate_experiment(a, a, cohort, {}), InvalidInput);
}

TEST(Candidates, ComparisonPerGroupAndModel) {
  std::vector<StrengthPair> pairs;
  for (int i = 0; i < 12; ++i) {
    pairs.push_back({"s" + std::to_string(i), "g", Model::kLzP, 10.0 + i % 5, 1.0 + i % 3});
  }
  pairs.push_back({"t0", "tiny", Model::kLzP, 1.0, 2.0});
  ComparisonOptions opts;
  opts.iterations = 500;
  const auto cmp = compare_candidates(pairs, opts);
  ASSERT_EQ(cmp.size(), 1u);
  EXPECT_EQ(cmp[0].group, "g");
  EXPECT_EQ(cmp[0].n, 12u);
  EXPECT_GT(cmp[0].comparison.ci_low, 0.0);
  const auto again = compare_candidates(pairs, opts);
  EXPECT_EQ(again[0].comparison.ci_low, cmp[0].comparison.ci_low);
}
