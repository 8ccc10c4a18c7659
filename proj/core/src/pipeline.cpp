#include "cfgcausal/pipeline.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "cfgcausal/error.hpp"
#include "cfgcausal/parallel.hpp"
#include "cfgcausal/random.hpp"
#include "cfgcausal/format.hpp"

namespace cfgcausal {

namespace {

std::string_view trim_ws(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupManifest parse_manifest(std::string_view text) {
  GroupManifest manifest;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim_ws(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw FormatError("manifest line " + std::to_string(line_no) + ": expected 'sequence_id,group'");
    }
    const auto id = trim_ws(line.substr(0, comma));
    const auto group = trim_ws(line.substr(comma + 1));
    if (line_no == 1 && id == "sequence_id" && group == "group") continue;
    if (id.empty() || group.empty()) {
      throw FormatError("manifest line " + std::to_string(line_no) + ": empty field");
    }
    if (!manifest.emplace(std::string(id), std::string(group)).second) {
      throw FormatError("manifest line " + std::to_string(line_no) + ": duplicate id '" +
                        std::string(id) + "'");
    }
  }
  return manifest;
}

CohortLoad encode_cohort(std::span<const FastaRecord> records, const GroupManifest& manifest) {
  CohortLoad load;
  for (const auto& r : records) {
    try {
      auto seq = encode_nucleotides(r.body);
      const auto it = manifest.find(r.id);
      load.members.push_back(
          {r.id, it == manifest.end() ? std::string(kUnassignedGroup) : it->second, std::move(seq)});
    } catch (const Error& e) {
      load.rejects.push_back({r.id, e.what()});
    }
  }
  return load;
}

ReferenceRun run_reference_experiment(std::string_view reference_id,
                                      const SymbolicSequence& reference,
                                      std::span<const CohortMember> cohort,
                                      const PipelineOptions& options) {
  if (cohort.empty()) throw InvalidInput("cohort is empty");
  ReferenceRun run;
  std::vector<const CohortMember*> retained;
  for (const auto& m : cohort) {
    if (m.sequence == reference) {
      run.skipped.push_back(m.id);
    } else {
      retained.push_back(&m);
    }
  }
  if (retained.empty()) throw InvalidInput("no cohort member differs from the reference");

  Symbol alphabet = reference.alphabet_size();
  for (const auto* m : retained) alphabet = std::max(alphabet, m->sequence.alphabet_size());
  const SequenceProfile ref_profile(reference.with_alphabet(alphabet));

  run.records.resize(retained.size());
  parallel_for(retained.size(), options.jobs, [&](std::size_t i) {
    const auto& m = *retained[i];
    const SequenceProfile member(m.sequence.with_alphabet(alphabet));
    run.records[i] = {std::string(reference_id), m.id, m.group,
                      evaluate_models(ref_profile, member, options.models, options.causal)};
  });
  return run;
}

std::vector<ProportionReport> proportions(std::span<const PairRunRecord> records) {
  if (records.empty()) throw InvalidInput("no records");
  std::map<std::string, std::vector<ProportionReport>> by_group;
  for (const auto& r : records) {
    auto& reports = by_group[r.group];
    if (reports.empty()) {
      for (const auto& v : r.verdicts) reports.push_back({r.group, v.model, 0, 0, 0.0});
    }
    if (reports.size() != r.verdicts.size()) {
      throw InvalidInput("records disagree on the model set");
    }
    for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
      if (reports[k].model != r.verdicts[k].model) throw InvalidInput("records disagree on model order");
      ++reports[k].n;
      if (r.verdicts[k].direction == Direction::kXtoY) ++reports[k].expected;
    }
  }
  std::vector<ProportionReport> out;
  for (auto& [group, reports] : by_group) {
    for (auto& rep : reports) {
      rep.proportion = static_cast<double>(rep.expected) / static_cast<double>(rep.n);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::size_t groups_meeting(std::span<const ProportionReport> reports, Model model,
                           double min_proportion) {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [&](const auto& r) {
    return r.model == model && r.proportion >= min_proportion;
  }));
}

CandidateRun run_candidate_experiment(const SymbolicSequence& candidate_a,
                                      const SymbolicSequence& candidate_b,
                                      std::span<const CohortMember> cohort,
                                      const PipelineOptions& options) {
  if (candidate_a == candidate_b) throw InvalidInput("candidate sequences are identical");
  CandidateRun run;
  std::vector<const CohortMember*> retained;
  for (const auto& m : cohort) {
    if (m.sequence == candidate_a || m.sequence == candidate_b) {
      run.skipped.push_back(m.id);
    } else {
      retained.push_back(&m);
    }
  }

  Symbol alphabet = std::max(candidate_a.alphabet_size(), candidate_b.alphabet_size());
  for (const auto* m : retained) alphabet = std::max(alphabet, m->sequence.alphabet_size());
  const SequenceProfile profile_a(candidate_a.with_alphabet(alphabet));
  const SequenceProfile profile_b(candidate_b.with_alphabet(alphabet));

  std::vector<std::vector<StrengthPair>> per_member(retained.size());
  parallel_for(retained.size(), options.jobs, [&](std::size_t i) {
    const auto& m = *retained[i];
    const SequenceProfile member(m.sequence.with_alphabet(alphabet));
    const auto va = evaluate_models(profile_a, member, options.models, options.causal);
    const auto vb = evaluate_models(profile_b, member, options.models, options.causal);
    for (std::size_t k = 0; k < options.models.size(); ++k) {
      per_member[i].push_back({m.id, m.group, options.models[k], va[k].strength, vb[k].strength});
    }
  });
  for (auto& v : per_member) {
    for (auto& p : v) run.pairs.push_back(std::move(p));
  }
  return run;
}

std::vector<CandidateComparison> compare_candidates(std::span<const StrengthPair> pairs,
                                                    const ComparisonOptions& options) {
  // group -> model -> (a strengths, b strengths); models in first-seen order.
  std::map<std::string, std::vector<std::pair<Model, std::pair<std::vector<double>, std::vector<double>>>>>
      cells;
  for (const auto& p : pairs) {
    auto& models = cells[p.group];
    auto it = std::find_if(models.begin(), models.end(), [&](const auto& c) { return c.first == p.model; });
    if (it == models.end()) {
      models.push_back({p.model, {}});
      it = models.end() - 1;
    }
    it->second.first.push_back(p.strength_a);
    it->second.second.push_back(p.strength_b);
  }

  std::vector<CandidateComparison> out;
  std::uint32_t group_index = 0;
  for (const auto& [group, models] : cells) {
    for (const auto& [model, columns] : models) {
      const auto& [a, b] = columns;
      if (a.size() < 4) continue;
      const auto seed = child_seed(options.seed, group_index, static_cast<std::uint32_t>(model));
      try {
        out.push_back({group, model, a.size(),
                       yuen_bootstrap_t(a, b, options.trim, options.iterations, options.confidence, seed)});
      } catch (const DegenerateVariance&) {
      }
    }
    ++group_index;
  }
  return out;
}

void write_records_csv(std::ostream& out, std::span<const PairRunRecord> records) {
  out << "reference_id,sequence_id,group,model,direction,score_xy,score_yx,strength\n";
  for (const auto& r : records) {
    for (const auto& v : r.verdicts) {
      out << r.reference_id << ',' << r.sequence_id << ',' << r.group << ',' << to_string(v.model)
          << ',' << to_string(v.direction) << ',' << format_double(v.score_xy) << ','
          << format_double(v.score_yx) << ',' << format_double(v.strength) << '\n';
    }
  }
}

void write_proportions_csv(std::ostream& out, std::span<const ProportionReport> reports) {
  out << "group,model,n,expected,proportion\n";
  for (const auto& r : reports) {
    out << r.group << ',' << to_string(r.model) << ',' << r.n << ',' << r.expected << ','
        << format_double(r.proportion) << '\n';
  }
}

void write_strengths_csv(std::ostream& out, std::span<const StrengthPair> pairs) {
  out << "sequence_id,group,model,strength_a,strength_b\n";
  for (const auto& p : pairs) {
    out << p.sequence_id << ',' << p.group << ',' << to_string(p.model) << ','
        << format_double(p.strength_a) << ',' << format_double(p.strength_b) << '\n';
  }
}

}  // namespace cfgcausal
