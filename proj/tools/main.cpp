#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cfgcausal/causal.hpp"
#include "cfgcausal/error.hpp"
#include "cfgcausal/eval.hpp"
#include "cfgcausal/format.hpp"
#include "cfgcausal/parallel.hpp"
#include "cfgcausal/pipeline.hpp"
#include "cfgcausal/random.hpp"
#include "cfgcausal/sequence.hpp"
#include "cfgcausal/simulate.hpp"
#include "cfgcausal/stats.hpp"

namespace cc = cfgcausal;

namespace {

constexpr const char* kVersion = CFGCAUSAL_VERSION;

// Exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content) || !out.flush()) throw DataError("cannot write " + path);
  std::cerr << "wrote " << path << '\n';
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Effective configuration echoed into every output. Job count and output
// paths are left out so reruns compare byte for byte.
class Provenance {
 public:
  explicit Provenance(std::string command) : command_(std::move(command)) {}

  void set(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }

  std::string hash() const {
    std::string canonical = command_ + '\n';
    for (const auto& [k, v] : entries_) canonical += k + '=' + v + '\n';
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical)));
    return buf;
  }

  std::string header() const {
    std::string line = std::string("# cfgcausal ") + kVersion + ' ' + command_ + " config=" + hash();
    for (const auto& [k, v] : entries_) line += ' ' + k + '=' + v;
    return line + '\n';
  }

  nlohmann::json json() const {
    nlohmann::json flags = nlohmann::json::object();
    for (const auto& [k, v] : entries_) flags[k] = v;
    return {{"tool", "cfgcausal"}, {"version", kVersion}, {"command", command_},
            {"config_hash", hash()}, {"flags", flags}};
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

template <typename T>
std::string join(const std::vector<T>& items, auto&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + fmt(items[i]);
  return out;
}

struct ModelFlags {
  std::vector<std::string> models{"etc-p", "etc-e", "lz-p"};
  double threshold = 0.0;
  std::string joint_lz = "shared";
  std::string conditional = "firing";
  std::string efficacy_polarity = "higher";

  void attach(CLI::App* app) {
    app->add_option("--model,--models", models, "Models to run (etc-p, etc-e, lz-p)")
        ->delimiter(',')
        ->check(CLI::IsMember({"etc-p", "etc-e", "lz-p"}))
        ->capture_default_str();
    app->add_option("--threshold", threshold, "Undecided when |score difference| <= threshold")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app->add_option("--joint-lz", joint_lz, "Joint LZ for LZ-P: shared or direction-matched")
        ->check(CLI::IsMember({"shared", "direction-matched"}))
        ->capture_default_str();
    app->add_option("--conditional", conditional, "Conditional ETC cost: firing or all rules")
        ->check(CLI::IsMember({"firing", "all"}))
        ->capture_default_str();
    app->add_option("--efficacy-polarity", efficacy_polarity, "ETC-E winner: higher or lower")
        ->check(CLI::IsMember({"higher", "lower"}))
        ->capture_default_str();
  }

  std::vector<cc::Model> model_list() const {
    std::vector<cc::Model> out;
    for (const auto& name : models) out.push_back(*cc::parse_model(name));
    return out;
  }

  cc::CausalConfig config() const {
    cc::CausalConfig c;
    c.threshold = threshold;
    c.joint_lz = joint_lz == "shared" ? cc::JointLzMode::kShared : cc::JointLzMode::kDirectionMatched;
    c.conditional = conditional == "firing" ? cc::ConditionalCounting::kFiringRules
                                            : cc::ConditionalCounting::kAllRules;
    c.efficacy_polarity = efficacy_polarity == "higher" ? cc::EfficacyPolarity::kHigherWins
                                                        : cc::EfficacyPolarity::kLowerWins;
    return c;
  }

  void record(Provenance& p) const {
    p.set("models", join(models, [](const std::string& s) { return s; }));
    p.set("threshold", cc::format_double(threshold));
    p.set("joint_lz", joint_lz);
    p.set("conditional", conditional);
    p.set("efficacy_polarity", efficacy_polarity);
  }
};

// ---- battery evaluation shared by simulate and eval-report ----

struct BatteryRow {
  double phi = 0.0;
  cc::CausalVerdict verdict;
  cc::Direction truth = cc::Direction::kYtoX;
};

struct BatteryGroup {
  cc::Model model;
  double phi;
  std::size_t phi_index;
  std::vector<cc::CausalVerdict> verdicts;
  std::vector<cc::Direction> truths;
};

// Groups by (model, phi) in order of first appearance.
std::vector<BatteryGroup> group_rows(const std::vector<BatteryRow>& rows) {
  std::vector<BatteryGroup> groups;
  std::vector<double> phis;
  std::map<std::pair<int, std::size_t>, std::size_t> slot;
  for (const auto& r : rows) {
    auto phi_it = std::find(phis.begin(), phis.end(), r.phi);
    const std::size_t phi_index = static_cast<std::size_t>(phi_it - phis.begin());
    if (phi_it == phis.end()) phis.push_back(r.phi);
    const auto key = std::make_pair(static_cast<int>(r.verdict.model), phi_index);
    auto [it, fresh] = slot.try_emplace(key, groups.size());
    if (fresh) groups.push_back({r.verdict.model, r.phi, phi_index, {}, {}});
    groups[it->second].verdicts.push_back(r.verdict);
    groups[it->second].truths.push_back(r.truth);
  }
  return groups;
}

struct BatteryReport {
  nlohmann::json json;
  std::string curves_csv;
};

BatteryReport evaluate_battery(const std::vector<BatteryRow>& rows, std::uint64_t seed) {
  BatteryReport out;
  out.json = nlohmann::json::array();
  std::ostringstream csv;
  csv << "model,phi,rate,accuracy\n";
  for (const auto& g : group_rows(rows)) {
    cc::EvalOptions opts;
    opts.coin_seed = cc::child_seed(seed, 0x80000000u | static_cast<std::uint32_t>(g.model),
                                    static_cast<std::uint32_t>(g.phi_index));
    // Every benchmark trial has the same ground truth; score mirrored pairs too.
    opts.orientation_balanced = true;
    const auto report = cc::evaluate(g.verdicts, g.truths, opts);
    auto j = cc::to_json(report);
    j["model"] = std::string(cc::to_string(g.model));
    j["phi"] = g.phi;
    out.json.push_back(std::move(j));
    for (const auto& p : report.decision_rate_curve) {
      csv << cc::to_string(g.model) << ',' << cc::format_double(g.phi) << ','
          << cc::format_double(p.rate) << ',' << cc::format_double(p.accuracy) << '\n';
    }
  }
  out.curves_csv = csv.str();
  return out;
}

// ---- commands ----

int cmd_infer(const std::string& path, int bins, const ModelFlags& flags) {
  const auto pair = cc::parse_pair_file(read_file(path), bins);
  const auto models = flags.model_list();
  for (const auto& v : cc::evaluate_models(pair.x, pair.y, models, flags.config())) {
    std::cout << cc::to_json(v).dump() << '\n';
  }
  return 0;
}

struct SimulateFlags {
  std::vector<double> phis = cc::default_phi_grid();
  std::size_t trials = 1000;
  int bins = 2;
  std::uint64_t seed = 0;
  double a = 0.8;
  double b = 0.8;
  std::size_t length = 1000;
  double noise = 0.01;
  std::string out;
};

int cmd_simulate(const SimulateFlags& f, const ModelFlags& mf, unsigned jobs) {
  cc::BenchmarkSpec spec;
  spec.phis = f.phis;
  spec.trials_per_phi = f.trials;
  spec.bins = f.bins;
  spec.models = mf.model_list();
  spec.master_seed = f.seed;
  spec.base.a = f.a;
  spec.base.b = f.b;
  spec.base.n = f.length;
  spec.base.noise_intensity = f.noise;
  spec.causal = mf.config();
  spec.jobs = jobs;

  Provenance prov("simulate");
  prov.set("phis", join(f.phis, [](double v) { return cc::format_double(v); }));
  prov.set("trials", std::to_string(f.trials));
  prov.set("bins", std::to_string(f.bins));
  prov.set("seed", std::to_string(f.seed));
  prov.set("a", cc::format_double(f.a));
  prov.set("b", cc::format_double(f.b));
  prov.set("length", std::to_string(f.length));
  prov.set("noise", cc::format_double(f.noise));
  mf.record(prov);

  const auto records = cc::run_benchmark(spec);
  std::ostringstream csv;
  csv << prov.header();
  cc::write_benchmark_csv(csv, records);
  write_file(f.out + ".benchmark.csv", csv.str());

  std::vector<BatteryRow> rows;
  for (const auto& r : records) {
    for (const auto& v : r.verdicts) rows.push_back({r.phi, v, r.truth});
  }
  const auto report = evaluate_battery(rows, f.seed);
  nlohmann::json j{{"config", prov.json()}, {"results", report.json}};
  write_file(f.out + ".eval.json", j.dump(2) + '\n');
  write_file(f.out + ".curves.csv", prov.header() + report.curves_csv);
  return 0;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_number(const std::string& text, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw cc::FormatError("line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return v;
}

// key=value tokens of a '#' provenance line.
std::map<std::string, std::string> header_fields(const std::string& line) {
  std::map<std::string, std::string> out;
  std::istringstream in(line.substr(1));
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq != std::string::npos) out[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return out;
}

int cmd_eval_report(const std::string& path, std::optional<std::uint64_t> seed_flag,
                    std::optional<std::string> polarity_flag, const std::string& out) {
  std::istringstream in(read_file(path));
  std::string line;
  std::map<std::string, std::string> header;
  std::vector<BatteryRow> rows;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> raw;
  std::size_t line_no = 0;
  bool seen_columns = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (header.empty()) header = header_fields(line);
      continue;
    }
    if (!seen_columns) {
      if (line != "phi,trial,truth,model,direction,score_xy,score_yx,strength") {
        throw cc::FormatError("line " + std::to_string(line_no) + ": expected benchmark CSV columns");
      }
      seen_columns = true;
      continue;
    }
    raw.emplace_back(line_no, split(line, ','));
  }
  if (raw.empty()) throw cc::FormatError(path + ": no benchmark rows");

  const std::uint64_t seed =
      seed_flag ? *seed_flag : header.count("seed") ? std::stoull(header.at("seed")) : 0;
  const std::string polarity = polarity_flag ? *polarity_flag
                               : header.count("efficacy_polarity") ? header.at("efficacy_polarity")
                                                                   : "higher";
  if (polarity != "higher" && polarity != "lower") {
    throw cc::FormatError("unknown efficacy polarity '" + polarity + "'");
  }

  for (const auto& [no, f] : raw) {
    if (f.size() != 8) throw cc::FormatError("line " + std::to_string(no) + ": expected 8 fields");
    BatteryRow r;
    r.phi = parse_number(f[0], no);
    const auto truth = cc::parse_direction(f[2]);
    const auto model = cc::parse_model(f[3]);
    const auto direction = cc::parse_direction(f[4]);
    if (!truth || *truth == cc::Direction::kUndecided || !model || !direction) {
      throw cc::FormatError("line " + std::to_string(no) + ": bad truth, model or direction");
    }
    r.truth = *truth;
    r.verdict.model = *model;
    r.verdict.direction = *direction;
    r.verdict.score_xy = parse_number(f[5], no);
    r.verdict.score_yx = parse_number(f[6], no);
    r.verdict.strength = parse_number(f[7], no);
    r.verdict.lower_wins = *model != cc::Model::kEtcE || polarity == "lower";
    rows.push_back(r);
  }

  Provenance prov("eval-report");
  prov.set("input", path);
  prov.set("seed", std::to_string(seed));
  prov.set("efficacy_polarity", polarity);
  const auto report = evaluate_battery(rows, seed);
  nlohmann::json j{{"config", prov.json()}, {"results", report.json}};
  write_file(out + ".eval.json", j.dump(2) + '\n');
  write_file(out + ".curves.csv", prov.header() + report.curves_csv);
  return 0;
}

cc::SymbolicSequence single_record(const std::string& path) {
  const auto records = cc::parse_fasta(read_file(path));
  if (records.size() != 1) {
    throw DataError(path + ": expected exactly one record, found " + std::to_string(records.size()));
  }
  return cc::encode_nucleotides(records.front().body);
}

struct CohortFlags {
  std::string cohort;
  std::string manifest;
  std::string out;

  cc::CohortLoad load() const {
    const auto records = cc::parse_fasta(read_file(cohort));
    const auto groups = manifest.empty() ? cc::GroupManifest{} : cc::parse_manifest(read_file(manifest));
    return cc::encode_cohort(records, groups);
  }

  void record(Provenance& p) const {
    p.set("cohort", cohort);
    p.set("manifest", manifest.empty() ? "-" : manifest);
  }
};

void write_rejects(const std::string& path, const Provenance& prov,
                   const std::vector<cc::Reject>& rejects) {
  std::ostringstream csv;
  csv << prov.header() << "sequence_id,reason\n";
  for (const auto& r : rejects) csv << r.id << ',' << r.reason << '\n';
  write_file(path, csv.str());
}

int cmd_genome(const std::string& reference_path, const CohortFlags& cf, double min_proportion,
               const ModelFlags& mf, unsigned jobs) {
  const auto reference = single_record(reference_path);
  const auto reference_id = cc::parse_fasta(read_file(reference_path)).front().id;
  auto load = cf.load();

  Provenance prov("genome");
  prov.set("reference", reference_path);
  cf.record(prov);
  mf.record(prov);

  cc::PipelineOptions opts{mf.model_list(), mf.config(), jobs};
  const auto run = cc::run_reference_experiment(reference_id, reference, load.members, opts);
  for (const auto& id : run.skipped) {
    std::cerr << "skipped " << id << ": identical to reference\n";
    load.rejects.push_back({id, "identical to reference"});
  }

  std::ostringstream records;
  records << prov.header();
  cc::write_records_csv(records, run.records);
  write_file(cf.out + ".records.csv", records.str());

  const auto reports = cc::proportions(run.records);
  std::ostringstream props;
  props << prov.header();
  cc::write_proportions_csv(props, reports);
  write_file(cf.out + ".proportions.csv", props.str());
  write_rejects(cf.out + ".rejects.csv", prov, load.rejects);

  for (cc::Model m : opts.models) {
    std::cout << cc::to_string(m) << ": " << cc::groups_meeting(reports, m, min_proportion)
              << " group(s) with proportion >= " << cc::format_double(min_proportion) << '\n';
  }
  return 0;
}

struct CandidateFlags {
  std::string a;
  std::string b;
  double trim = 0.2;
  std::size_t iterations = 5000;
  double confidence = 0.95;
  std::uint64_t seed = 0;
};

int cmd_candidates(const CandidateFlags& f, const CohortFlags& cf, const ModelFlags& mf,
                   unsigned jobs) {
  const auto a = single_record(f.a);
  const auto b = single_record(f.b);
  auto load = cf.load();

  Provenance prov("candidates");
  prov.set("candidate_a", f.a);
  prov.set("candidate_b", f.b);
  cf.record(prov);
  prov.set("trim", cc::format_double(f.trim));
  prov.set("iterations", std::to_string(f.iterations));
  prov.set("confidence", cc::format_double(f.confidence));
  prov.set("seed", std::to_string(f.seed));
  mf.record(prov);

  cc::PipelineOptions opts{mf.model_list(), mf.config(), jobs};
  const auto run = cc::run_candidate_experiment(a, b, load.members, opts);
  for (const auto& id : run.skipped) {
    std::cerr << "skipped " << id << ": identical to a candidate\n";
    load.rejects.push_back({id, "identical to a candidate"});
  }

  std::ostringstream strengths;
  strengths << prov.header();
  cc::write_strengths_csv(strengths, run.pairs);
  write_file(cf.out + ".strengths.csv", strengths.str());

  const auto comparisons =
      cc::compare_candidates(run.pairs, {f.trim, f.iterations, f.confidence, f.seed});
  std::ostringstream csv;
  csv << prov.header() << "group,model,n,diff,ci_low,ci_high,trim,iterations,confidence\n";
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : comparisons) {
    const auto& t = c.comparison;
    csv << c.group << ',' << cc::to_string(c.model) << ',' << c.n << ',' << cc::format_double(t.diff)
        << ',' << cc::format_double(t.ci_low) << ',' << cc::format_double(t.ci_high) << ','
        << cc::format_double(t.trim) << ',' << t.iterations << ',' << cc::format_double(t.confidence)
        << '\n';
    auto j = cc::to_json(t);
    j["group"] = c.group;
    j["model"] = std::string(cc::to_string(c.model));
    j["n"] = c.n;
    results.push_back(std::move(j));
    const bool separated = t.ci_low > 0.0 || t.ci_high < 0.0;
    std::cout << c.group << ' ' << cc::to_string(c.model) << ": diff " << cc::format_double(t.diff)
              << " CI [" << cc::format_double(t.ci_low) << ", " << cc::format_double(t.ci_high)
              << "]" << (separated ? " excludes 0" : "") << '\n';
  }
  write_file(cf.out + ".comparison.csv", csv.str());
  nlohmann::json j{{"config", prov.json()}, {"comparisons", results}};
  write_file(cf.out + ".comparison.json", j.dump(2) + '\n');
  write_rejects(cf.out + ".rejects.csv", prov, load.rejects);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal direction between symbolic sequences from grammar-based compression"};
  app.set_version_flag("--version", std::string("cfgcausal ") + kVersion);
  app.require_subcommand(1);

  unsigned jobs = cc::default_jobs();
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads (default: logical cores)")
        ->check(CLI::Range(1u, 4096u));
  };

  ModelFlags model_flags;

  auto* infer = app.add_subcommand("infer", "Infer the causal direction for a two-line pair file");
  std::string pair_path;
  int discretize = 0;
  infer->add_option("pair-file", pair_path, "Two lines: x then y")->required();
  infer->add_option("--discretize,--bins", discretize, "Read reals and bin equi-width into this many bins")
      ->check(CLI::Range(2, 1 << 20));
  model_flags.attach(infer);

  auto* simulate = app.add_subcommand("simulate", "Run the coupled AR(1) benchmark");
  SimulateFlags sim;
  simulate->add_option("--phis", sim.phis, "Coupling values (default 0, 0.05, ..., 0.95)")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--trials", sim.trials, "Trials per coupling value")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--bins", sim.bins, "Equi-width bins")->check(CLI::Range(2, 1 << 20))->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
  simulate->add_option("--coef-a", sim.a, "Autoregression of x")->check(CLI::Range(-0.999999, 0.999999))->capture_default_str();
  simulate->add_option("--coef-b", sim.b, "Autoregression of y")->check(CLI::Range(-0.999999, 0.999999))->capture_default_str();
  simulate->add_option("--length", sim.length, "Series length")->check(CLI::Range(2, 100000000))->capture_default_str();
  simulate->add_option("--noise", sim.noise, "Noise intensity")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--out", sim.out, "Output prefix")->required();
  model_flags.attach(simulate);
  add_jobs(simulate);

  auto* eval_report = app.add_subcommand("eval-report", "Evaluation curves from a benchmark CSV");
  std::string eval_input;
  std::string eval_out;
  std::optional<std::uint64_t> eval_seed;
  std::optional<std::string> eval_polarity;
  eval_report->add_option("benchmark-csv", eval_input, "Output of simulate")->required();
  eval_report->add_option("--out", eval_out, "Output prefix")->required();
  eval_report->add_option("--seed", eval_seed, "Coin seed (default: the CSV header's seed)");
  eval_report->add_option("--efficacy-polarity", eval_polarity, "Default: the CSV header's value")
      ->check(CLI::IsMember({"higher", "lower"}));

  CohortFlags cohort;
  auto attach_cohort = [&](CLI::App* sub) {
    sub->add_option("--cohort", cohort.cohort, "Cohort FASTA")->required()->check(CLI::ExistingFile);
    sub->add_option("--manifest", cohort.manifest, "CSV sequence_id,group")->check(CLI::ExistingFile);
    sub->add_option("--out", cohort.out, "Output prefix")->required();
    model_flags.attach(sub);
    add_jobs(sub);
  };

  auto* genome = app.add_subcommand("genome", "Reference sequence against a cohort");
  std::string reference_path;
  double min_proportion = 0.05;
  genome->add_option("--reference", reference_path, "FASTA with one record")->required()->check(CLI::ExistingFile);
  genome->add_option("--min-proportion", min_proportion, "Reporting threshold per group")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  attach_cohort(genome);

  auto* candidates = app.add_subcommand("candidates", "Compare causal strength of two candidate sources");
  CandidateFlags cand;
  candidates->add_option("--candidate-a", cand.a, "FASTA with one record")->required()->check(CLI::ExistingFile);
  candidates->add_option("--candidate-b", cand.b, "FASTA with one record")->required()->check(CLI::ExistingFile);
  candidates->add_option("--trim", cand.trim, "Trimming fraction per tail")->check(CLI::Range(0.0, 0.49))->capture_default_str();
  candidates->add_option("--iterations", cand.iterations, "Bootstrap iterations")->check(CLI::PositiveNumber)->capture_default_str();
  candidates->add_option("--confidence", cand.confidence, "Confidence level")->check(CLI::Range(0.5, 0.9999))->capture_default_str();
  candidates->add_option("--seed", cand.seed, "Bootstrap seed")->capture_default_str();
  attach_cohort(candidates);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*infer) return cmd_infer(pair_path, discretize, model_flags);
    if (*simulate) return cmd_simulate(sim, model_flags, jobs);
    if (*eval_report) return cmd_eval_report(eval_input, eval_seed, eval_polarity, eval_out);
    if (*genome) return cmd_genome(reference_path, cohort, min_proportion, model_flags, jobs);
    if (*candidates) return cmd_candidates(cand, cohort, model_flags, jobs);
  } catch (const cc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
