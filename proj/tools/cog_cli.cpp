// Copyright 2026 The CoG Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 provider
// failure, 3 data error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cog/corpus.hpp"
#include "cog/gateway.hpp"
#include "cog/gateway/http_provider.hpp"
#include "cog/gateway/mock_provider.hpp"
#include "cog/harness.hpp"
#include "cog/metrics.hpp"
#include "cog/metrics/remote_scorer.hpp"
#include "cog/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using namespace cog;

// Flags shared by every subcommand. Unset optionals leave the config value.
struct Common {
  std::string config_path;
  std::string mock_script;
  std::optional<int> parallelism;
  std::optional<std::uint64_t> rng_seed;
  std::string endpoint;
  std::string scorer_endpoint;
};

struct SeedInput {
  std::string path;
  std::string format;  // empty: by extension
  std::string source;  // empty: file stem
  std::string question_field = "question";
  std::string answer_field = "answer";
  std::string id_field = "id";
};

void add_seed_flags(CLI::App* cmd, SeedInput& in, bool required = true) {
  auto* opt = cmd->add_option("--seeds", in.path, "Seed corpus (.jsonl or .csv)");
  if (required) opt->required();
  cmd->add_option("--format", in.format, "Seed format: jsonl | csv (default: by extension)");
  cmd->add_option("--source", in.source, "Source label for synthesized ids (default: file stem)");
  cmd->add_option("--question-field", in.question_field, "Question field or column name");
  cmd->add_option("--answer-field", in.answer_field, "Answer field or column name");
  cmd->add_option("--id-field", in.id_field, "Id field or column name");
}

std::vector<QAPair> load_seeds(const SeedInput& in) {
  const fs::path p(in.path);
  const auto format = corpus::parse_seed_format(
      !in.format.empty() ? in.format : (p.extension() == ".csv" ? "csv" : "jsonl"));
  const auto label = in.source.empty() ? p.stem().string() : in.source;
  const auto result = corpus::ingest_seed(in.path, format, label, {in.question_field, in.answer_field, in.id_field});
  for (const auto& r : result.rejects)
    std::cerr << "warning: " << in.path << ":" << r.line << ": skipped: " << r.reason << "\n";
  if (result.pairs.empty()) throw DataError(in.path + ": no usable QA pairs");
  return result.pairs;
}

harness::Config load_config(const Common& c) {
  harness::Config cfg;
  if (!c.config_path.empty()) cfg.load_file(c.config_path);
  cfg.apply_env();
  if (c.parallelism) cfg.set("parallelism", std::to_string(*c.parallelism));
  if (!c.endpoint.empty()) cfg.set("provider.endpoint", c.endpoint);
  if (!c.scorer_endpoint.empty()) cfg.set("scorer.endpoint", c.scorer_endpoint);
  return cfg;
}

int positive(const harness::Config& cfg, const std::string& key, long long fallback) {
  const auto v = cfg.get_int(key, fallback);
  if (v < 1) throw UsageError(key + " must be >= 1");
  return static_cast<int>(v);
}

std::shared_ptr<gateway::Provider> make_provider(const Common& c, const harness::Config& cfg) {
  if (!c.mock_script.empty()) return gateway::MockProvider::load(c.mock_script);
  const auto endpoint = cfg.get("provider.endpoint");
  if (!endpoint) throw UsageError("no provider endpoint: set provider.endpoint or pass --mock-script");
  const char* key = std::getenv(gateway::kApiKeyEnv);
  if (key == nullptr || *key == '\0')
    throw ProviderError(ProviderError::Kind::kCredentialMissing,
                        std::string("credential missing: set ") + gateway::kApiKeyEnv);
  return gateway::HttpChatProvider::from_env(*endpoint,
                                             std::chrono::seconds(positive(cfg, "provider.timeout_s", 60)));
}

gateway::GatewayOptions gateway_options(const Common& c, const harness::Config& cfg) {
  gateway::GatewayOptions o;
  o.retry.max_attempts = positive(cfg, "retry.max_attempts", 3);
  o.retry.base_delay = std::chrono::milliseconds(cfg.get_int("retry.base_delay_ms", 500));
  o.max_in_flight = static_cast<std::size_t>(positive(cfg, "parallelism", 8));
  o.jitter_seed = c.rng_seed.value_or(0);
  return o;
}

pipeline::CogConfig cog_config(const Common& c, const harness::Config& cfg) {
  pipeline::CogConfig k;
  k.paraphrase_model = cfg.get_or("model.paraphrase", k.paraphrase_model);
  k.answer_model = cfg.get_or("model.answer", k.answer_model);
  k.rank_model = cfg.get_or("model.rank", k.rank_model);
  k.parallelism = static_cast<std::size_t>(positive(cfg, "parallelism", 4));
  k.max_tokens = positive(cfg, "cog.max_tokens", k.max_tokens);
  if (const auto p = cfg.get("cog.dont_know_policy")) k.dont_know_policy = pipeline::parse_dont_know_policy(*p);
  k.rng_seed = c.rng_seed.value_or(0);
  return k;
}

std::vector<metrics::SimilarityBackend> make_backends(std::vector<std::string> names, const harness::Config& cfg) {
  if (names.empty()) names = {"rouge-l"};
  std::vector<metrics::SimilarityBackend> out;
  for (const auto& n : names) {
    const auto info = metrics::backend_info(n);
    if (info.kind == metrics::BackendInfo::Kind::kBuiltin) {
      out.push_back(metrics::rouge_backend());
    } else {
      out.push_back(metrics::remote_backend(n, cfg.get_or("scorer.endpoint", ""),
                                            static_cast<std::size_t>(positive(cfg, "scorer.batch_cap", 256))));
    }
  }
  return out;
}

void report_warnings(const std::vector<pipeline::PipelineWarning>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w.seed_id << " [" << w.stage << "]: " << w.message << "\n";
}

json warnings_json(const std::vector<pipeline::PipelineWarning>& warnings) {
  json out = json::array();
  for (const auto& w : warnings) out.push_back({{"seed_id", w.seed_id}, {"stage", w.stage}, {"message", w.message}});
  return out;
}

// A run where the model contributed nothing is a provider failure, not a result.
void require_some_output(bool produced, const std::vector<pipeline::PipelineWarning>& warnings) {
  if (!produced && !warnings.empty())
    throw ProviderError(ProviderError::Kind::kUnreachable, "every provider request failed: " + warnings.front().message);
}

// --- subcommands ---------------------------------------------------------

struct CogFlags {
  int n_paraphrases = 4;
  bool no_shorten = false;
  std::string dont_know_policy;
};

void add_cog_flags(CLI::App* cmd, CogFlags& f) {
  cmd->add_option("--n-paraphrases", f.n_paraphrases, "Paraphrases per seed")->check(CLI::Range(1, 4));
  cmd->add_flag("--no-shorten", f.no_shorten, "Rank the preliminary answers without shortening");
  cmd->add_option("--dont-know-policy", f.dont_know_policy, "fallback-to-original | drop-variant");
}

void apply_cog_flags(const CogFlags& f, pipeline::CogConfig& k) {
  k.n_paraphrases = f.n_paraphrases;
  k.shorten_answers = !f.no_shorten;
  if (!f.dont_know_policy.empty()) k.dont_know_policy = pipeline::parse_dont_know_policy(f.dont_know_policy);
  k.validate();
}

int run_paraphrase(const Common& c, const SeedInput& in, const CogFlags& f, const std::string& out) {
  const auto cfg = load_config(c);
  auto k = cog_config(c, cfg);
  apply_cog_flags(f, k);
  const auto seeds = load_seeds(in);
  gateway::Gateway gw(make_provider(c, cfg), gateway_options(c, cfg));
  pipeline::Pipeline chain(gw, k);
  std::vector<json> rows;
  std::vector<pipeline::PipelineWarning> warnings;
  for (const auto& seed : seeds) {
    auto batch = chain.generate_paraphrases(seed);
    for (const auto& p : batch.paraphrases)
      rows.push_back({{"seed_id", seed.id}, {"technique", code(p.technique)}, {"question", p.question}});
    warnings.insert(warnings.end(), batch.warnings.begin(), batch.warnings.end());
  }
  report_warnings(warnings);
  require_some_output(!rows.empty(), warnings);
  write_jsonl(out, rows);
  std::cout << rows.size() << " paraphrases written to " << out << "\n";
  return 0;
}

int run_cog(const Common& c, const SeedInput& in, const CogFlags& f, const std::string& out) {
  const auto cfg = load_config(c);
  auto k = cog_config(c, cfg);
  apply_cog_flags(f, k);
  const auto seeds = load_seeds(in);
  gateway::Gateway gw(make_provider(c, cfg), gateway_options(c, cfg));
  const auto run = pipeline::Pipeline(gw, k).run_cog(seeds);
  report_warnings(run.warnings);
  std::size_t variants = 0;
  for (const auto& s : run.sets) variants += s.variants.size();
  require_some_output(variants > run.sets.size(), run.warnings);
  write_expanded_file(out, run.sets);
  std::cout << run.sets.size() << " expanded sets (" << variants << " variants) written to " << out << "\n";
  return 0;
}

int run_eval(harness::EvalMode mode, const Common& c, const SeedInput& in, const CogFlags& f,
             const std::vector<std::string>& backend_names, const std::string& out_root, const std::string& baseline) {
  const auto cfg = load_config(c);
  harness::EvalRunSpec spec;
  spec.mode = mode;
  spec.seeds = in.path;
  spec.cog = cog_config(c, cfg);
  apply_cog_flags(f, spec.cog);
  spec.backends = backend_names.empty() ? std::vector<std::string>{"rouge-l"} : backend_names;
  spec.output_dir = out_root;
  spec.rng_seed = c.rng_seed.value_or(0);
  const auto backends = make_backends(spec.backends, cfg);
  std::optional<std::map<std::string, ConsistencyReport>> before_reports;
  if (!baseline.empty()) before_reports = harness::read_reports(baseline);

  const auto seeds = load_seeds(in);
  gateway::Gateway gw(make_provider(c, cfg), gateway_options(c, cfg));
  const auto result = mode == harness::EvalMode::kBeforeCog ? harness::run_before(seeds, spec, gw, backends)
                                                            : harness::run_after(seeds, spec, gw, backends);
  report_warnings(result.warnings);
  bool produced = false;
  if (mode == harness::EvalMode::kBeforeCog) {
    for (const auto& g : result.groups) produced |= !g.answers.empty();
  } else {
    for (const auto& s : result.sets) produced |= s.variants.size() > 1;
  }
  require_some_output(produced, result.warnings);

  const auto dir = harness::make_run_dir(out_root, to_string(mode));
  harness::write_json(dir / "reports.json", harness::reports_json(result.reports));
  harness::write_json(dir / "manifest.json", harness::run_manifest(spec));
  harness::write_json(dir / "warnings.json", warnings_json(result.warnings));
  if (mode == harness::EvalMode::kAfterCog) write_expanded_file((dir / "expanded.jsonl").string(), result.sets);
  const auto table = mode == harness::EvalMode::kBeforeCog
                         ? harness::render_table(spec.cog.answer_model, result.reports, {})
                         : harness::render_table(spec.cog.answer_model, before_reports.value_or(decltype(result.reports){}),
                                                 result.reports);
  std::ofstream(dir / "table.txt") << table;
  std::cout << table << "run directory: " << dir.string() << "\n";
  return 0;
}

int run_emit(const std::string& expanded, const std::string& out) {
  const auto summary = corpus::emit_finetune_corpus(read_expanded_file(expanded), out);
  std::cout << summary.records << " records written to " << out << " (" << summary.dont_know_fallbacks
            << " dont-know fallbacks, " << summary.parse_failure_fallbacks << " parse-failure fallbacks)\n";
  return 0;
}

int run_split(const Common& c, const SeedInput& in, double fraction, const std::string& out) {
  const auto s = corpus::split(load_seeds(in), {fraction, c.rng_seed.value_or(0)});
  fs::create_directories(out);
  write_seed_file((fs::path(out) / "train.jsonl").string(), s.train);
  write_seed_file((fs::path(out) / "validation.jsonl").string(), s.validation);
  std::cout << "train " << s.train.size() << ", validation " << s.validation.size() << " written to " << out << "\n";
  return 0;
}

// "name=value" pairs from repeatable flags.
std::map<std::string, std::string> key_values(const std::vector<std::string>& items, const std::string& flag) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError(flag + " expects NAME=VALUE, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

int run_compose(const Common& c, const SeedInput& small, const std::vector<std::string>& source_flags,
                const std::vector<std::string>& count_flags, const std::string& out) {
  corpus::LargeRecipe recipe;
  for (const auto& [name, value] : key_values(count_flags, "--count")) {
    std::size_t n = 0;
    try {
      n = std::stoul(value);
    } catch (const std::exception&) {
      throw UsageError("--count " + name + ": not a number: " + value);
    }
    auto it = std::find_if(recipe.counts.begin(), recipe.counts.end(), [&](const auto& p) { return p.first == name; });
    if (it == recipe.counts.end()) {
      recipe.counts.emplace_back(name, n);
    } else {
      it->second = n;
    }
  }
  std::map<std::string, std::vector<QAPair>> sources;
  for (const auto& [name, path] : key_values(source_flags, "--source-file")) {
    SeedInput in;
    in.path = path;
    in.source = name;
    sources[name] = load_seeds(in);
  }
  const auto composed = corpus::compose_large(load_seeds(small), sources, recipe, c.rng_seed.value_or(0));
  write_seed_file(out, composed.train);
  std::cout << composed.train.size() << " pairs written to " << out << "\n";
  return 0;
}

int run_adversarial(const SeedInput& in, const std::string& jailbreaks, const std::string& out) {
  const auto attacks = corpus::load_attacks(jailbreaks);
  std::vector<json> rows;
  for (const auto& seed : load_seeds(in)) {
    for (const auto& a : corpus::adversarialize(seed.question, attacks))
      rows.push_back({{"seed_id", seed.id}, {"attack", a.label}, {"question", a.question}, {"answer", seed.answer}});
  }
  write_jsonl(out, rows);
  std::cout << rows.size() << " adversarial questions written to " << out << "\n";
  return 0;
}

std::string number(const std::optional<double>& v) {
  if (!v) return "undefined";
  std::ostringstream s;
  s.precision(6);
  s << *v;
  return s.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DataError("malformed JSON in " + path + ": " + e.what());
  }
}

int run_kappa(const std::string& ratings) {
  const auto r = harness::load_ratings(ratings);
  const auto report = harness::alignment_report({}, r);
  std::cout << "fleiss_kappa " << number(report.fleiss_kappa) << " (" << report.items << " items, " << report.raters
            << " raters)\n";
  return 0;
}

int run_spearman(const std::vector<double>& x, const std::vector<double>& y) {
  std::cout << "spearman_rho " << number(metrics::spearman_rho(x, y)) << "\n";
  return 0;
}

int run_cons_acc(const std::string& labels_path) {
  std::vector<std::vector<bool>> groups;
  try {
    groups = read_json_file(labels_path).get<std::vector<std::vector<bool>>>();
  } catch (const json::exception& e) {
    throw DataError(labels_path + ": expected an array of arrays of booleans: " + e.what());
  }
  const auto r = metrics::consistent_accuracy(groups);
  std::cout << "accuracy " << number(r.accuracy) << "\nconsistently_accurate_pairs " << number(r.consistent_pair_fraction)
            << "\n";
  return 0;
}

int run_alignment(const std::string& ratings, const std::string& scores_path) {
  std::map<std::string, std::vector<double>> scores;
  try {
    scores = read_json_file(scores_path).get<std::map<std::string, std::vector<double>>>();
  } catch (const json::exception& e) {
    throw DataError(scores_path + ": expected {backend: [scores...]}: " + e.what());
  }
  std::cout << harness::to_json(harness::alignment_report(scores, harness::load_ratings(ratings))).dump(2) << "\n";
  return 0;
}

int run_score(const Common& c, const std::string& backend, const std::string& a, const std::string& b) {
  const auto cfg = load_config(c);
  const auto backends = make_backends({backend}, cfg);
  const auto s = backends.front().scorer->score({{a, b}});
  std::cout << backend << " " << number(s.at(0)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain-of-guidance consistency toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Common common;
  app.add_option("--config", common.config_path, "Config file (key = value lines)");
  app.add_option("--mock-script", common.mock_script, "Use the scripted mock provider instead of HTTP");
  app.add_option("--parallelism", common.parallelism, "Worker and in-flight request bound")->check(CLI::PositiveNumber);
  app.add_option("--rng-seed", common.rng_seed, "Seed for every random choice");
  app.add_option("--endpoint", common.endpoint, "Chat completion endpoint (provider.endpoint)");
  app.add_option("--scorer-endpoint", common.scorer_endpoint, "Scorer service endpoint (scorer.endpoint)");

  // The selected subcommand stores its work here; it runs after parsing so
  // errors map onto exit codes in one place.
  std::function<int()> action;

  SeedInput para_in;
  CogFlags para_flags;
  std::string para_out;
  auto* para = app.add_subcommand("paraphrase", "Generate paraphrases for each seed question");
  add_seed_flags(para, para_in);
  add_cog_flags(para, para_flags);
  para->add_option("--out", para_out, "Output JSONL")->required();
  para->callback([&] { action = [&] { return run_paraphrase(common, para_in, para_flags, para_out); }; });

  auto* cog_cmd = app.add_subcommand("cog", "Chain-of-guidance pipeline");
  cog_cmd->require_subcommand(1);
  SeedInput run_in;
  CogFlags run_flags;
  std::string run_out;
  auto* run = cog_cmd->add_subcommand("run", "Expand each seed into a consistent QA set");
  add_seed_flags(run, run_in);
  add_cog_flags(run, run_flags);
  run->add_option("--out", run_out, "Output expanded-set JSONL")->required();
  run->callback([&] { action = [&] { return run_cog(common, run_in, run_flags, run_out); }; });

  auto* eval = app.add_subcommand("eval", "Consistency evaluation");
  eval->require_subcommand(1);
  SeedInput eval_in;
  CogFlags eval_flags;
  std::vector<std::string> eval_backends;
  std::string eval_out = "runs";
  std::string baseline;
  for (const auto mode : {harness::EvalMode::kBeforeCog, harness::EvalMode::kAfterCog}) {
    const bool after = mode == harness::EvalMode::kAfterCog;
    auto* cmd = eval->add_subcommand(after ? "after" : "before",
                                     after ? "Score answers produced by the full pipeline"
                                           : "Score direct answers to each seed and its paraphrases");
    add_seed_flags(cmd, eval_in);
    add_cog_flags(cmd, eval_flags);
    cmd->add_option("--backend", eval_backends, "rouge-l | entailment | paraphrase | bertscore (repeatable)");
    cmd->add_option("--out", eval_out, "Root directory for timestamped run directories");
    if (after) cmd->add_option("--baseline", baseline, "reports.json of a before run, for the Before column");
    cmd->callback([&, mode] {
      action = [&, mode] { return run_eval(mode, common, eval_in, eval_flags, eval_backends, eval_out, baseline); };
    });
  }

  std::string emit_in, emit_out;
  auto* emit = app.add_subcommand("emit-corpus", "Turn expanded sets into a chat fine-tuning corpus");
  emit->add_option("--expanded", emit_in, "Expanded-set JSONL from cog run or eval after")->required();
  emit->add_option("--out", emit_out, "Output JSONL")->required();
  emit->callback([&] { action = [&] { return run_emit(emit_in, emit_out); }; });

  SeedInput split_in;
  double fraction = 0.9;
  std::string split_out;
  auto* split = app.add_subcommand("split", "Seeded train/validation split");
  add_seed_flags(split, split_in);
  split->add_option("--train-fraction", fraction, "Fraction of pairs for training")->check(CLI::Range(0.0, 1.0));
  split->add_option("--out", split_out, "Output directory for train.jsonl and validation.jsonl")->required();
  split->callback([&] { action = [&] { return run_split(common, split_in, fraction, split_out); }; });

  SeedInput small_in;
  std::vector<std::string> source_files, counts;
  std::string compose_out;
  auto* compose = app.add_subcommand("compose-large", "Small training set plus sampled extra sources");
  add_seed_flags(compose, small_in);
  compose->add_option("--source-file", source_files, "NAME=PATH of an extra source (repeatable)");
  compose->add_option("--count", counts, "NAME=N to override or add a recipe count (repeatable)");
  compose->add_option("--out", compose_out, "Output JSONL")->required();
  compose->callback([&] { action = [&] { return run_compose(common, small_in, source_files, counts, compose_out); }; });

  SeedInput adv_in;
  std::string jailbreaks = "data/jailbreaks", adv_out;
  auto* adv = app.add_subcommand("adversarial", "Prompt-injection variants of each seed question");
  add_seed_flags(adv, adv_in);
  adv->add_option("--jailbreaks", jailbreaks, "Directory holding dan-<version>.txt payloads");
  adv->add_option("--out", adv_out, "Output JSONL")->required();
  adv->callback([&] { action = [&] { return run_adversarial(adv_in, jailbreaks, adv_out); }; });

  auto* stats = app.add_subcommand("stats", "Agreement statistics");
  stats->require_subcommand(1);
  std::string ratings, labels, scores;
  std::vector<double> xs, ys;
  auto* kappa = stats->add_subcommand("kappa", "Fleiss' kappa over a ratings CSV (item_id, rater columns)");
  kappa->add_option("--ratings", ratings, "Ratings CSV")->required();
  kappa->callback([&] { action = [&] { return run_kappa(ratings); }; });
  auto* spearman = stats->add_subcommand("spearman", "Spearman rank correlation of two samples");
  spearman->add_option("--x", xs, "First sample")->required();
  spearman->add_option("--y", ys, "Second sample")->required();
  spearman->callback([&] { action = [&] { return run_spearman(xs, ys); }; });
  auto* cons = stats->add_subcommand("cons-acc", "Accuracy and consistently accurate pairs");
  cons->add_option("--labels", labels, "JSON array of per-question correctness arrays")->required();
  cons->callback([&] { action = [&] { return run_cons_acc(labels); }; });
  auto* align = stats->add_subcommand("alignment", "Spearman of metric scores against human ratings, plus kappa");
  align->add_option("--ratings", ratings, "Ratings CSV")->required();
  align->add_option("--scores", scores, "JSON object {backend: [per-item scores]}")->required();
  align->callback([&] { action = [&] { return run_alignment(ratings, scores); }; });

  std::string score_backend = "rouge-l", text_a, text_b;
  auto* score = app.add_subcommand("score", "Score a single text pair");
  score->add_option("--backend", score_backend, "Similarity backend");
  score->add_option("--a", text_a, "First text")->required();
  score->add_option("--b", text_b, "Second text")->required();
  score->callback([&] { action = [&] { return run_score(common, score_backend, text_a, text_b); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    return action ? action() : 1;
  } catch (const cog::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const cog::ProviderError& e) {
    std::cerr << "provider error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  } catch (const cog::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  }
}
