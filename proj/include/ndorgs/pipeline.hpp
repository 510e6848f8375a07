// End-to-end pipeline: filter, summarize, cluster, section summaries,
// titles, report; artifact serialization; and multi-run evaluation.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndorgs/corpus.hpp"
#include "ndorgs/evaluation.hpp"
#include "ndorgs/mds.hpp"
#include "ndorgs/report.hpp"
#include "ndorgs/sds.hpp"
#include "ndorgs/topics.hpp"

namespace ndorgs {

struct PipelineConfig {
  std::string corpus_path;
  CorpusFormat format = CorpusFormat::Jsonl;
  std::string output_dir;
  std::string corpus_name;  // defaults to the corpus file stem
  double lambda = 0.2;
  int k = 9;
  int n = 200;
  int minor_threshold = 70;
  double mds_alpha = 1.0;
  double mds_beta = 0.1;
  std::uint64_t seed = 42;
  int lda_iterations = 1000;
  double lda_alpha = 0.0;  // 0 selects 50/K
  double lda_beta = 0.01;
  FilterConfig filter;
  int threads = 0;  // 0 selects hardware concurrency

  HierarchyConfig hierarchy() const;
  MdsConfig mds() const;
};

// Flat TOML: `key = value` lines, # comments, quoted strings, numbers and
// booleans. Unknown keys are rejected.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

struct SectionSentenceRef {
  std::string doc_id;
  int sentence_index = 0;
  std::string text;
};

struct SectionSummary {
  std::string cluster_id;
  int budget = 0;
  double objective = 0.0;
  int word_count = 0;
  std::string text;
  std::vector<SectionSentenceRef> sentences;
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct PipelineResult {
  Corpus filtered;
  std::vector<FilterRecord> removed;
  std::vector<Summary> summaries;
  ClusterTree tree;
  std::map<std::string, SectionSummary> sections;
  std::map<std::string, std::string> titles;
  Report report;
  std::vector<StageTiming> timings;
};

// Stage functions, each runnable from reloaded artifacts.
std::vector<Summary> stage_summarize(const Corpus& corpus, double lambda, int threads = 0);
ClusterTree stage_cluster(const std::vector<SummaryInput>& summaries,
                          const HierarchyConfig& config);
std::map<std::string, SectionSummary> stage_sections(
    const ClusterTree& tree, const std::vector<SummaryInput>& summaries,
    const MdsConfig& config, int threads = 0);
std::map<std::string, std::string> stage_titles(
    const ClusterTree& tree, const std::vector<SummaryInput>& summaries);

SummaryInput to_summary_input(const Summary& summary);

// Runs every stage and, when the config names an output directory, writes
// filter_log.csv, summaries.jsonl, tree.json, sections.json, titles.json,
// report.md, report.json and run_manifest.json into it.
PipelineResult run_pipeline(const PipelineConfig& config);

// Artifact serialization.
void write_summaries_jsonl(const std::filesystem::path& path,
                           const std::vector<Summary>& summaries);
std::vector<SummaryInput> read_summaries_jsonl(const std::filesystem::path& path);
nlohmann::json tree_to_json(const ClusterTree& tree);
ClusterTree tree_from_json(const nlohmann::json& j);
nlohmann::json sections_to_json(const std::map<std::string, SectionSummary>& sections);
std::map<std::string, SectionSummary> sections_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const Report& report);

struct EvalOptions {
  std::vector<std::string> run_dirs;
  std::string human_csv;     // optional annotator scores
  std::string pairwise_csv;  // optional criterion comparison matrix
  int coverage_k = 50;
  int diversity_m = 10;
  double sensitivity_step = 0.02;
  int sensitivity_max_steps = 25;
};

// Scores each run (human mean when given, wall time, coverage, diversity),
// derives criterion weights (AHP on the pairwise matrix, or a consistent
// default), ranks the runs with TOPSIS and sweeps every criterion weight.
nlohmann::json run_eval(const EvalOptions& options);

}  // namespace ndorgs
