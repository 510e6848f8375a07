// Command-line front end: corpus-to-report pipeline stages, evaluation and
// entity trends. Exits 0 on success and 2 on a stage failure.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ndorgs/errors.hpp"
#include "ndorgs/evaluation.hpp"
#include "ndorgs/pipeline.hpp"
#include "ndorgs/trends.hpp"

namespace {

using ndorgs::CorpusFormat;
using nlohmann::json;

CorpusFormat parse_corpus_format(const std::string& name) {
  if (name == "jsonl") return CorpusFormat::Jsonl;
  if (name == "textdir" || name == "text-dir") return CorpusFormat::TextDir;
  throw ndorgs::Error("unknown corpus format: " + name);
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ndorgs::Error("cannot write file: " + path);
  out << content;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ndorgs::Error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ndorgs::Error(path + ": invalid JSON: " + e.what());
  }
  return j;
}

// A clustering for `eval csd`: either a cluster tree (level-1 member ids),
// an array of id arrays, or {"clusters": [[...], ...]}.
ndorgs::Clustering load_clustering(const std::string& path) {
  json j = load_json(path);
  ndorgs::Clustering clusters;
  if (j.is_object() && j.contains("nodes")) {
    ndorgs::ClusterTree tree = ndorgs::tree_from_json(j);
    for (const auto& root : tree.roots) {
      clusters.push_back({root.member_ids.begin(), root.member_ids.end()});
    }
    return clusters;
  }
  const json& arr = j.is_object() && j.contains("clusters") ? j["clusters"] : j;
  if (!arr.is_array()) {
    throw ndorgs::Error(path + ": expected a cluster tree or an array of clusters");
  }
  for (const auto& cluster : arr) {
    std::set<std::string> members;
    for (const auto& id : cluster) {
      members.insert(id.is_string() ? id.get<std::string>() : id.dump());
    }
    clusters.push_back(std::move(members));
  }
  return clusters;
}

json topsis_report(const ndorgs::DecisionMatrix& matrix, const Eigen::VectorXd& weights,
                   double consistency_ratio, ndorgs::TopsisNormalization normalization) {
  json out;
  json criteria = json::array();
  for (size_t j = 0; j < matrix.criteria.size(); ++j) {
    criteria.push_back({{"name", matrix.criteria[j].name},
                        {"direction", matrix.criteria[j].is_cost ? "cost" : "benefit"},
                        {"weight", weights(static_cast<Eigen::Index>(j))}});
  }
  out["criteria"] = std::move(criteria);
  out["consistency_ratio"] = consistency_ratio;
  json rows = json::array();
  for (const auto& row : ndorgs::topsis_rank(matrix, weights, normalization)) {
    rows.push_back({{"alternative", row.alternative},
                    {"closeness", row.closeness},
                    {"rank", row.rank}});
  }
  out["ranking"] = std::move(rows);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus summarization pipeline: filters a news corpus, builds "
               "topic clusters, and writes a multilevel summary report."};
  app.require_subcommand(1);

  // --- run ---
  auto* run_cmd = app.add_subcommand("run", "Run the full pipeline from a config file");
  std::string config_path;
  run_cmd->add_option("--config", config_path, "TOML config file")->required();

  // --- sds ---
  auto* sds_cmd = app.add_subcommand("sds", "Filter a corpus and summarize every document");
  std::string sds_input, sds_output, sds_format = "jsonl";
  double sds_lambda = 0.2;
  sds_cmd->add_option("--input", sds_input, "Corpus file or directory")->required();
  sds_cmd->add_option("--output", sds_output, "Summaries JSONL path")->required();
  sds_cmd->add_option("--lambda", sds_lambda, "Summary length ratio");
  sds_cmd->add_option("--corpus-format", sds_format, "jsonl or textdir");

  // --- cluster ---
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster summaries into a topic tree");
  std::string cluster_input, cluster_output;
  int cluster_k = 9, cluster_n = 200;
  std::uint64_t cluster_seed = 42;
  int cluster_iterations = 1000;
  cluster_cmd->add_option("--input", cluster_input, "Summaries JSONL")->required();
  cluster_cmd->add_option("--output", cluster_output, "Tree JSON path")->required();
  cluster_cmd->add_option("--k", cluster_k, "First-level topic count");
  cluster_cmd->add_option("--n", cluster_n, "Subdivision size threshold");
  cluster_cmd->add_option("--seed", cluster_seed, "Sampler seed");
  cluster_cmd->add_option("--iterations", cluster_iterations, "Gibbs iterations");

  // --- mds ---
  auto* mds_cmd = app.add_subcommand("mds", "Summarize each leaf cluster");
  std::string mds_tree, mds_summaries, mds_output;
  double mds_alpha = 1.0, mds_beta = 0.1;
  mds_cmd->add_option("--tree", mds_tree, "Tree JSON")->required();
  mds_cmd->add_option("--summaries", mds_summaries, "Summaries JSONL")->required();
  mds_cmd->add_option("--output", mds_output, "Sections JSON path")->required();
  mds_cmd->add_option("--alpha", mds_alpha, "Coherence weight");
  mds_cmd->add_option("--beta", mds_beta, "Length penalty");

  // --- trend ---
  auto* trend_cmd = app.add_subcommand("trend", "Entity mention trends");
  std::string trend_input, trend_output, trend_entity, trend_by = "year";
  std::string trend_format = "csv", trend_kind = "organization";
  std::string trend_corpus_format = "jsonl";
  int trend_top = 0;
  trend_cmd->add_option("--input", trend_input, "Corpus file or directory")->required();
  trend_cmd->add_option("--output", trend_output, "Output path (stdout when omitted)");
  trend_cmd->add_option("--entity", trend_entity, "Entity to trace");
  trend_cmd->add_option("--by", trend_by, "Grouping: year or label");
  trend_cmd->add_option("--format", trend_format, "Output format: csv or svg");
  trend_cmd->add_option("--top", trend_top, "Table of the most frequent entities");
  trend_cmd->add_option("--kind", trend_kind,
                        "Entity kind for --top: organization, person, geopolitical");
  trend_cmd->add_option("--corpus-format", trend_corpus_format, "jsonl or textdir");

  // --- eval (bundle) with csd / topsis subcommands ---
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate runs or clusterings");
  eval_cmd->require_subcommand(0, 1);
  std::vector<std::string> eval_runs;
  std::string eval_human, eval_pairwise, eval_output;
  eval_cmd->add_option("--runs", eval_runs, "Run output directories");
  eval_cmd->add_option("--human", eval_human, "Annotator scores CSV");
  eval_cmd->add_option("--pairwise", eval_pairwise, "Criterion comparison CSV");
  eval_cmd->add_option("--output", eval_output, "Write eval JSON here");

  auto* csd_cmd = eval_cmd->add_subcommand("csd", "Clustering agreement score");
  std::string csd_pred, csd_gold;
  csd_cmd->add_option("--pred", csd_pred, "Predicted clustering JSON")->required();
  csd_cmd->add_option("--gold", csd_gold, "Reference clustering JSON")->required();

  auto* topsis_cmd = eval_cmd->add_subcommand("topsis", "Rank alternatives from a matrix");
  std::string topsis_matrix, topsis_pairwise, topsis_norm = "vector";
  int topsis_sensitivity = -1;
  double topsis_step = 0.02;
  topsis_cmd->add_option("--matrix", topsis_matrix, "Decision matrix CSV")->required();
  topsis_cmd->add_option("--pairwise", topsis_pairwise, "Criterion comparison CSV");
  topsis_cmd->add_option("--sensitivity", topsis_sensitivity,
                         "Sweep this criterion index");
  topsis_cmd->add_option("--step", topsis_step, "Sensitivity step size");
  topsis_cmd->add_option("--normalization", topsis_norm, "vector or minmax");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      ndorgs::PipelineConfig config = ndorgs::load_pipeline_config(config_path);
      ndorgs::PipelineResult result = ndorgs::run_pipeline(config);
      std::cout << "documents: " << result.filtered.documents.size()
                << ", removed: " << result.removed.size()
                << ", sections: " << result.report.sections.size()
                << ", other topics: " << result.report.other_topics.size() << "\n";
      if (!config.output_dir.empty()) {
        std::cout << "artifacts written to " << config.output_dir << "\n";
      }
      return 0;
    }

    if (*sds_cmd) {
      ndorgs::Corpus corpus =
          ndorgs::ingest_corpus(sds_input, parse_corpus_format(sds_format));
      ndorgs::FilterResult filtered = ndorgs::filter_corpus(corpus);
      std::vector<ndorgs::Summary> summaries =
          ndorgs::stage_summarize(filtered.corpus, sds_lambda);
      ndorgs::write_summaries_jsonl(sds_output, summaries);
      std::cout << "summaries: " << summaries.size() << " (removed "
                << filtered.removed.size() << ")\n";
      return 0;
    }

    if (*cluster_cmd) {
      std::vector<ndorgs::SummaryInput> summaries =
          ndorgs::read_summaries_jsonl(cluster_input);
      ndorgs::HierarchyConfig config;
      config.k = cluster_k;
      config.size_threshold = cluster_n;
      config.lda.seed = cluster_seed;
      config.lda.iterations = cluster_iterations;
      ndorgs::ClusterTree tree = ndorgs::stage_cluster(summaries, config);
      write_or_print(cluster_output, ndorgs::tree_to_json(tree).dump(2) + "\n");
      return 0;
    }

    if (*mds_cmd) {
      ndorgs::ClusterTree tree = ndorgs::tree_from_json(load_json(mds_tree));
      std::vector<ndorgs::SummaryInput> summaries =
          ndorgs::read_summaries_jsonl(mds_summaries);
      ndorgs::MdsConfig config;
      config.alpha = mds_alpha;
      config.beta = mds_beta;
      auto sections = ndorgs::stage_sections(tree, summaries, config);
      write_or_print(mds_output, ndorgs::sections_to_json(sections).dump(2) + "\n");
      return 0;
    }

    if (*trend_cmd) {
      ndorgs::Corpus corpus =
          ndorgs::ingest_corpus(trend_input, parse_corpus_format(trend_corpus_format));
      if (trend_format != "csv" && trend_format != "svg") {
        throw ndorgs::Error("unknown output format: " + trend_format);
      }
      if (!trend_entity.empty()) {
        ndorgs::TrendGroup group;
        if (trend_by == "year") {
          group = ndorgs::TrendGroup::Year;
        } else if (trend_by == "label") {
          group = ndorgs::TrendGroup::Label;
        } else {
          throw ndorgs::Error("unknown grouping: " + trend_by);
        }
        ndorgs::EntityTrend trend = ndorgs::entity_trend(corpus, trend_entity, group);
        write_or_print(trend_output, trend_format == "csv"
                                         ? ndorgs::trend_csv(trend)
                                         : ndorgs::trend_svg(trend));
        return 0;
      }
      if (trend_top > 0) {
        ndorgs::EntityKind kind;
        if (trend_kind == "organization") {
          kind = ndorgs::EntityKind::Organization;
        } else if (trend_kind == "person") {
          kind = ndorgs::EntityKind::Person;
        } else if (trend_kind == "geopolitical") {
          kind = ndorgs::EntityKind::Geopolitical;
        } else {
          throw ndorgs::Error("unknown entity kind: " + trend_kind);
        }
        auto totals = ndorgs::top_entities(corpus, kind, trend_top);
        write_or_print(trend_output, trend_format == "csv"
                                         ? ndorgs::totals_csv(totals)
                                         : ndorgs::totals_svg(totals, trend_kind));
        return 0;
      }
      throw ndorgs::Error("trend needs either --entity or --top");
    }

    if (*csd_cmd) {
      double score = ndorgs::csd_f1(load_clustering(csd_gold), load_clustering(csd_pred));
      json out;
      out["csd_f1"] = score;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*topsis_cmd) {
      ndorgs::DecisionMatrix matrix = ndorgs::read_decision_matrix_csv(topsis_matrix);
      int criteria = static_cast<int>(matrix.criteria.size());
      Eigen::MatrixXd pairwise;
      if (topsis_pairwise.empty()) {
        pairwise.resize(criteria, criteria);
        for (int i = 0; i < criteria; ++i) {
          for (int j = 0; j < criteria; ++j) {
            pairwise(i, j) = std::exp2(static_cast<double>(j - i));
          }
        }
      } else {
        pairwise = ndorgs::read_pairwise_csv(topsis_pairwise);
      }
      ndorgs::AhpResult ahp = ndorgs::ahp_weights(pairwise);
      if (!ahp.consistent) {
        std::cerr << "warning: pairwise matrix consistency ratio "
                  << ahp.consistency_ratio << " exceeds 0.1\n";
      }
      ndorgs::TopsisNormalization normalization;
      if (topsis_norm == "vector") {
        normalization = ndorgs::TopsisNormalization::Vector;
      } else if (topsis_norm == "minmax") {
        normalization = ndorgs::TopsisNormalization::MinMax;
      } else {
        throw ndorgs::Error("unknown normalization: " + topsis_norm);
      }
      json out = topsis_report(matrix, ahp.weights, ahp.consistency_ratio, normalization);
      if (topsis_sensitivity >= 0) {
        ndorgs::SensitivitySweep sweep = ndorgs::sensitivity_analysis(
            matrix, ahp.weights, topsis_sensitivity, topsis_step, 25, normalization);
        auto direction_json = [&](const ndorgs::SensitivityDirection& dir) {
          json d;
          json steps = json::array();
          for (const auto& step : dir.steps) {
            json s;
            s["weights"] = std::vector<double>(
                step.weights.data(), step.weights.data() + step.weights.size());
            json order = json::array();
            for (int idx : step.ranking) order.push_back(matrix.alternatives[idx]);
            s["ranking"] = std::move(order);
            steps.push_back(std::move(s));
          }
          d["steps"] = std::move(steps);
          if (dir.crossover) d["crossover_step"] = *dir.crossover;
          return d;
        };
        out["sensitivity"] = {{"criterion", matrix.criteria[topsis_sensitivity].name},
                              {"up", direction_json(sweep.up)},
                              {"down", direction_json(sweep.down)}};
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*eval_cmd) {
      if (eval_runs.empty()) {
        throw ndorgs::Error("eval needs --runs directories (or a csd/topsis subcommand)");
      }
      ndorgs::EvalOptions options;
      options.run_dirs = eval_runs;
      options.human_csv = eval_human;
      options.pairwise_csv = eval_pairwise;
      json out = ndorgs::run_eval(options);
      std::string rendered = out.dump(2) + "\n";
      if (!eval_output.empty()) {
        std::ofstream file(eval_output, std::ios::binary);
        if (!file) throw ndorgs::Error("cannot write file: " + eval_output);
        file << rendered;
      }
      std::cout << rendered;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
