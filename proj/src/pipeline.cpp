#include "ndorgs/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <thread>

#include "ndorgs/errors.hpp"
#include "ndorgs/text.hpp"
#include "ndorgs/titling.hpp"

namespace ndorgs {

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Runs fn(i) for i in [0, n) on a fixed-size pool; each task writes only
// its own slot, so results are deterministic.
template <typename Fn>
void parallel_for(int n, int threads, Fn fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<std::string> summary_content_tokens(const SummaryInput& summary) {
  std::vector<std::string> tokens;
  for (const auto& text : summary.sentence_texts) {
    for (auto& t : content_tokens(tokenize(text))) tokens.push_back(std::move(t));
  }
  return tokens;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path.string());
  out << content;
}

json node_to_json(const ClusterNode& node) {
  json j;
  j["id"] = node.id;
  j["level"] = node.level;
  j["score"] = node.score;
  j["member_ids"] = node.member_ids;
  j["p"] = node.member_p;
  json words = json::array();
  for (const auto& [word, weight] : node.top_words) {
    words.push_back({{"word", word}, {"weight", weight}});
  }
  j["top_words"] = std::move(words);
  json children = json::array();
  for (const auto& child : node.children) children.push_back(node_to_json(child));
  j["children"] = std::move(children);
  return j;
}

ClusterNode node_from_json(const json& j) {
  ClusterNode node;
  node.id = j.at("id").get<std::string>();
  node.level = j.at("level").get<int>();
  node.score = j.at("score").get<double>();
  node.member_ids = j.at("member_ids").get<std::vector<std::string>>();
  node.member_p = j.at("p").get<std::vector<double>>();
  for (const auto& w : j.at("top_words")) {
    node.top_words.push_back({w.at("word").get<std::string>(), w.at("weight").get<double>()});
  }
  for (const auto& c : j.at("children")) node.children.push_back(node_from_json(c));
  return node;
}

json section_to_json(const ReportSection& section) {
  json j;
  j["cluster_id"] = section.cluster_id;
  j["title"] = section.title;
  j["level"] = section.level;
  j["score"] = section.score;
  j["body"] = section.body;
  j["member_ids"] = section.member_ids;
  json subs = json::array();
  for (const auto& sub : section.subsections) subs.push_back(section_to_json(sub));
  j["subsections"] = std::move(subs);
  return j;
}

}  // namespace

HierarchyConfig PipelineConfig::hierarchy() const {
  HierarchyConfig h;
  h.k = k;
  h.size_threshold = n;
  h.lda.alpha = lda_alpha;
  h.lda.beta = lda_beta;
  h.lda.iterations = lda_iterations;
  h.lda.seed = seed;
  return h;
}

MdsConfig PipelineConfig::mds() const {
  MdsConfig m;
  m.alpha = mds_alpha;
  m.beta = mds_beta;
  return m;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  PipelineConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = line;
    // Strip comments outside quotes.
    bool quoted = false;
    for (size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '"') quoted = !quoted;
      if (text[i] == '#' && !quoted) {
        text = text.substr(0, i);
        break;
      }
    }
    text = normalize_whitespace(text);
    if (text.empty()) continue;
    if (text.front() == '[') continue;  // section headers are ignored
    size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = normalize_whitespace(text.substr(0, eq));
    std::string value = normalize_whitespace(text.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    auto number = [&](const std::string& v) {
      try {
        return std::stod(v);
      } catch (const std::exception&) {
        throw Error("config line " + std::to_string(line_no) + ": invalid number '" + v + "'");
      }
    };
    if (key == "corpus") {
      config.corpus_path = value;
    } else if (key == "format") {
      if (value == "jsonl") {
        config.format = CorpusFormat::Jsonl;
      } else if (value == "textdir" || value == "text-dir") {
        config.format = CorpusFormat::TextDir;
      } else {
        throw Error("config line " + std::to_string(line_no) + ": unknown format '" + value + "'");
      }
    } else if (key == "output") {
      config.output_dir = value;
    } else if (key == "name") {
      config.corpus_name = value;
    } else if (key == "lambda") {
      config.lambda = number(value);
    } else if (key == "k") {
      config.k = static_cast<int>(number(value));
    } else if (key == "n") {
      config.n = static_cast<int>(number(value));
    } else if (key == "minor_threshold") {
      config.minor_threshold = static_cast<int>(number(value));
    } else if (key == "alpha") {
      config.mds_alpha = number(value);
    } else if (key == "beta") {
      config.mds_beta = number(value);
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(number(value));
    } else if (key == "lda_iterations") {
      config.lda_iterations = static_cast<int>(number(value));
    } else if (key == "lda_alpha") {
      config.lda_alpha = number(value);
    } else if (key == "lda_beta") {
      config.lda_beta = number(value);
    } else if (key == "min_english_ratio") {
      config.filter.min_english_ratio = number(value);
    } else if (key == "interview_ratio") {
      config.filter.max_interview_ratio = number(value);
    } else if (key == "threads") {
      config.threads = static_cast<int>(number(value));
    } else {
      throw Error("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (config.corpus_path.empty()) throw Error("config: missing 'corpus' entry");
  return config;
}

SummaryInput to_summary_input(const Summary& summary) {
  SummaryInput input;
  input.doc_id = summary.doc_id;
  input.sentence_indexes = summary.sentence_indexes;
  input.sentence_texts = summary.sentence_texts;
  input.sentence_scores = summary.sentence_scores;
  return input;
}

std::vector<Summary> stage_summarize(const Corpus& corpus, double lambda, int threads) {
  std::vector<Summary> summaries(corpus.documents.size());
  parallel_for(static_cast<int>(corpus.documents.size()), threads, [&](int i) {
    summaries[i] = summarize(corpus.documents[i], lambda);
  });
  return summaries;
}

ClusterTree stage_cluster(const std::vector<SummaryInput>& summaries,
                          const HierarchyConfig& config) {
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> tokens;
  ids.reserve(summaries.size());
  tokens.reserve(summaries.size());
  for (const auto& summary : summaries) {
    ids.push_back(summary.doc_id);
    tokens.push_back(summary_content_tokens(summary));
  }
  return build_hierarchy(ids, tokens, config);
}

std::map<std::string, SectionSummary> stage_sections(
    const ClusterTree& tree, const std::vector<SummaryInput>& summaries,
    const MdsConfig& config, int threads) {
  std::map<std::string, const SummaryInput*> by_id;
  for (const auto& summary : summaries) by_id[summary.doc_id] = &summary;
  std::vector<const ClusterNode*> leaves = collect_leaves(tree);
  std::vector<SectionSummary> results(leaves.size());
  parallel_for(static_cast<int>(leaves.size()), threads, [&](int i) {
    const ClusterNode* leaf = leaves[i];
    std::vector<SummaryInput> members;
    for (const auto& id : leaf->member_ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw Error("stage_sections: no summary for document " + id);
      }
      members.push_back(*it->second);
    }
    DiscourseGraph graph = build_discourse_graph(members);
    int budget = target_length(static_cast<int>(leaf->member_ids.size()));
    MdsSelection selection = summarize_cluster(graph, budget, config);
    SectionSummary section;
    section.cluster_id = leaf->id;
    section.budget = budget;
    section.objective = selection.objective;
    section.word_count = selection.word_count;
    section.text = selection_text(graph, selection);
    for (int id : selection.order) {
      const MdsSentence& s = graph.sentences[id];
      section.sentences.push_back({s.doc_id, s.sentence_index, s.text});
    }
    results[i] = std::move(section);
  });
  std::map<std::string, SectionSummary> sections;
  for (auto& section : results) {
    std::string id = section.cluster_id;
    sections.emplace(std::move(id), std::move(section));
  }
  return sections;
}

std::map<std::string, std::string> stage_titles(
    const ClusterTree& tree, const std::vector<SummaryInput>& summaries) {
  std::map<std::string, const SummaryInput*> by_id;
  for (const auto& summary : summaries) by_id[summary.doc_id] = &summary;
  auto sources_for = [&](const ClusterNode& node) {
    std::vector<TitleSource> sources;
    for (const auto& id : node.member_ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) throw Error("stage_titles: no summary for document " + id);
      const SummaryInput& summary = *it->second;
      for (size_t i = 0; i < summary.sentence_texts.size(); ++i) {
        sources.push_back({summary.sentence_texts[i], i == 0});
      }
    }
    return sources;
  };
  std::map<std::string, std::string> titles;
  for (const auto& root : tree.roots) {
    if (root.empty()) continue;
    titles[root.id] = generate_title(sources_for(root), root.top_words);
    for (const auto& child : root.children) {
      if (child.empty()) continue;
      titles[child.id] = generate_title(sources_for(child), child.top_words);
    }
  }
  return titles;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  PipelineResult result;
  auto timed = [&](const std::string& stage, auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    result.timings.push_back({stage, seconds_since(start)});
  };

  Corpus raw;
  timed("ingest", [&] { raw = ingest_corpus(config.corpus_path, config.format); });
  if (!config.corpus_name.empty()) raw.name = config.corpus_name;

  timed("filter", [&] {
    FilterResult filtered = filter_corpus(raw, config.filter);
    result.filtered = std::move(filtered.corpus);
    result.removed = std::move(filtered.removed);
  });
  if (result.filtered.documents.empty()) {
    throw Error("run_pipeline: every document was filtered out");
  }

  timed("summarize", [&] {
    result.summaries = stage_summarize(result.filtered, config.lambda, config.threads);
  });

  std::vector<SummaryInput> inputs;
  inputs.reserve(result.summaries.size());
  for (const auto& summary : result.summaries) inputs.push_back(to_summary_input(summary));

  timed("cluster", [&] { result.tree = stage_cluster(inputs, config.hierarchy()); });

  timed("sections", [&] {
    result.sections = stage_sections(result.tree, inputs, config.mds(), config.threads);
  });

  timed("titles", [&] { result.titles = stage_titles(result.tree, inputs); });

  timed("report", [&] {
    std::map<std::string, std::string> texts;
    for (const auto& [id, section] : result.sections) texts[id] = section.text;
    ReportMeta meta;
    meta.corpus_name = result.filtered.name;
    meta.lambda = config.lambda;
    meta.k = config.k;
    meta.n = config.n;
    meta.seed = config.seed;
    result.report = assemble_report(result.tree, texts, result.titles,
                                    config.minor_threshold, meta);
  });

  if (!config.output_dir.empty()) {
    std::filesystem::path dir(config.output_dir);
    std::filesystem::create_directories(dir);
    {
      std::ofstream log(dir / "filter_log.csv", std::ios::binary);
      if (!log) throw Error("cannot write filter log");
      write_filter_log(log, result.removed);
    }
    write_summaries_jsonl(dir / "summaries.jsonl", result.summaries);
    write_text_file(dir / "tree.json", tree_to_json(result.tree).dump(2) + "\n");
    write_text_file(dir / "sections.json", sections_to_json(result.sections).dump(2) + "\n");
    json titles_json = json::object();
    for (const auto& [id, title] : result.titles) titles_json[id] = title;
    write_text_file(dir / "titles.json", titles_json.dump(2) + "\n");
    write_text_file(dir / "report.md", render_markdown(result.report));
    write_text_file(dir / "report.json", report_to_json(result.report).dump(2) + "\n");

    json manifest;
    manifest["corpus"] = config.corpus_path;
    manifest["format"] = config.format == CorpusFormat::Jsonl ? "jsonl" : "textdir";
    manifest["name"] = result.filtered.name;
    manifest["lambda"] = config.lambda;
    manifest["k"] = config.k;
    manifest["n"] = config.n;
    manifest["minor_threshold"] = config.minor_threshold;
    manifest["alpha"] = config.mds_alpha;
    manifest["beta"] = config.mds_beta;
    manifest["seed"] = config.seed;
    manifest["lda_iterations"] = config.lda_iterations;
    manifest["documents"] = result.filtered.documents.size();
    manifest["removed"] = result.removed.size();
    json timings = json::object();
    double total = 0.0;
    for (const auto& timing : result.timings) {
      timings[timing.stage] = timing.seconds;
      total += timing.seconds;
    }
    manifest["stage_seconds"] = std::move(timings);
    manifest["total_seconds"] = total;
    write_text_file(dir / "run_manifest.json", manifest.dump(2) + "\n");
  }
  return result;
}

void write_summaries_jsonl(const std::filesystem::path& path,
                           const std::vector<Summary>& summaries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write summaries: " + path.string());
  for (const auto& summary : summaries) {
    json j;
    j["id"] = summary.doc_id;
    j["lambda"] = summary.lambda;
    j["sentence_indexes"] = summary.sentence_indexes;
    j["text"] = summary.text();
    j["scores"] = summary.sentence_scores;
    out << j.dump() << '\n';
  }
}

std::vector<SummaryInput> read_summaries_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open summaries: " + path.string());
  std::vector<SummaryInput> summaries;
  std::string line;
  int record = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++record;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error("summaries record " + std::to_string(record) + ": invalid JSON: " + e.what());
    }
    SummaryInput input;
    input.doc_id = j.at("id").get<std::string>();
    input.sentence_indexes = j.at("sentence_indexes").get<std::vector<int>>();
    std::string text = j.at("text").get<std::string>();
    if (!text.empty()) {
      input.sentence_texts = split(text, '\n');
    }
    if (j.contains("scores")) {
      input.sentence_scores = j.at("scores").get<std::vector<double>>();
    } else {
      input.sentence_scores.assign(input.sentence_texts.size(), 1.0);
    }
    summaries.push_back(std::move(input));
  }
  return summaries;
}

nlohmann::json tree_to_json(const ClusterTree& tree) {
  json j;
  j["k"] = tree.config.k;
  j["n"] = tree.config.size_threshold;
  j["seed"] = tree.config.lda.seed;
  json nodes = json::array();
  for (const auto& root : tree.roots) nodes.push_back(node_to_json(root));
  j["nodes"] = std::move(nodes);
  return j;
}

ClusterTree tree_from_json(const nlohmann::json& j) {
  ClusterTree tree;
  const json& nodes = j.is_array() ? j : j.at("nodes");
  tree.config.k = 0;
  if (!j.is_array()) {
    tree.config.k = j.value("k", 0);
    tree.config.size_threshold = j.value("n", 200);
    tree.config.lda.seed = j.value("seed", 42ULL);
  }
  for (const auto& node : nodes) tree.roots.push_back(node_from_json(node));
  if (tree.config.k == 0) tree.config.k = static_cast<int>(tree.roots.size());
  return tree;
}

nlohmann::json sections_to_json(const std::map<std::string, SectionSummary>& sections) {
  json arr = json::array();
  for (const auto& [id, section] : sections) {
    (void)id;
    json j;
    j["cluster_id"] = section.cluster_id;
    j["budget"] = section.budget;
    j["objective"] = section.objective;
    j["word_count"] = section.word_count;
    j["text"] = section.text;
    json sentences = json::array();
    for (const auto& s : section.sentences) {
      sentences.push_back({{"doc_id", s.doc_id},
                           {"sentence_index", s.sentence_index},
                           {"text", s.text}});
    }
    j["sentences"] = std::move(sentences);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::map<std::string, SectionSummary> sections_from_json(const nlohmann::json& j) {
  std::map<std::string, SectionSummary> sections;
  for (const auto& item : j) {
    SectionSummary section;
    section.cluster_id = item.at("cluster_id").get<std::string>();
    section.budget = item.at("budget").get<int>();
    section.objective = item.at("objective").get<double>();
    section.word_count = item.at("word_count").get<int>();
    section.text = item.at("text").get<std::string>();
    for (const auto& s : item.at("sentences")) {
      section.sentences.push_back({s.at("doc_id").get<std::string>(),
                                   s.at("sentence_index").get<int>(),
                                   s.at("text").get<std::string>()});
    }
    sections.emplace(section.cluster_id, std::move(section));
  }
  return sections;
}

nlohmann::json report_to_json(const Report& report) {
  json j;
  j["title"] = report.title;
  j["meta"] = {{"corpus", report.meta.corpus_name}, {"lambda", report.meta.lambda},
               {"k", report.meta.k},               {"n", report.meta.n},
               {"seed", report.meta.seed}};
  json sections = json::array();
  for (const auto& section : report.sections) sections.push_back(section_to_json(section));
  j["sections"] = std::move(sections);
  json bullets = json::array();
  for (const auto& bullet : report.other_topics) {
    bullets.push_back({{"cluster_id", bullet.cluster_id},
                       {"title", bullet.title},
                       {"score", bullet.score},
                       {"text", bullet.text},
                       {"member_ids", bullet.member_ids}});
  }
  j["other_topics"] = std::move(bullets);
  return j;
}

namespace {

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": invalid JSON: " + e.what());
  }
  return j;
}

// Every human-readable text of a report: titles, section bodies, bullets.
void collect_report_texts(const json& report, std::vector<std::string>& out) {
  if (report.contains("sections")) {
    for (const auto& section : report["sections"]) {
      out.push_back(section.at("title").get<std::string>());
      std::string body = section.value("body", "");
      if (!body.empty()) out.push_back(body);
      if (section.contains("subsections")) {
        for (const auto& sub : section["subsections"]) {
          out.push_back(sub.at("title").get<std::string>());
          std::string sub_body = sub.value("body", "");
          if (!sub_body.empty()) out.push_back(sub_body);
        }
      }
    }
  }
  if (report.contains("other_topics")) {
    for (const auto& bullet : report["other_topics"]) {
      out.push_back(bullet.at("title").get<std::string>());
      out.push_back(bullet.at("text").get<std::string>());
    }
  }
}

struct HumanScores {
  std::map<std::string, std::pair<double, int>> totals;  // run -> (sum, count)

  double mean_for(const std::string& run) const {
    auto it = totals.find(run);
    if (it == totals.end() || it->second.second == 0) {
      throw Error("human scores: no rows for run '" + run + "'");
    }
    return it->second.first / it->second.second;
  }
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

// CSV with a `run` key column and numeric score columns; non-numeric
// columns (annotator ids) are skipped. All numeric cells of a run average
// into one score.
HumanScores read_human_scores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open human scores: " + path);
  HumanScores scores;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (first) {
      first = false;
      bool header = false;
      for (size_t i = 1; i < fields.size(); ++i) {
        try {
          std::stod(fields[i]);
        } catch (const std::exception&) {
          header = true;
        }
      }
      if (header) continue;
    }
    if (fields.size() < 2) continue;
    auto& [sum, count] = scores.totals[fields[0]];
    for (size_t i = 1; i < fields.size(); ++i) {
      try {
        sum += std::stod(fields[i]);
        ++count;
      } catch (const std::exception&) {
        // annotator id or other non-numeric column
      }
    }
  }
  if (scores.totals.empty()) throw Error("human scores file has no rows: " + path);
  return scores;
}

Eigen::MatrixXd consistent_pairwise(const std::vector<double>& ratios) {
  int n = static_cast<int>(ratios.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = ratios[i] / ratios[j];
  }
  return m;
}

}  // namespace

nlohmann::json run_eval(const EvalOptions& options) {
  if (options.run_dirs.empty()) throw Error("run_eval: no run directories given");
  bool with_human = !options.human_csv.empty();
  HumanScores human;
  if (with_human) human = read_human_scores(options.human_csv);

  struct RunScore {
    std::string label;
    double human = 0.0;
    double seconds = 0.0;
    double coverage = 0.0;
    double diversity = 0.0;
  };
  std::vector<RunScore> runs;

  for (const std::string& dir_name : options.run_dirs) {
    std::filesystem::path dir(dir_name);
    json manifest = load_json_file(dir / "run_manifest.json");
    json report = load_json_file(dir / "report.json");

    RunScore run;
    run.label = dir.filename().string();
    if (run.label.empty()) run.label = dir.parent_path().filename().string();
    run.seconds = manifest.at("total_seconds").get<double>();
    if (with_human) run.human = human.mean_for(run.label);

    CorpusFormat format = manifest.value("format", "jsonl") == "textdir"
                              ? CorpusFormat::TextDir
                              : CorpusFormat::Jsonl;
    Corpus corpus = ingest_corpus(manifest.at("corpus").get<std::string>(), format);
    FilterResult filtered = filter_corpus(corpus);

    std::vector<std::string> report_texts;
    collect_report_texts(report, report_texts);
    if (report_texts.empty()) throw Error("run_eval: report in " + dir_name + " is empty");

    // Coverage: corpus vs report top keyword overlap.
    std::vector<std::vector<std::string>> report_docs;
    report_docs.reserve(report_texts.size());
    for (const auto& text : report_texts) report_docs.push_back(tokenize(text));
    auto top_words = [&](const std::vector<KeywordEntry>& entries) {
      std::vector<std::string> words;
      words.reserve(entries.size());
      for (const auto& e : entries) words.push_back(e.word);
      return words;
    };
    std::vector<std::string> corpus_top =
        top_words(score_keywords(filtered.corpus.documents, options.coverage_k));
    std::vector<std::string> report_top =
        top_words(score_keyword_tokens(report_docs, options.coverage_k));
    run.coverage = coverage_score(corpus_top, report_top, options.coverage_k);

    // Diversity: LDA topics of the corpus vs the report sentences.
    std::vector<std::vector<std::string>> corpus_docs;
    corpus_docs.reserve(filtered.corpus.documents.size());
    for (const auto& doc : filtered.corpus.documents) {
      corpus_docs.push_back(content_tokens(doc.all_tokens()));
    }
    std::vector<std::vector<std::string>> report_sentences;
    for (const auto& text : report_texts) {
      for (const auto& sentence : segment_sentences(text)) {
        auto tokens = content_tokens(tokenize(sentence));
        if (!tokens.empty()) report_sentences.push_back(std::move(tokens));
      }
    }
    LdaConfig lda;
    lda.topics = manifest.value("k", 9);
    lda.seed = manifest.value("seed", 42ULL);
    if (static_cast<int>(report_sentences.size()) < lda.topics) {
      throw Error("run_eval: report in " + dir_name + " has fewer sentences than topics");
    }
    run.diversity = diversity_score(corpus_docs, report_sentences, lda,
                                    options.diversity_m);
    runs.push_back(std::move(run));
  }

  DecisionMatrix matrix;
  std::vector<double> default_ratios;
  if (with_human) {
    matrix.criteria = {{"human", false}, {"time", true}, {"coverage", false},
                       {"diversity", false}};
    default_ratios = {8.0, 4.0, 2.0, 1.0};
  } else {
    matrix.criteria = {{"time", true}, {"coverage", false}, {"diversity", false}};
    default_ratios = {4.0, 2.0, 1.0};
  }
  matrix.values.resize(runs.size(), matrix.criteria.size());
  for (size_t i = 0; i < runs.size(); ++i) {
    matrix.alternatives.push_back(runs[i].label);
    int j = 0;
    if (with_human) matrix.values(i, j++) = runs[i].human;
    matrix.values(i, j++) = runs[i].seconds;
    matrix.values(i, j++) = runs[i].coverage;
    matrix.values(i, j++) = runs[i].diversity;
  }

  Eigen::MatrixXd pairwise = options.pairwise_csv.empty()
                                 ? consistent_pairwise(default_ratios)
                                 : read_pairwise_csv(options.pairwise_csv);
  if (pairwise.rows() != static_cast<Eigen::Index>(matrix.criteria.size())) {
    throw Error("run_eval: pairwise matrix size does not match criterion count");
  }
  AhpResult ahp = ahp_weights(pairwise);
  std::vector<TopsisRow> ranking = topsis_rank(matrix, ahp.weights);

  json out;
  json run_rows = json::array();
  for (const auto& run : runs) {
    json row;
    row["run"] = run.label;
    if (with_human) row["human"] = run.human;
    row["time_seconds"] = run.seconds;
    row["coverage"] = run.coverage;
    row["diversity"] = run.diversity;
    run_rows.push_back(std::move(row));
  }
  out["runs"] = std::move(run_rows);
  json criteria = json::array();
  for (size_t j = 0; j < matrix.criteria.size(); ++j) {
    criteria.push_back({{"name", matrix.criteria[j].name},
                        {"direction", matrix.criteria[j].is_cost ? "cost" : "benefit"},
                        {"weight", ahp.weights(static_cast<Eigen::Index>(j))}});
  }
  out["criteria"] = std::move(criteria);
  out["consistency_ratio"] = ahp.consistency_ratio;
  out["consistent"] = ahp.consistent;
  json ranks = json::array();
  for (const auto& row : ranking) {
    ranks.push_back({{"run", row.alternative},
                     {"closeness", row.closeness},
                     {"rank", row.rank}});
  }
  out["ranking"] = std::move(ranks);

  json sweeps = json::array();
  for (size_t j = 0; j < matrix.criteria.size(); ++j) {
    SensitivitySweep sweep = sensitivity_analysis(
        matrix, ahp.weights, static_cast<int>(j), options.sensitivity_step,
        options.sensitivity_max_steps);
    auto direction_json = [&](const SensitivityDirection& dir) {
      json d;
      json steps = json::array();
      for (const auto& step : dir.steps) {
        json s;
        s["weights"] = std::vector<double>(step.weights.data(),
                                           step.weights.data() + step.weights.size());
        json order = json::array();
        for (int idx : step.ranking) order.push_back(matrix.alternatives[idx]);
        s["ranking"] = std::move(order);
        steps.push_back(std::move(s));
      }
      d["steps"] = std::move(steps);
      if (dir.crossover) d["crossover_step"] = *dir.crossover;
      return d;
    };
    sweeps.push_back({{"criterion", matrix.criteria[j].name},
                      {"up", direction_json(sweep.up)},
                      {"down", direction_json(sweep.down)}});
  }
  out["sensitivity"] = std::move(sweeps);
  return out;
}

}  // namespace ndorgs
