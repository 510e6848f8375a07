#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ndorgs/errors.hpp"
#include "ndorgs/mds.hpp"
#include "ndorgs/pipeline.hpp"
#include "testutil.hpp"

using namespace ndorgs;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

PipelineConfig base_config(const std::string& corpus_path, const std::string& out_dir) {
  PipelineConfig config;
  config.corpus_path = corpus_path;
  config.output_dir = out_dir;
  config.k = 3;
  config.n = 200;
  config.minor_threshold = 3;
  config.lda_iterations = 300;
  config.threads = 2;
  return config;
}

void check_same_summary(const Summary& a, const Summary& b) {
  CHECK(a.doc_id == b.doc_id);
  CHECK(a.sentence_indexes == b.sentence_indexes);
  CHECK(a.sentence_texts == b.sentence_texts);
  CHECK(a.sentence_scores == b.sentence_scores);
  CHECK(a.all_scores == b.all_scores);
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("config file sets every field") {
  testutil::TempDir dir;
  write_file(dir.file("run.conf"),
             "# pipeline settings\n"
             "[run]\n"
             "corpus = \"data/news.jsonl\"  # input path\n"
             "format = jsonl\n"
             "output = out/run1\n"
             "name = \"bbc # sample\"\n"
             "\n"
             "lambda = 0.3\n"
             "k = 5\n"
             "n = 150\n"
             "minor_threshold = 40\n"
             "alpha = 1.5\n"
             "beta = 0.25\n"
             "seed = 99\n"
             "lda_iterations = 500\n"
             "lda_alpha = 0.4\n"
             "lda_beta = 0.02\n"
             "min_english_ratio = 0.1\n"
             "interview_ratio = 0.6\n"
             "threads = 2\n");
  PipelineConfig config = load_pipeline_config(dir.file("run.conf"));
  CHECK(config.corpus_path == "data/news.jsonl");
  CHECK(config.format == CorpusFormat::Jsonl);
  CHECK(config.output_dir == "out/run1");
  CHECK(config.corpus_name == "bbc # sample");
  CHECK(config.lambda == doctest::Approx(0.3));
  CHECK(config.k == 5);
  CHECK(config.n == 150);
  CHECK(config.minor_threshold == 40);
  CHECK(config.mds_alpha == doctest::Approx(1.5));
  CHECK(config.mds_beta == doctest::Approx(0.25));
  CHECK(config.seed == 99);
  CHECK(config.lda_iterations == 500);
  CHECK(config.lda_alpha == doctest::Approx(0.4));
  CHECK(config.lda_beta == doctest::Approx(0.02));
  CHECK(config.filter.min_english_ratio == doctest::Approx(0.1));
  CHECK(config.filter.max_interview_ratio == doctest::Approx(0.6));
  CHECK(config.threads == 2);

  write_file(dir.file("dir.conf"), "corpus = texts\nformat = text-dir\n");
  CHECK(load_pipeline_config(dir.file("dir.conf")).format == CorpusFormat::TextDir);
}

TEST_CASE("config keys not set keep their defaults") {
  testutil::TempDir dir;
  write_file(dir.file("min.conf"), "corpus = a.jsonl\n");
  PipelineConfig config = load_pipeline_config(dir.file("min.conf"));
  CHECK(config.corpus_name.empty());
  CHECK(config.output_dir.empty());
  CHECK(config.lambda == doctest::Approx(0.2));
  CHECK(config.k == 9);
  CHECK(config.n == 200);
  CHECK(config.minor_threshold == 70);
  CHECK(config.mds_alpha == doctest::Approx(1.0));
  CHECK(config.mds_beta == doctest::Approx(0.1));
  CHECK(config.seed == 42);
  CHECK(config.lda_iterations == 1000);
  CHECK(config.threads == 0);

  HierarchyConfig hierarchy = config.hierarchy();
  CHECK(hierarchy.k == 9);
  CHECK(hierarchy.size_threshold == 200);
  CHECK(hierarchy.lda.seed == 42);
  CHECK(hierarchy.lda.iterations == 1000);
  MdsConfig mds = config.mds();
  CHECK(mds.alpha == doctest::Approx(1.0));
  CHECK(mds.beta == doctest::Approx(0.1));
}

TEST_CASE("config errors name the offending line") {
  testutil::TempDir dir;
  write_file(dir.file("a.conf"), "wibble = 3\n");
  CHECK_THROWS_WITH_AS(load_pipeline_config(dir.file("a.conf")),
                       "config line 1: unknown key 'wibble'", Error);
  write_file(dir.file("b.conf"), "corpus = a.jsonl\njust some text\n");
  CHECK_THROWS_WITH_AS(load_pipeline_config(dir.file("b.conf")),
                       "config line 2: expected key = value", Error);
  write_file(dir.file("c.conf"), "lambda = abc\n");
  CHECK_THROWS_WITH_AS(load_pipeline_config(dir.file("c.conf")),
                       "config line 1: invalid number 'abc'", Error);
  write_file(dir.file("d.conf"), "format = xml\n");
  CHECK_THROWS_WITH_AS(load_pipeline_config(dir.file("d.conf")),
                       "config line 1: unknown format 'xml'", Error);
  write_file(dir.file("e.conf"), "lambda = 0.5\n");
  CHECK_THROWS_WITH_AS(load_pipeline_config(dir.file("e.conf")),
                       "config: missing 'corpus' entry", Error);
  CHECK_THROWS_AS(load_pipeline_config(dir.file("missing.conf")), Error);
}

TEST_CASE("summarize stage is identical across thread counts") {
  Corpus corpus = testutil::news_corpus(1);
  std::vector<Summary> serial = stage_summarize(corpus, 0.3, 1);
  std::vector<Summary> parallel = stage_summarize(corpus, 0.3, 4);
  REQUIRE(serial.size() == corpus.documents.size());
  REQUIRE(parallel.size() == serial.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    check_same_summary(serial[i], parallel[i]);
  }

  SummaryInput input = to_summary_input(serial[0]);
  CHECK(input.doc_id == serial[0].doc_id);
  CHECK(input.sentence_indexes == serial[0].sentence_indexes);
  CHECK(input.sentence_texts == serial[0].sentence_texts);
  CHECK(input.sentence_scores == serial[0].sentence_scores);
}

TEST_CASE("summaries jsonl round-trips") {
  testutil::TempDir dir;
  Corpus corpus = testutil::news_corpus(1);
  std::vector<Summary> summaries = stage_summarize(corpus, 0.25, 1);
  write_summaries_jsonl(dir.file("summaries.jsonl"), summaries);
  std::vector<SummaryInput> loaded = read_summaries_jsonl(dir.file("summaries.jsonl"));
  REQUIRE(loaded.size() == summaries.size());
  for (size_t i = 0; i < loaded.size(); ++i) {
    SummaryInput expected = to_summary_input(summaries[i]);
    CHECK(loaded[i].doc_id == expected.doc_id);
    CHECK(loaded[i].sentence_indexes == expected.sentence_indexes);
    CHECK(loaded[i].sentence_texts == expected.sentence_texts);
    REQUIRE(loaded[i].sentence_scores.size() == expected.sentence_scores.size());
    for (size_t s = 0; s < expected.sentence_scores.size(); ++s) {
      CHECK(loaded[i].sentence_scores[s] == doctest::Approx(expected.sentence_scores[s]));
    }
  }
}

TEST_CASE("summaries jsonl fills missing scores and skips blank lines") {
  testutil::TempDir dir;
  write_file(dir.file("s.jsonl"),
             "{\"id\":\"d1\",\"sentence_indexes\":[0,2],\"text\":\"First one. \\nThird one.\"}\n"
             "\n"
             "   \n");
  std::vector<SummaryInput> loaded = read_summaries_jsonl(dir.file("s.jsonl"));
  REQUIRE(loaded.size() == 1);
  CHECK(loaded[0].doc_id == "d1");
  REQUIRE(loaded[0].sentence_texts.size() == 2);
  CHECK(loaded[0].sentence_scores == std::vector<double>{1.0, 1.0});

  write_file(dir.file("bad.jsonl"), "{not json\n");
  try {
    read_summaries_jsonl(dir.file("bad.jsonl"));
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("summaries record 1: invalid JSON:", 0) == 0);
  }
}

TEST_CASE("stage errors name the missing summary") {
  ClusterTree tree;
  ClusterNode root;
  root.id = "c0";
  root.level = 1;
  root.member_ids = {"d9"};
  root.member_p = {1.0};
  tree.roots.push_back(root);
  tree.config.k = 1;
  std::vector<SummaryInput> none;
  CHECK_THROWS_WITH_AS(stage_sections(tree, none, MdsConfig{}, 1),
                       "stage_sections: no summary for document d9", Error);
  CHECK_THROWS_WITH_AS(stage_titles(tree, none),
                       "stage_titles: no summary for document d9", Error);
}

TEST_CASE("pipeline run writes deterministic artifacts") {
  testutil::TempDir dir;
  Corpus corpus = testutil::news_corpus(2);
  std::string corpus_path =
      testutil::write_jsonl_corpus(corpus, dir.file("newsrun.jsonl"));

  PipelineConfig config = base_config(corpus_path, dir.file("out1"));
  config.corpus_name = "newswire";
  PipelineResult result = run_pipeline(config);

  CHECK(result.filtered.documents.size() == corpus.documents.size());
  CHECK(result.removed.empty());
  CHECK(result.summaries.size() == corpus.documents.size());
  REQUIRE(result.tree.roots.size() == 3);

  // Every document lands in exactly one first-level cluster.
  std::multiset<std::string> clustered;
  for (const auto& root : result.tree.roots) {
    clustered.insert(root.member_ids.begin(), root.member_ids.end());
    if (!root.children.empty()) {
      std::multiset<std::string> from_children;
      for (const auto& child : root.children) {
        from_children.insert(child.member_ids.begin(), child.member_ids.end());
      }
      CHECK(from_children ==
            std::multiset<std::string>(root.member_ids.begin(), root.member_ids.end()));
    }
  }
  std::multiset<std::string> everything;
  for (const auto& doc : corpus.documents) everything.insert(doc.id);
  CHECK(clustered == everything);

  // One section per nonempty leaf, inside its length budget.
  std::vector<const ClusterNode*> leaves = collect_leaves(result.tree);
  CHECK(result.sections.size() == leaves.size());
  for (const ClusterNode* leaf : leaves) {
    auto it = result.sections.find(leaf->id);
    REQUIRE(it != result.sections.end());
    CHECK(it->second.budget == target_length(static_cast<int>(leaf->member_ids.size())));
    CHECK(it->second.word_count <= it->second.budget);
    CHECK(!it->second.text.empty());
    CHECK(!it->second.sentences.empty());
  }
  for (const auto& root : result.tree.roots) {
    if (!root.empty()) CHECK(result.titles.count(root.id) == 1);
  }
  CHECK(result.report.title == "newswire Overview");
  CHECK(result.report.sections.size() + result.report.other_topics.size() > 0);
  CHECK(result.timings.size() == 7);

  for (const char* name :
       {"filter_log.csv", "summaries.jsonl", "tree.json", "sections.json",
        "titles.json", "report.md", "report.json", "run_manifest.json"}) {
    CHECK(std::filesystem::exists(dir.path() / "out1" / name));
  }

  nlohmann::json manifest =
      nlohmann::json::parse(slurp(dir.path() / "out1" / "run_manifest.json"));
  CHECK(manifest["documents"] == corpus.documents.size());
  CHECK(manifest["removed"] == 0);
  CHECK(manifest["k"] == 3);
  CHECK(manifest["seed"] == 42);
  CHECK(manifest["name"] == "newswire");
  CHECK(manifest["stage_seconds"].size() == 7);
  CHECK(manifest["total_seconds"].get<double>() >= 0.0);

  // A second identical run reproduces every content artifact byte for byte.
  PipelineConfig again = config;
  again.output_dir = dir.file("out2");
  run_pipeline(again);
  for (const char* name :
       {"summaries.jsonl", "tree.json", "sections.json", "titles.json",
        "report.md", "report.json", "filter_log.csv"}) {
    CHECK(slurp(dir.path() / "out1" / name) == slurp(dir.path() / "out2" / name));
  }

  // Artifacts reload into the structures that produced them.
  nlohmann::json tree_json = nlohmann::json::parse(slurp(dir.path() / "out1" / "tree.json"));
  ClusterTree reloaded = tree_from_json(tree_json);
  CHECK(tree_to_json(reloaded) == tree_json);
  nlohmann::json sections_json =
      nlohmann::json::parse(slurp(dir.path() / "out1" / "sections.json"));
  CHECK(sections_to_json(sections_from_json(sections_json)) == sections_json);
  std::vector<SummaryInput> reread =
      read_summaries_jsonl(dir.path() / "out1" / "summaries.jsonl");
  CHECK(reread.size() == result.summaries.size());
}

TEST_CASE("tree json accepts a bare node array") {
  nlohmann::json nodes = nlohmann::json::array();
  nodes.push_back({{"id", "c0"},
                   {"level", 1},
                   {"score", 0.5},
                   {"member_ids", {"a", "b"}},
                   {"p", {0.9, 0.8}},
                   {"top_words", nlohmann::json::array()},
                   {"children", nlohmann::json::array()}});
  ClusterTree tree = tree_from_json(nodes);
  REQUIRE(tree.roots.size() == 1);
  CHECK(tree.roots[0].member_ids == std::vector<std::string>{"a", "b"});
  CHECK(tree.config.k == 1);
}

TEST_CASE("pipeline rejects a corpus that filters to nothing") {
  testutil::TempDir dir;
  Corpus corpus;
  corpus.documents.push_back(
      make_document("junk", "t", "zzz qqq vvx kkz pqr zzt", "", "unit", ""));
  std::string path = testutil::write_jsonl_corpus(corpus, dir.file("junk.jsonl"));
  PipelineConfig config = base_config(path, "");
  CHECK_THROWS_WITH_AS(run_pipeline(config),
                       "run_pipeline: every document was filtered out", Error);
}

TEST_CASE("evaluation scores, weighs and ranks pipeline runs") {
  testutil::TempDir dir;
  Corpus corpus = testutil::news_corpus(1);
  std::string corpus_path =
      testutil::write_jsonl_corpus(corpus, dir.file("news.jsonl"));

  std::vector<double> lambdas = {0.1, 0.2, 0.3};
  std::vector<std::string> run_dirs;
  for (size_t i = 0; i < lambdas.size(); ++i) {
    PipelineConfig config =
        base_config(corpus_path, dir.file("r0" + std::to_string(i + 1)));
    config.lda_iterations = 200;
    config.lambda = lambdas[i];
    run_pipeline(config);
    run_dirs.push_back(config.output_dir);
  }

  write_file(dir.file("human.csv"),
             "run,annotator,score\n"
             "r01,a,3.0\n"
             "r01,b,4.0\n"
             "r02,a,4.5\n"
             "r03,a,2.0\n");

  EvalOptions options;
  options.run_dirs = run_dirs;
  options.human_csv = dir.file("human.csv");
  nlohmann::json out = run_eval(options);

  REQUIRE(out["runs"].size() == 3);
  CHECK(out["runs"][0]["run"] == "r01");
  CHECK(out["runs"][0]["human"].get<double>() == doctest::Approx(3.5));
  CHECK(out["runs"][1]["human"].get<double>() == doctest::Approx(4.5));
  CHECK(out["runs"][2]["human"].get<double>() == doctest::Approx(2.0));
  for (const auto& run : out["runs"]) {
    CHECK(run["time_seconds"].get<double>() > 0.0);
    CHECK(run["coverage"].get<double>() > 0.0);
    CHECK(run["coverage"].get<double>() <= 1.0);
    CHECK(run["diversity"].get<double>() >= 0.0);
  }

  // Default pairwise matrix is the consistent 8:4:2:1 ladder.
  REQUIRE(out["criteria"].size() == 4);
  CHECK(out["criteria"][0]["name"] == "human");
  CHECK(out["criteria"][0]["direction"] == "benefit");
  CHECK(out["criteria"][1]["name"] == "time");
  CHECK(out["criteria"][1]["direction"] == "cost");
  CHECK(out["criteria"][0]["weight"].get<double>() == doctest::Approx(8.0 / 15).epsilon(1e-9));
  CHECK(out["criteria"][1]["weight"].get<double>() == doctest::Approx(4.0 / 15).epsilon(1e-9));
  CHECK(out["criteria"][2]["weight"].get<double>() == doctest::Approx(2.0 / 15).epsilon(1e-9));
  CHECK(out["criteria"][3]["weight"].get<double>() == doctest::Approx(1.0 / 15).epsilon(1e-9));
  CHECK(out["consistent"] == true);
  CHECK(out["consistency_ratio"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));

  REQUIRE(out["ranking"].size() == 3);
  std::set<int> ranks;
  for (const auto& row : out["ranking"]) {
    ranks.insert(row["rank"].get<int>());
    CHECK(row["closeness"].get<double>() >= 0.0);
    CHECK(row["closeness"].get<double>() <= 1.0);
  }
  CHECK(ranks == std::set<int>{1, 2, 3});

  REQUIRE(out["sensitivity"].size() == 4);
  for (const auto& sweep : out["sensitivity"]) {
    for (const char* direction : {"up", "down"}) {
      const auto& steps = sweep[direction]["steps"];
      CHECK(!steps.empty());
      for (const auto& step : steps) {
        REQUIRE(step["weights"].size() == 4);
        double total = 0.0;
        for (const auto& w : step["weights"]) total += w.get<double>();
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(step["ranking"].size() == 3);
      }
    }
  }

  // Without human scores the criteria drop to time, coverage, diversity.
  EvalOptions bare;
  bare.run_dirs = {run_dirs[0], run_dirs[1]};
  nlohmann::json quick = run_eval(bare);
  REQUIRE(quick["criteria"].size() == 3);
  CHECK(quick["criteria"][0]["name"] == "time");
  CHECK(quick["criteria"][0]["weight"].get<double>() == doctest::Approx(4.0 / 7).epsilon(1e-9));
  CHECK(quick["ranking"].size() == 2);

  EvalOptions sized = options;
  sized.pairwise_csv = dir.file("pairwise.csv");
  write_file(sized.pairwise_csv, "1,2\n0.5,1\n");
  CHECK_THROWS_WITH_AS(run_eval(sized),
                       "run_eval: pairwise matrix size does not match criterion count",
                       Error);

  CHECK_THROWS_WITH_AS(run_eval(EvalOptions{}), "run_eval: no run directories given",
                       Error);

  EvalOptions missing = options;
  write_file(dir.file("partial.csv"), "run,score\nr01,3.0\n");
  missing.human_csv = dir.file("partial.csv");
  missing.run_dirs = {run_dirs[0], run_dirs[1]};
  CHECK_THROWS_WITH_AS(run_eval(missing), "human scores: no rows for run 'r02'", Error);
}

}  // TEST_SUITE
