#include <doctest.h>

#include <algorithm>
#include <random>

#include "ndorgs/errors.hpp"
#include "ndorgs/mds.hpp"

using namespace ndorgs;

namespace {

MdsSentence sentence(std::string doc, int index, std::vector<std::string> content,
                     double salience, int length) {
  MdsSentence s;
  s.doc_id = std::move(doc);
  s.sentence_index = index;
  s.content = std::move(content);
  std::sort(s.content.begin(), s.content.end());
  s.salience = salience;
  s.length = length;
  return s;
}

// True optimum over every feasible ordered selection (nonempty subsets with
// total length under budget and no redundant pair, in every order).
double brute_force_best(const DiscourseGraph& graph, int budget,
                        const MdsConfig& config) {
  int n = static_cast<int>(graph.sentences.size());
  double best = -1e18;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> subset;
    int words = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) {
        subset.push_back(i);
        words += graph.sentences[i].length;
      }
    }
    if (words >= budget) continue;
    bool ok = true;
    for (size_t a = 0; a < subset.size() && ok; ++a) {
      for (size_t b = a + 1; b < subset.size() && ok; ++b) {
        if (redundancy(graph.sentences[subset[a]], graph.sentences[subset[b]])) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::sort(subset.begin(), subset.end());
    do {
      best = std::max(best, mds_objective(graph, subset, config));
    } while (std::next_permutation(subset.begin(), subset.end()));
  }
  return best;
}

}  // namespace

TEST_SUITE("mds") {

TEST_CASE("discourse graph normalizes salience per summary") {
  SummaryInput a;
  a.doc_id = "a";
  a.sentence_indexes = {0, 2};
  a.sentence_texts = {"Strong growth in exports.", "Trade figures improved."};
  a.sentence_scores = {2.0, 1.0};
  SummaryInput b;
  b.doc_id = "b";
  b.sentence_indexes = {1};
  b.sentence_texts = {"The bank cut rates."};
  b.sentence_scores = {0.25};
  DiscourseGraph graph = build_discourse_graph({a, b});
  REQUIRE(graph.sentences.size() == 3);
  CHECK(graph.sentences[0].salience == doctest::Approx(1.0));
  CHECK(graph.sentences[1].salience == doctest::Approx(0.5));
  CHECK(graph.sentences[2].salience == doctest::Approx(1.0));  // best of its summary
  CHECK(graph.sentences[0].length == 4);
  CHECK(graph.sentences[0].content ==
        std::vector<std::string>{"exports", "growth", "strong"});
  CHECK(graph.weights.rows() == 3);
  CHECK(graph.weights.diagonal().isZero());
}

TEST_CASE("edge rules: shared pair, marker opening, adjacency") {
  SummaryInput a;
  a.doc_id = "a";
  a.sentence_indexes = {0, 1, 5};
  a.sentence_texts = {"The bank raised rates.",
                      "However, rates stayed high.",
                      "Commercial bank rates fell."};
  a.sentence_scores = {1.0, 1.0, 1.0};
  DiscourseGraph g = build_discourse_graph({a});
  REQUIRE(g.sentences.size() == 3);
  // 0 -> 1: marker + one shared word, plus same-document adjacency
  CHECK(g.weights(0, 1) == 2);
  // 1 -> 0: no marker on 0, only one shared word, no adjacency
  CHECK(g.weights(1, 0) == 0);
  // 0 <-> 2: two shared words both ways, no adjacency (indexes 0 and 5)
  CHECK(g.weights(0, 2) == 1);
  CHECK(g.weights(2, 0) == 1);
  // 2 -> 1: shares "rates" and 1 opens with a marker
  CHECK(g.weights(2, 1) == 1);
}

TEST_CASE("adjacency requires the same document and consecutive indexes") {
  SummaryInput a;
  a.doc_id = "a";
  a.sentence_indexes = {3};
  a.sentence_texts = {"Oil output rose."};
  a.sentence_scores = {1.0};
  SummaryInput b;
  b.doc_id = "b";
  b.sentence_indexes = {4};
  b.sentence_texts = {"Gas reserves shrank."};
  b.sentence_scores = {1.0};
  DiscourseGraph g = build_discourse_graph({a, b});
  CHECK(g.weights(0, 1) == 0);
  CHECK(g.weights(1, 0) == 0);
}

TEST_CASE("all three rules stack on one edge") {
  SummaryInput a;
  a.doc_id = "a";
  a.sentence_indexes = {3, 4};
  a.sentence_texts = {"The bank raised rates.", "However, bank rates stayed."};
  a.sentence_scores = {1.0, 0.5};
  DiscourseGraph g = build_discourse_graph({a});
  CHECK(g.weights(0, 1) == 3);
  CHECK(g.weights(1, 0) == 1);  // only the shared pair fires backwards
}

TEST_CASE("redundancy is a strict jaccard threshold") {
  auto s1 = sentence("a", 0, {"bank", "rates"}, 1.0, 4);
  auto s2 = sentence("a", 1, {"bank", "rates"}, 1.0, 4);
  auto s3 = sentence("a", 2, {"bank", "loans"}, 1.0, 4);
  auto s4 = sentence("a", 3, {"oil", "gas"}, 1.0, 4);
  auto s5 = sentence("a", 4, {"bank", "rates", "loans"}, 1.0, 5);
  CHECK(redundancy(s1, s2) == 1);  // identical, jaccard 1
  CHECK(redundancy(s1, s3) == 0);  // jaccard 1/3
  CHECK(redundancy(s1, s4) == 0);  // disjoint
  CHECK(redundancy(s1, s5) == 1);  // jaccard 2/3
  auto e1 = sentence("a", 5, {}, 1.0, 2);
  auto e2 = sentence("a", 6, {}, 1.0, 2);
  CHECK(redundancy(e1, e2) == 1);  // both empty
  CHECK(redundancy(e1, s1) == 0);
}

TEST_CASE("target_length formula") {
  CHECK(target_length(5) == 300);
  CHECK(target_length(0) == 300);
  CHECK(target_length(65) == 1200);
  CHECK(target_length(69) == 1200);
  CHECK(target_length(70) == 1400);
  CHECK(target_length(120) == 2400);
}

TEST_CASE("mds_objective hand values") {
  DiscourseGraph g;
  g.sentences.push_back(sentence("a", 0, {"x"}, 1.0, 5));
  g.sentences.push_back(sentence("a", 1, {"y"}, 0.5, 5));
  g.weights = Eigen::MatrixXi::Zero(2, 2);
  g.weights(0, 1) = 2;
  MdsConfig config;  // alpha 1, beta 0.1
  CHECK(mds_objective(g, {0, 1}, config) == doctest::Approx(3.3));
  CHECK(mds_objective(g, {1, 0}, config) == doctest::Approx(1.3));
  CHECK(mds_objective(g, {0}, config) == doctest::Approx(0.9));
  CHECK(mds_objective(g, {}, config) == doctest::Approx(0.0));
}

TEST_CASE("summarize_cluster respects the strict budget and redundancy") {
  DiscourseGraph g;
  g.sentences.push_back(sentence("a", 0, {"bank", "rates"}, 1.0, 6));
  g.sentences.push_back(sentence("a", 1, {"bank", "rates", "cut"}, 0.9, 6));
  g.sentences.push_back(sentence("b", 0, {"oil", "gas"}, 0.8, 6));
  g.sentences.push_back(sentence("c", 0, {"trade", "deal"}, 0.7, 6));
  g.weights = Eigen::MatrixXi::Zero(4, 4);
  MdsSelection sel = summarize_cluster(g, 19);
  CHECK(sel.word_count < 19);
  CHECK(sel.budget == 19);
  // 0 and 1 are redundant (jaccard 2/3), so at most one of them appears
  int redundant_pair = 0;
  for (int id : sel.order) {
    if (id == 0 || id == 1) ++redundant_pair;
  }
  CHECK(redundant_pair <= 1);
  CHECK(sel.objective == doctest::Approx(mds_objective(g, sel.order, MdsConfig{})));
}

TEST_CASE("summarize_cluster throws when nothing fits") {
  DiscourseGraph g;
  g.sentences.push_back(sentence("a", 0, {"x"}, 1.0, 10));
  g.weights = Eigen::MatrixXi::Zero(1, 1);
  CHECK_THROWS_AS(summarize_cluster(g, 10), Error);
  CHECK_THROWS_AS(summarize_cluster(DiscourseGraph{}, 100), Error);
}

TEST_CASE("presentation order starts at the most salient sentence") {
  DiscourseGraph g;
  g.sentences.push_back(sentence("a", 0, {"alpha"}, 0.5, 3));
  g.sentences.push_back(sentence("b", 0, {"beta"}, 1.0, 3));
  g.sentences.push_back(sentence("c", 0, {"gamma"}, 0.8, 3));
  g.weights = Eigen::MatrixXi::Zero(3, 3);
  g.weights(1, 2) = 2;  // the chain follows the heaviest outgoing edge
  g.weights(1, 0) = 1;
  g.weights(2, 0) = 1;
  MdsSelection sel = summarize_cluster(g, 100);
  REQUIRE(sel.order.size() == 3);
  CHECK(sel.order == std::vector<int>{1, 2, 0});
  CHECK(selection_text(g, sel) == "  ");  // three empty texts joined by spaces
}

TEST_CASE("greedy plus local search stays near the exhaustive optimum") {
  std::mt19937 rng(1234);
  MdsConfig config;
  for (int instance = 0; instance < 30; ++instance) {
    int n = 4 + static_cast<int>(rng() % 4);
    DiscourseGraph g;
    for (int i = 0; i < n; ++i) {
      // word i/2: consecutive pairs share a single-word content set and are
      // therefore mutually redundant
      std::string word = "w" + std::to_string(i / 2);
      double sal = i == 0 ? 1.0 : 0.1 + 0.8 * (static_cast<double>(rng() % 100) / 100.0);
      int len = 3 + static_cast<int>(rng() % 7);
      g.sentences.push_back(sentence("d" + std::to_string(i % 3), i / 3, {word}, sal, len));
    }
    g.weights = Eigen::MatrixXi::Zero(n, n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x != y) g.weights(x, y) = static_cast<int>(rng() % 3);
      }
    }
    int budget = 10 + static_cast<int>(rng() % 16);
    MdsSelection sel = summarize_cluster(g, budget, config);
    double opt = brute_force_best(g, budget, config);
    CHECK(sel.objective >= 0.8 * opt);
    CHECK(sel.objective <= opt + 1e-9);
    CHECK(sel.word_count < budget);
    for (size_t a = 0; a < sel.order.size(); ++a) {
      for (size_t b = a + 1; b < sel.order.size(); ++b) {
        CHECK(redundancy(g.sentences[sel.order[a]], g.sentences[sel.order[b]]) == 0);
      }
    }
    // determinism
    MdsSelection again = summarize_cluster(g, budget, config);
    CHECK(again.order == sel.order);
  }
}

}  // TEST_SUITE
