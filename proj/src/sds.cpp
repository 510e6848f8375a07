#include "ndorgs/sds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "ndorgs/errors.hpp"
#include "ndorgs/text.hpp"
#include "ndorgs/wordlists.hpp"

namespace ndorgs {

WordGraph build_word_graph(const Document& doc, const SdsConfig& config) {
  if (config.window < 2) throw Error("build_word_graph: window must be at least 2");
  WordGraph graph;
  const auto& stop = stopwords();
  auto node = [&](const std::string& word) {
    auto it = graph.index.find(word);
    if (it != graph.index.end()) return it->second;
    int id = static_cast<int>(graph.words.size());
    graph.index.emplace(word, id);
    graph.words.push_back(word);
    return id;
  };
  std::map<std::pair<int, int>, double> weight;
  for (const auto& sentence : doc.sentences) {
    const auto& tokens = sentence.tokens;
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (stop.count(tokens[i])) continue;
      int a = node(tokens[i]);
      size_t limit = std::min(tokens.size(), i + static_cast<size_t>(config.window));
      for (size_t j = i + 1; j < limit; ++j) {
        if (stop.count(tokens[j])) continue;
        int b = node(tokens[j]);
        if (a == b) continue;
        weight[{std::min(a, b), std::max(a, b)}] += 1.0;
      }
    }
  }
  graph.edges.resize(graph.words.size());
  for (const auto& [pair, w] : weight) {
    graph.edges[pair.first].push_back({pair.second, w});
    graph.edges[pair.second].push_back({pair.first, w});
  }
  // Bias: 1 per word, raised for title words and first/last-sentence words,
  // then normalized to a distribution.
  graph.bias.assign(graph.words.size(), 1.0);
  std::unordered_set<std::string> title_words;
  for (const auto& t : tokenize(doc.title)) title_words.insert(t);
  std::unordered_set<std::string> position_words;
  if (!doc.sentences.empty()) {
    for (const auto& t : doc.sentences.front().tokens) position_words.insert(t);
    for (const auto& t : doc.sentences.back().tokens) position_words.insert(t);
  }
  for (size_t i = 0; i < graph.words.size(); ++i) {
    if (title_words.count(graph.words[i])) graph.bias[i] += config.title_bias;
    if (position_words.count(graph.words[i])) graph.bias[i] += config.position_bias;
  }
  double total = std::accumulate(graph.bias.begin(), graph.bias.end(), 0.0);
  if (total > 0) {
    for (double& b : graph.bias) b /= total;
  }
  return graph;
}

WordRanks rank_words(const WordGraph& graph, const SdsConfig& config) {
  WordRanks ranks;
  size_t n = graph.words.size();
  if (n == 0) return ranks;
  std::vector<double> out_weight(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    for (const auto& [j, w] : graph.edges[i]) {
      (void)j;
      out_weight[i] += w;
    }
  }
  std::vector<double> rank = graph.bias;
  std::vector<double> next(n);
  double d = config.damping;
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    double dangling = 0.0;
    for (size_t i = 0; i < n; ++i) {
      if (out_weight[i] == 0.0) dangling += rank[i];
    }
    for (size_t i = 0; i < n; ++i) {
      next[i] = (1.0 - d) * graph.bias[i] + d * dangling * graph.bias[i];
    }
    for (size_t i = 0; i < n; ++i) {
      if (out_weight[i] == 0.0) continue;
      double share = d * rank[i] / out_weight[i];
      for (const auto& [j, w] : graph.edges[i]) {
        next[j] += share * w;
      }
    }
    double delta = 0.0;
    for (size_t i = 0; i < n; ++i) delta += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (delta < config.epsilon) break;
  }
  for (size_t i = 0; i < n; ++i) {
    ranks.raw.emplace(graph.words[i], rank[i]);
    ranks.score.emplace(graph.words[i], softplus(rank[i]));
  }
  return ranks;
}

std::map<int, double> score_sentences(const Document& doc, const WordRanks& ranks) {
  std::map<int, double> scores;
  for (const auto& sentence : doc.sentences) {
    std::unordered_set<std::string> seen;
    double sum = 0.0;
    for (const auto& token : sentence.tokens) {
      auto it = ranks.score.find(token);
      if (it == ranks.score.end()) continue;
      if (seen.insert(token).second) sum += it->second;
    }
    scores[sentence.index] = sum / (1.0 + std::log(1.0 + sentence.word_count));
  }
  return scores;
}

int Summary::word_count(const Document& doc) const {
  int n = 0;
  for (int idx : sentence_indexes) n += doc.sentences[idx].word_count;
  return n;
}

std::string Summary::text() const {
  std::string out;
  for (size_t i = 0; i < sentence_texts.size(); ++i) {
    if (i) out.push_back('\n');
    out += sentence_texts[i];
  }
  return out;
}

Summary summarize(const Document& doc, double lambda, const SdsConfig& config) {
  if (doc.sentences.empty()) throw Error("summarize: document '" + doc.id + "' has no sentences");
  if (lambda <= 0.0 || lambda > 1.0) throw Error("summarize: lambda must be in (0, 1]");
  WordRanks ranks = rank_words(build_word_graph(doc, config), config);
  std::map<int, double> scores = score_sentences(doc, ranks);
  std::vector<int> order(doc.sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  int budget = static_cast<int>(std::ceil(lambda * doc.word_count()));
  std::vector<int> picked;
  int total = 0;
  for (int idx : order) {
    int wc = doc.sentences[idx].word_count;
    if (picked.empty()) {
      picked.push_back(idx);
      total += wc;
      continue;
    }
    if (total + wc > budget) break;
    picked.push_back(idx);
    total += wc;
  }
  std::sort(picked.begin(), picked.end());
  Summary summary;
  summary.doc_id = doc.id;
  summary.lambda = lambda;
  summary.sentence_indexes = picked;
  for (int idx : picked) {
    summary.sentence_texts.push_back(doc.sentences[idx].text);
    summary.sentence_scores.push_back(scores[idx]);
  }
  summary.all_scores = std::move(scores);
  return summary;
}

}  // namespace ndorgs
