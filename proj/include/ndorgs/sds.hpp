// Single-document summarization: a co-occurrence word graph is ranked with
// biased PageRank, sentences are scored from their word scores, and a
// length-budgeted extract is selected greedily.
#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ndorgs/corpus.hpp"

namespace ndorgs {

struct WordGraph {
  std::vector<std::string> words;                      // node order
  std::unordered_map<std::string, int> index;          // word -> node
  std::vector<std::vector<std::pair<int, double>>> edges;  // undirected, stored per node
  std::vector<double> bias;                            // normalized, sums to 1
};

struct SdsConfig {
  int window = 4;
  double damping = 0.85;
  double epsilon = 1e-6;
  int max_iterations = 200;
  double title_bias = 1.0;     // added to words appearing in the title
  double position_bias = 0.5;  // added to words in the first or last sentence
};

// Co-occurrence graph over the document's content words: an edge connects two
// distinct content words within `window` token positions of each other in a
// sentence; weights count co-occurrences. Bias starts at 1 per word.
WordGraph build_word_graph(const Document& doc, const SdsConfig& config = {});

struct WordRanks {
  std::unordered_map<std::string, double> raw;    // stationary scores, sum to 1
  std::unordered_map<std::string, double> score;  // softplus of raw
};

// Biased PageRank with dangling mass redistributed by the bias vector.
WordRanks rank_words(const WordGraph& graph, const SdsConfig& config = {});

// Sentence score: sum of its distinct content-word scores, divided by
// 1 + ln(1 + word_count). Sentences without content words score 0.
std::map<int, double> score_sentences(const Document& doc, const WordRanks& ranks);

struct Summary {
  std::string doc_id;
  double lambda = 0.0;
  std::vector<int> sentence_indexes;  // ascending document order
  std::vector<std::string> sentence_texts;
  std::vector<double> sentence_scores;
  std::map<int, double> all_scores;  // score of every sentence in the document

  int word_count(const Document& doc) const;
  std::string text() const;  // sentences joined with newlines
};

// Extractive summary within a budget of ceil(lambda * document word count):
// sentences are taken in score order (ties to the lower index); the best
// sentence is always included, after which any sentence that would overflow
// the budget stops the selection.
Summary summarize(const Document& doc, double lambda, const SdsConfig& config = {});

}  // namespace ndorgs
