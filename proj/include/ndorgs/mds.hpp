// Multi-document summarization of one cluster: a discourse graph over the
// pooled single-document summary sentences, and a budgeted selection that
// balances salience, coherence and length.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ndorgs {

struct MdsSentence {
  std::string doc_id;
  int sentence_index = 0;  // position in the source document
  std::string text;
  std::vector<std::string> content;  // distinct content tokens, sorted
  double salience = 0.0;             // in [0, 1], best sentence of a document = 1
  int length = 0;                    // word tokens
};

struct DiscourseGraph {
  std::vector<MdsSentence> sentences;
  Eigen::MatrixXi weights;  // directed edge weights, zero diagonal
};

struct SummaryInput {
  std::string doc_id;
  std::vector<int> sentence_indexes;
  std::vector<std::string> sentence_texts;
  std::vector<double> sentence_scores;
};

// Builds the discourse graph over all sentences of the given summaries.
// Edge weight from x to y adds 1 for each rule that fires: they share at
// least two content tokens; y opens with a discourse marker and shares at
// least one content token with x; y directly follows x in the same document.
DiscourseGraph build_discourse_graph(const std::vector<SummaryInput>& summaries);

// Redundancy indicator: 1 when the Jaccard similarity of the two content
// token sets exceeds 0.5 (two empty sets are fully redundant), else 0.
int redundancy(const MdsSentence& a, const MdsSentence& b);

// Word budget for a cluster of the given document count.
int target_length(int cluster_size);

struct MdsConfig {
  double alpha = 1.0;  // coherence weight
  double beta = 0.1;   // length penalty per sentence
  int max_moves = 1000;
};

struct MdsSelection {
  std::vector<int> order;  // selected sentence ids in presentation order
  double objective = 0.0;
  int budget = 0;
  int word_count = 0;
};

// Objective of an ordered selection: total salience plus alpha times the sum
// of consecutive edge weights, minus beta per sentence.
double mds_objective(const DiscourseGraph& graph, const std::vector<int>& order,
                     const MdsConfig& config);

// Budgeted selection under the strict word budget and pairwise
// non-redundancy: greedy growth restarted from the top-salience seed
// sentences, refined by add/replace/drop/transposition local search.
// Presentation order chains from the most salient sentence through the
// heaviest outgoing edges.
MdsSelection summarize_cluster(const DiscourseGraph& graph, int budget,
                               const MdsConfig& config = {});

std::string selection_text(const DiscourseGraph& graph, const MdsSelection& selection);

}  // namespace ndorgs
