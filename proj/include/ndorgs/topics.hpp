// Topic clustering: collapsed-Gibbs LDA, hard assignments, and a two-level
// cluster hierarchy with size-based subdivision.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ndorgs {

struct LdaConfig {
  int topics = 9;
  double alpha = 0.0;  // 0 selects 50 / topics
  double beta = 0.01;
  int iterations = 1000;
  std::uint64_t seed = 42;

  double effective_alpha() const { return alpha > 0.0 ? alpha : 50.0 / topics; }
};

struct TopicModel {
  int topics = 0;
  std::vector<std::string> vocabulary;
  Eigen::MatrixXd phi;    // topics x vocabulary, rows sum to 1
  Eigen::MatrixXd theta;  // documents x topics, rows sum to 1
};

// Fits LDA by collapsed Gibbs sampling. Deterministic for a fixed seed.
// Requires at least `topics` documents and a nonempty vocabulary.
TopicModel fit_lda(const std::vector<std::vector<std::string>>& documents,
                   const LdaConfig& config);

struct HardAssignment {
  std::vector<int> topic;  // per document, argmax of theta (ties to lower index)
  std::vector<double> p;   // the winning probability per document
};

HardAssignment assign_topics(const TopicModel& model);

// Cluster quality from member probabilities: (1/n^2) * sum of 2^p_i.
// Empty clusters score 0.
double score_cluster(const std::vector<double>& member_p);

// Subdivision width for an oversized cluster.
int subcluster_count(int cluster_size, int size_threshold);

// Deterministic fallback split: members already sorted by p descending are
// cut into `parts` consecutive runs of floor(n/parts) documents, with the
// remainder going to the last part.
std::vector<std::vector<int>> even_split(int n, int parts);

struct ClusterNode {
  std::string id;
  int level = 1;
  double score = 0.0;
  std::vector<std::string> member_ids;
  std::vector<double> member_p;
  std::vector<std::pair<std::string, double>> top_words;
  std::vector<ClusterNode> children;

  bool empty() const { return member_ids.empty(); }
  bool leaf() const { return children.empty(); }
};

struct HierarchyConfig {
  int k = 9;                // first-level topic count
  int size_threshold = 200; // subdivide clusters larger than this
  int top_words = 10;
  LdaConfig lda;            // seed/iterations/beta shared by every fit
};

struct ClusterTree {
  std::vector<ClusterNode> roots;  // one per first-level topic, possibly empty
  HierarchyConfig config;
};

// Two-level clustering of the given documents (parallel id/token lists).
// First-level clusters larger than the size threshold are refit with LDA;
// a refit that collapses into a single sub-cluster falls back to an even
// split of the p-sorted members. Oversized second-level clusters are also
// even-split and stay at level 2.
ClusterTree build_hierarchy(const std::vector<std::string>& doc_ids,
                            const std::vector<std::vector<std::string>>& doc_tokens,
                            const HierarchyConfig& config);

// All nonempty leaves in depth-first order.
std::vector<const ClusterNode*> collect_leaves(const ClusterTree& tree);

}  // namespace ndorgs
