// Evaluation stack: clustering agreement (optimal matching + F1), corpus
// coverage, topic diversity, AHP criterion weights, TOPSIS ranking and
// weight sensitivity analysis.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ndorgs/topics.hpp"

namespace ndorgs {

// A clustering is a list of item sets. Document clusterings are disjoint;
// word-set clusterings (topic top words) may overlap.
using Clustering = std::vector<std::set<std::string>>;

// Set difference distance |X ∪ Y| − |X ∩ Y|.
int set_delta(const std::set<std::string>& x, const std::set<std::string>& y);

// F1 of predicted cluster y against reference x; 0 when either is empty or
// they do not intersect.
double set_f1(const std::set<std::string>& x, const std::set<std::string>& y);

// Minimum-cost perfect assignment on a square cost matrix (O(n^3)).
// Returns the assigned column for each row.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

// Optimal one-to-one matching of predicted clusters to reference clusters:
// both sides are padded with empty clusters to equal length, total set
// difference is minimized, and ties favor higher total F1. Element i maps
// predicted cluster i to a reference index.
std::vector<int> match_clusters(const Clustering& reference, const Clustering& predicted);

// Mean F1 over the optimal matching, in [0, 1]; 1 exactly when the
// clusterings are equal up to order.
double csd_f1(const Clustering& reference, const Clustering& predicted);

// |top-k(A) ∩ top-k(B)| / k_eff where k_eff = min(k, |A|, |B|).
double coverage_score(const std::vector<std::string>& corpus_top,
                      const std::vector<std::string>& report_top, int k);

// Topic diversity: LDA with the same configuration is fit to the corpus
// documents and to the report sentences; the two top-m word-set families
// are compared with csd_f1.
double diversity_score(const std::vector<std::vector<std::string>>& corpus_docs,
                       const std::vector<std::vector<std::string>>& report_sentences,
                       const LdaConfig& config, int top_m = 10);

struct AhpResult {
  Eigen::VectorXd weights;  // normalized to sum 1
  double lambda_max = 0.0;
  double consistency_ratio = 0.0;
  bool consistent = true;  // CR <= 0.1
};

// Principal-eigenvector weights of a positive reciprocal pairwise matrix
// (power iteration, tolerance 1e-10). Entries must lie in [1/9, 9].
AhpResult ahp_weights(const Eigen::MatrixXd& pairwise);

struct CriterionSpec {
  std::string name;
  bool is_cost = false;
};

struct DecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<CriterionSpec> criteria;
  Eigen::MatrixXd values;  // alternatives x criteria
};

enum class TopsisNormalization { Vector, MinMax };

struct TopsisRow {
  std::string alternative;
  double closeness = 0.0;
  int rank = 0;  // 1 is best
};

// TOPSIS: columns are normalized (Euclidean by default), weighted, and
// alternatives ranked by closeness to the ideal solution. Cost criteria
// invert the ideal direction. Rows keep input order; ranks break ties by
// input order.
std::vector<TopsisRow> topsis_rank(const DecisionMatrix& matrix,
                                   const Eigen::VectorXd& weights,
                                   TopsisNormalization normalization =
                                       TopsisNormalization::Vector);

struct SensitivityStep {
  Eigen::VectorXd weights;   // sums to 1
  std::vector<int> ranking;  // alternative indexes best to worst
};

struct SensitivityDirection {
  std::vector<SensitivityStep> steps;
  std::optional<int> crossover;  // 1-based step where the top alternative changed
};

struct SensitivitySweep {
  int criterion = 0;
  SensitivityDirection up;
  SensitivityDirection down;
};

// Perturbs one criterion weight in +/- `step` increments, rescaling the
// others proportionally so weights keep summing to 1. Each direction stops
// at the first top-rank change, a weight boundary, or `max_steps`.
SensitivitySweep sensitivity_analysis(const DecisionMatrix& matrix,
                                      const Eigen::VectorXd& weights, int criterion,
                                      double step = 0.02, int max_steps = 25,
                                      TopsisNormalization normalization =
                                          TopsisNormalization::Vector);

// CSV helpers. Matrix header: alternative,<name>:benefit,<name>:cost,...
DecisionMatrix read_decision_matrix_csv(const std::string& path);
Eigen::MatrixXd read_pairwise_csv(const std::string& path);

}  // namespace ndorgs
