#include "ndorgs/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include "ndorgs/errors.hpp"
#include "ndorgs/text.hpp"

namespace ndorgs {

int set_delta(const std::set<std::string>& x, const std::set<std::string>& y) {
  int intersection = 0;
  for (const auto& item : x) {
    if (y.count(item)) ++intersection;
  }
  int union_size = static_cast<int>(x.size() + y.size()) - intersection;
  return union_size - intersection;
}

double set_f1(const std::set<std::string>& x, const std::set<std::string>& y) {
  if (x.empty() || y.empty()) return 0.0;
  int intersection = 0;
  for (const auto& item : x) {
    if (y.count(item)) ++intersection;
  }
  if (intersection == 0) return 0.0;
  double precision = static_cast<double>(intersection) / static_cast<double>(y.size());
  double recall = static_cast<double>(intersection) / static_cast<double>(x.size());
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols()) throw Error("min_cost_assignment: matrix must be square");
  int n = static_cast<int>(cost.rows());
  if (n == 0) return {};
  // Shortest augmenting path algorithm with potentials, 1-based arrays.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> assignment(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] > 0) assignment[p[j] - 1] = j - 1;
  }
  return assignment;
}

namespace {

Clustering padded(const Clustering& c, size_t k) {
  Clustering out = c;
  while (out.size() < k) out.push_back({});
  return out;
}

}  // namespace

std::vector<int> match_clusters(const Clustering& reference, const Clustering& predicted) {
  size_t k = std::max(reference.size(), predicted.size());
  if (k == 0) return {};
  Clustering ref = padded(reference, k);
  Clustering pred = padded(predicted, k);
  // Combined cost: set difference dominates, total F1 breaks ties. The F1
  // sum over k clusters is below k+1, so scaling the integer deltas by k+1
  // keeps the primary objective strictly dominant.
  Eigen::MatrixXd cost(k, k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      double delta = static_cast<double>(set_delta(pred[i], ref[j]));
      cost(i, j) = delta * static_cast<double>(k + 1) - set_f1(ref[j], pred[i]);
    }
  }
  return min_cost_assignment(cost);
}

double csd_f1(const Clustering& reference, const Clustering& predicted) {
  size_t k = std::max(reference.size(), predicted.size());
  if (k == 0) throw Error("csd_f1: both clusterings are empty");
  Clustering ref = padded(reference, k);
  Clustering pred = padded(predicted, k);
  std::vector<int> assignment = match_clusters(reference, predicted);
  double total = 0.0;
  for (size_t i = 0; i < k; ++i) {
    total += set_f1(ref[assignment[i]], pred[i]);
  }
  return total / static_cast<double>(k);
}

double coverage_score(const std::vector<std::string>& corpus_top,
                      const std::vector<std::string>& report_top, int k) {
  if (k <= 0) throw Error("coverage_score: k must be positive");
  size_t k_eff = std::min<size_t>({static_cast<size_t>(k), corpus_top.size(),
                                   report_top.size()});
  if (k_eff == 0) throw Error("coverage_score: empty keyword list");
  std::set<std::string> a(corpus_top.begin(), corpus_top.begin() + k_eff);
  std::set<std::string> b(report_top.begin(), report_top.begin() + k_eff);
  int overlap = 0;
  for (const auto& w : a) {
    if (b.count(w)) ++overlap;
  }
  return static_cast<double>(overlap) / static_cast<double>(k_eff);
}

double diversity_score(const std::vector<std::vector<std::string>>& corpus_docs,
                       const std::vector<std::vector<std::string>>& report_sentences,
                       const LdaConfig& config, int top_m) {
  TopicModel corpus_model = fit_lda(corpus_docs, config);
  TopicModel report_model = fit_lda(report_sentences, config);
  auto top_words = [top_m](const TopicModel& model) {
    Clustering clusters;
    for (int t = 0; t < model.topics; ++t) {
      std::vector<std::pair<std::string, double>> words;
      for (size_t v = 0; v < model.vocabulary.size(); ++v) {
        words.push_back({model.vocabulary[v], model.phi(t, static_cast<int>(v))});
      }
      std::stable_sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
      });
      std::set<std::string> top;
      for (int i = 0; i < top_m && i < static_cast<int>(words.size()); ++i) {
        top.insert(words[i].first);
      }
      clusters.push_back(std::move(top));
    }
    return clusters;
  };
  return csd_f1(top_words(corpus_model), top_words(report_model));
}

AhpResult ahp_weights(const Eigen::MatrixXd& pairwise) {
  if (pairwise.rows() != pairwise.cols()) throw Error("ahp_weights: matrix must be square");
  int n = static_cast<int>(pairwise.rows());
  if (n < 1) throw Error("ahp_weights: empty matrix");
  for (int i = 0; i < n; ++i) {
    if (std::abs(pairwise(i, i) - 1.0) > 1e-9) {
      throw Error("ahp_weights: diagonal entries must be 1");
    }
    for (int j = 0; j < n; ++j) {
      double a = pairwise(i, j);
      if (!(a > 0.0)) throw Error("ahp_weights: entries must be positive");
      if (a < 1.0 / 9.0 - 1e-9 || a > 9.0 + 1e-9) {
        throw Error("ahp_weights: entry outside the 1/9..9 scale");
      }
      if (std::abs(a * pairwise(j, i) - 1.0) > 1e-6) {
        throw Error("ahp_weights: matrix is not reciprocal");
      }
    }
  }
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / n);
  for (int iter = 0; iter < 10000; ++iter) {
    Eigen::VectorXd next = pairwise * w;
    next /= next.sum();
    double delta = (next - w).cwiseAbs().sum();
    w = next;
    if (delta < 1e-10) break;
  }
  Eigen::VectorXd aw = pairwise * w;
  double lambda_max = 0.0;
  for (int i = 0; i < n; ++i) lambda_max += aw(i) / w(i);
  lambda_max /= n;
  static const double ri[] = {0.0, 0.0, 0.0, 0.58, 0.90, 1.12,
                              1.24, 1.32, 1.41, 1.45, 1.49};
  AhpResult result;
  result.weights = w;
  result.lambda_max = lambda_max;
  if (n >= 3 && n <= 10) {
    result.consistency_ratio = ((lambda_max - n) / (n - 1)) / ri[n];
  } else if (n > 10) {
    result.consistency_ratio = ((lambda_max - n) / (n - 1)) / 1.49;
  } else {
    result.consistency_ratio = 0.0;
  }
  result.consistent = result.consistency_ratio <= 0.1;
  return result;
}

namespace {

Eigen::MatrixXd normalize_matrix(const DecisionMatrix& matrix,
                                 TopsisNormalization normalization) {
  int rows = static_cast<int>(matrix.values.rows());
  int cols = static_cast<int>(matrix.values.cols());
  Eigen::MatrixXd r(rows, cols);
  for (int j = 0; j < cols; ++j) {
    if (normalization == TopsisNormalization::Vector) {
      double norm = matrix.values.col(j).norm();
      if (norm == 0.0) {
        throw Error("topsis_rank: criterion '" + matrix.criteria[j].name +
                    "' is all zero");
      }
      r.col(j) = matrix.values.col(j) / norm;
    } else {
      double lo = matrix.values.col(j).minCoeff();
      double hi = matrix.values.col(j).maxCoeff();
      if (hi == lo) {
        r.col(j).setZero();
      } else if (matrix.criteria[j].is_cost) {
        // Min-max already orients cost columns so larger is better.
        r.col(j) = (hi - matrix.values.col(j).array()) / (hi - lo);
      } else {
        r.col(j) = (matrix.values.col(j).array() - lo) / (hi - lo);
      }
    }
  }
  return r;
}

}  // namespace

std::vector<TopsisRow> topsis_rank(const DecisionMatrix& matrix,
                                   const Eigen::VectorXd& weights,
                                   TopsisNormalization normalization) {
  int rows = static_cast<int>(matrix.values.rows());
  int cols = static_cast<int>(matrix.values.cols());
  if (rows < 1 || cols < 1) throw Error("topsis_rank: empty decision matrix");
  if (static_cast<int>(matrix.criteria.size()) != cols) {
    throw Error("topsis_rank: criterion specs do not match matrix width");
  }
  if (weights.size() != cols) throw Error("topsis_rank: weight count mismatch");
  double wsum = weights.sum();
  if (wsum <= 0.0) throw Error("topsis_rank: weights must be positive");
  for (int j = 0; j < cols; ++j) {
    if (weights(j) < 0.0) throw Error("topsis_rank: weights must be nonnegative");
  }

  Eigen::MatrixXd t = normalize_matrix(matrix, normalization);
  for (int j = 0; j < cols; ++j) t.col(j) *= weights(j) / wsum;

  Eigen::VectorXd best(cols), worst(cols);
  for (int j = 0; j < cols; ++j) {
    bool cost = normalization == TopsisNormalization::Vector && matrix.criteria[j].is_cost;
    double lo = t.col(j).minCoeff();
    double hi = t.col(j).maxCoeff();
    best(j) = cost ? lo : hi;
    worst(j) = cost ? hi : lo;
  }

  std::vector<TopsisRow> result(rows);
  std::vector<double> closeness(rows);
  for (int i = 0; i < rows; ++i) {
    double d_best = (t.row(i).transpose() - best).norm();
    double d_worst = (t.row(i).transpose() - worst).norm();
    double denom = d_best + d_worst;
    closeness[i] = denom > 0.0 ? d_worst / denom : 0.5;
    result[i].alternative = matrix.alternatives.empty()
                                ? "alt" + std::to_string(i)
                                : matrix.alternatives[i];
    result[i].closeness = closeness[i];
  }
  std::vector<int> order(rows);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return closeness[a] > closeness[b];
  });
  for (int rank = 0; rank < rows; ++rank) {
    result[order[rank]].rank = rank + 1;
  }
  return result;
}

SensitivitySweep sensitivity_analysis(const DecisionMatrix& matrix,
                                      const Eigen::VectorXd& weights, int criterion,
                                      double step, int max_steps,
                                      TopsisNormalization normalization) {
  int cols = static_cast<int>(weights.size());
  if (criterion < 0 || criterion >= cols) {
    throw Error("sensitivity_analysis: criterion index out of range");
  }
  if (step <= 0.0) throw Error("sensitivity_analysis: step must be positive");
  Eigen::VectorXd base = weights / weights.sum();

  auto ranking_of = [&](const Eigen::VectorXd& w) {
    std::vector<TopsisRow> rows = topsis_rank(matrix, w, normalization);
    std::vector<int> order(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) order[rows[i].rank - 1] = static_cast<int>(i);
    return order;
  };
  int base_top = ranking_of(base)[0];

  SensitivitySweep sweep;
  sweep.criterion = criterion;
  for (int direction : {+1, -1}) {
    SensitivityDirection& dir = direction > 0 ? sweep.up : sweep.down;
    for (int k = 1; k <= max_steps; ++k) {
      double wi = base(criterion) + direction * k * step;
      if (wi <= 0.0 || wi >= 1.0) break;  // weight boundary reached
      Eigen::VectorXd w = base * ((1.0 - wi) / (1.0 - base(criterion)));
      w(criterion) = wi;
      SensitivityStep record;
      record.weights = w;
      record.ranking = ranking_of(w);
      bool crossed = record.ranking[0] != base_top;
      dir.steps.push_back(std::move(record));
      if (crossed) {
        dir.crossover.emplace(k);
        break;
      }
    }
  }
  return sweep;
}

namespace {

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

double parse_number(const std::string& text, const std::string& context) {
  try {
    size_t pos = 0;
    double value = std::stod(text, &pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(context + ": invalid number '" + text + "'");
  }
}

}  // namespace

DecisionMatrix read_decision_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error("matrix file is empty: " + path);
  std::vector<std::string> header = csv_fields(line);
  if (header.size() < 2) throw Error("matrix header needs at least one criterion");
  DecisionMatrix matrix;
  for (size_t j = 1; j < header.size(); ++j) {
    std::string name = header[j];
    CriterionSpec spec;
    if (name.ends_with(":cost")) {
      spec.is_cost = true;
      spec.name = name.substr(0, name.size() - 5);
    } else if (name.ends_with(":benefit")) {
      spec.name = name.substr(0, name.size() - 8);
    } else {
      throw Error("criterion '" + name + "' needs a :benefit or :cost suffix");
    }
    matrix.criteria.push_back(std::move(spec));
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = csv_fields(line);
    if (fields.size() != header.size()) {
      throw Error("matrix row for '" + fields.front() + "' has wrong field count");
    }
    matrix.alternatives.push_back(fields[0]);
    std::vector<double> row;
    for (size_t j = 1; j < fields.size(); ++j) {
      row.push_back(parse_number(fields[j], "matrix row '" + fields[0] + "'"));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("matrix file has no alternatives: " + path);
  matrix.values.resize(rows.size(), matrix.criteria.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < matrix.criteria.size(); ++j) {
      matrix.values(i, j) = rows[i][j];
    }
  }
  return matrix;
}

Eigen::MatrixXd read_pairwise_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pairwise file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = csv_fields(line);
    // An optional header / label column is tolerated and skipped.
    bool numeric_first = true;
    try {
      std::stod(fields[0]);
    } catch (const std::exception&) {
      numeric_first = false;
    }
    if (!numeric_first && rows.empty() && fields.size() > 1) {
      bool any_number = false;
      try {
        std::stod(fields[1]);
        any_number = true;
      } catch (const std::exception&) {
      }
      if (!any_number) continue;  // header row
    }
    std::vector<double> row;
    for (size_t j = numeric_first ? 0 : 1; j < fields.size(); ++j) {
      row.push_back(parse_number(fields[j], "pairwise row"));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("pairwise file is empty: " + path);
  size_t n = rows.size();
  Eigen::MatrixXd m(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error("pairwise matrix is not square");
    for (size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace ndorgs
