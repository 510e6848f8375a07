#include "ndorgs/topics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "ndorgs/errors.hpp"

namespace ndorgs {

namespace {

// Uniform double in [0, 1) from the top 53 bits, stable across platforms.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::pair<std::string, double>> frequency_top_words(
    const std::vector<std::vector<std::string>>& docs, const std::vector<int>& members,
    int limit) {
  std::map<std::string, double> counts;
  double total = 0.0;
  for (int d : members) {
    for (const auto& t : docs[d]) {
      counts[t] += 1.0;
      total += 1.0;
    }
  }
  std::vector<std::pair<std::string, double>> words(counts.begin(), counts.end());
  std::stable_sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (static_cast<int>(words.size()) > limit) words.resize(limit);
  if (total > 0) {
    for (auto& [w, c] : words) c /= total;
  }
  return words;
}

std::vector<std::pair<std::string, double>> phi_top_words(const TopicModel& model,
                                                          int topic, int limit) {
  std::vector<std::pair<std::string, double>> words;
  words.reserve(model.vocabulary.size());
  for (size_t v = 0; v < model.vocabulary.size(); ++v) {
    words.push_back({model.vocabulary[v], model.phi(topic, static_cast<int>(v))});
  }
  std::stable_sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (static_cast<int>(words.size()) > limit) words.resize(limit);
  return words;
}

}  // namespace

TopicModel fit_lda(const std::vector<std::vector<std::string>>& documents,
                   const LdaConfig& config) {
  int K = config.topics;
  if (K < 1) throw Error("fit_lda: topic count must be positive");
  if (static_cast<int>(documents.size()) < K) {
    throw Error("fit_lda: need at least as many documents as topics");
  }
  std::map<std::string, int> vocab_index;
  for (const auto& doc : documents) {
    for (const auto& t : doc) vocab_index.emplace(t, 0);
  }
  if (vocab_index.empty()) throw Error("fit_lda: empty vocabulary");
  TopicModel model;
  model.topics = K;
  model.vocabulary.reserve(vocab_index.size());
  for (auto& [word, idx] : vocab_index) {
    idx = static_cast<int>(model.vocabulary.size());
    model.vocabulary.push_back(word);
  }
  int V = static_cast<int>(model.vocabulary.size());
  int D = static_cast<int>(documents.size());
  double alpha = config.effective_alpha();
  double beta = config.beta;

  std::vector<std::vector<int>> word_ids(D);
  std::vector<std::vector<int>> topic_of(D);
  Eigen::MatrixXd n_dt = Eigen::MatrixXd::Zero(D, K);
  Eigen::MatrixXd n_tw = Eigen::MatrixXd::Zero(K, V);
  Eigen::VectorXd n_t = Eigen::VectorXd::Zero(K);

  std::mt19937_64 rng(config.seed);
  for (int d = 0; d < D; ++d) {
    word_ids[d].reserve(documents[d].size());
    topic_of[d].reserve(documents[d].size());
    for (const auto& token : documents[d]) {
      int w = vocab_index[token];
      int t = static_cast<int>(uniform01(rng) * K);
      if (t >= K) t = K - 1;
      word_ids[d].push_back(w);
      topic_of[d].push_back(t);
      n_dt(d, t) += 1.0;
      n_tw(t, w) += 1.0;
      n_t(t) += 1.0;
    }
  }

  std::vector<double> cumulative(K);
  for (int iter = 0; iter < config.iterations; ++iter) {
    for (int d = 0; d < D; ++d) {
      for (size_t pos = 0; pos < word_ids[d].size(); ++pos) {
        int w = word_ids[d][pos];
        int old = topic_of[d][pos];
        n_dt(d, old) -= 1.0;
        n_tw(old, w) -= 1.0;
        n_t(old) -= 1.0;
        double sum = 0.0;
        for (int t = 0; t < K; ++t) {
          sum += (n_dt(d, t) + alpha) * (n_tw(t, w) + beta) / (n_t(t) + V * beta);
          cumulative[t] = sum;
        }
        double u = uniform01(rng) * sum;
        int picked = static_cast<int>(
            std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        if (picked >= K) picked = K - 1;
        topic_of[d][pos] = picked;
        n_dt(d, picked) += 1.0;
        n_tw(picked, w) += 1.0;
        n_t(picked) += 1.0;
      }
    }
  }

  model.theta.resize(D, K);
  for (int d = 0; d < D; ++d) {
    double n_d = static_cast<double>(word_ids[d].size());
    for (int t = 0; t < K; ++t) {
      model.theta(d, t) = (n_dt(d, t) + alpha) / (n_d + K * alpha);
    }
  }
  model.phi.resize(K, V);
  for (int t = 0; t < K; ++t) {
    for (int w = 0; w < V; ++w) {
      model.phi(t, w) = (n_tw(t, w) + beta) / (n_t(t) + V * beta);
    }
  }
  return model;
}

HardAssignment assign_topics(const TopicModel& model) {
  HardAssignment out;
  int D = static_cast<int>(model.theta.rows());
  out.topic.resize(D);
  out.p.resize(D);
  for (int d = 0; d < D; ++d) {
    int best = 0;
    for (int t = 1; t < model.topics; ++t) {
      if (model.theta(d, t) > model.theta(d, best)) best = t;
    }
    out.topic[d] = best;
    out.p[d] = model.theta(d, best);
  }
  return out;
}

double score_cluster(const std::vector<double>& member_p) {
  if (member_p.empty()) return 0.0;
  double n = static_cast<double>(member_p.size());
  double sum = 0.0;
  for (double p : member_p) sum += std::exp2(p);
  return sum / (n * n);
}

int subcluster_count(int cluster_size, int size_threshold) {
  if (size_threshold <= 0) throw Error("subcluster_count: threshold must be positive");
  return 1 + cluster_size / size_threshold;
}

std::vector<std::vector<int>> even_split(int n, int parts) {
  if (parts < 1) throw Error("even_split: parts must be positive");
  std::vector<std::vector<int>> out(parts);
  int base = n / parts;
  int pos = 0;
  for (int p = 0; p < parts; ++p) {
    int size = (p == parts - 1) ? n - pos : base;
    for (int i = 0; i < size; ++i) out[p].push_back(pos++);
  }
  return out;
}

namespace {

struct Subcorpus {
  std::vector<int> members;  // indexes into the parent document list
};

// Members of an oversized node sorted by p descending (ties keep input
// order), then cut into even consecutive parts.
std::vector<ClusterNode> split_evenly(const ClusterNode& node, int parts,
                                      const std::vector<std::vector<std::string>>& docs,
                                      const std::vector<int>& doc_index, int top_words) {
  int n = static_cast<int>(node.member_ids.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return node.member_p[a] > node.member_p[b];
  });
  std::vector<ClusterNode> out;
  auto cuts = even_split(n, parts);
  for (size_t part = 0; part < cuts.size(); ++part) {
    ClusterNode child;
    child.id = node.id + ".s" + std::to_string(part);
    child.level = 2;
    std::vector<int> member_docs;
    for (int rank : cuts[part]) {
      int local = order[rank];
      child.member_ids.push_back(node.member_ids[local]);
      child.member_p.push_back(node.member_p[local]);
      member_docs.push_back(doc_index[local]);
    }
    child.score = score_cluster(child.member_p);
    child.top_words = frequency_top_words(docs, member_docs, top_words);
    out.push_back(std::move(child));
  }
  return out;
}

}  // namespace

ClusterTree build_hierarchy(const std::vector<std::string>& doc_ids,
                            const std::vector<std::vector<std::string>>& doc_tokens,
                            const HierarchyConfig& config) {
  if (doc_ids.size() != doc_tokens.size()) {
    throw Error("build_hierarchy: id and token lists differ in length");
  }
  ClusterTree tree;
  tree.config = config;
  LdaConfig top_config = config.lda;
  top_config.topics = config.k;
  TopicModel top = fit_lda(doc_tokens, top_config);
  HardAssignment assignment = assign_topics(top);

  int D = static_cast<int>(doc_ids.size());
  std::vector<std::vector<int>> members(config.k);
  for (int d = 0; d < D; ++d) members[assignment.topic[d]].push_back(d);

  for (int c = 0; c < config.k; ++c) {
    ClusterNode node;
    node.id = "t" + std::to_string(c);
    node.level = 1;
    for (int d : members[c]) {
      node.member_ids.push_back(doc_ids[d]);
      node.member_p.push_back(assignment.p[d]);
    }
    node.score = score_cluster(node.member_p);
    if (!node.empty()) node.top_words = phi_top_words(top, c, config.top_words);

    int size = static_cast<int>(node.member_ids.size());
    if (size > config.size_threshold) {
      int parts = subcluster_count(size, config.size_threshold);
      std::vector<std::vector<std::string>> sub_docs;
      sub_docs.reserve(members[c].size());
      for (int d : members[c]) sub_docs.push_back(doc_tokens[d]);
      LdaConfig sub_config = config.lda;
      sub_config.topics = parts;
      sub_config.seed = config.lda.seed + 1 + static_cast<std::uint64_t>(c);
      TopicModel sub = fit_lda(sub_docs, sub_config);
      HardAssignment sub_assign = assign_topics(sub);

      std::vector<std::vector<int>> sub_members(parts);
      for (size_t i = 0; i < members[c].size(); ++i) {
        sub_members[sub_assign.topic[i]].push_back(static_cast<int>(i));
      }
      int nonempty = 0;
      for (const auto& m : sub_members) {
        if (!m.empty()) ++nonempty;
      }
      if (nonempty <= 1) {
        // Degenerate refit: fall back to an even split of the p-sorted members.
        ClusterNode refit = node;
        refit.member_p.assign(sub_assign.p.begin(), sub_assign.p.end());
        node.children = split_evenly(refit, parts, doc_tokens, members[c], config.top_words);
      } else {
        for (int s = 0; s < parts; ++s) {
          ClusterNode child;
          child.id = node.id + "." + std::to_string(s);
          child.level = 2;
          std::vector<int> member_docs;
          for (int local : sub_members[s]) {
            child.member_ids.push_back(doc_ids[members[c][local]]);
            child.member_p.push_back(sub_assign.p[local]);
            member_docs.push_back(members[c][local]);
          }
          child.score = score_cluster(child.member_p);
          if (!child.empty()) child.top_words = phi_top_words(sub, s, config.top_words);
          node.children.push_back(std::move(child));
        }
        // Oversized second-level clusters are split evenly and stay at level 2.
        std::vector<ClusterNode> flattened;
        for (auto& child : node.children) {
          int child_size = static_cast<int>(child.member_ids.size());
          if (child_size > config.size_threshold) {
            std::vector<int> member_docs;
            for (const auto& id : child.member_ids) {
              auto it = std::find(doc_ids.begin(), doc_ids.end(), id);
              member_docs.push_back(static_cast<int>(it - doc_ids.begin()));
            }
            int child_parts = subcluster_count(child_size, config.size_threshold);
            auto pieces = split_evenly(child, child_parts, doc_tokens, member_docs,
                                       config.top_words);
            for (auto& piece : pieces) flattened.push_back(std::move(piece));
          } else {
            flattened.push_back(std::move(child));
          }
        }
        node.children = std::move(flattened);
      }
    }
    tree.roots.push_back(std::move(node));
  }
  return tree;
}

std::vector<const ClusterNode*> collect_leaves(const ClusterTree& tree) {
  std::vector<const ClusterNode*> leaves;
  for (const auto& root : tree.roots) {
    if (root.empty()) continue;
    if (root.leaf()) {
      leaves.push_back(&root);
      continue;
    }
    for (const auto& child : root.children) {
      if (!child.empty()) leaves.push_back(&child);
    }
  }
  return leaves;
}

}  // namespace ndorgs
