#include "ndorgs/mds.hpp"

#include <algorithm>
#include <cmath>

#include "ndorgs/errors.hpp"
#include "ndorgs/text.hpp"
#include "ndorgs/wordlists.hpp"

namespace ndorgs {

namespace {

int shared_content(const MdsSentence& a, const MdsSentence& b) {
  int shared = 0;
  size_t i = 0, j = 0;
  while (i < a.content.size() && j < b.content.size()) {
    int cmp = a.content[i].compare(b.content[j]);
    if (cmp == 0) {
      ++shared;
      ++i;
      ++j;
    } else if (cmp < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return shared;
}

}  // namespace

DiscourseGraph build_discourse_graph(const std::vector<SummaryInput>& summaries) {
  DiscourseGraph graph;
  for (const auto& summary : summaries) {
    double best = 0.0;
    for (double s : summary.sentence_scores) best = std::max(best, s);
    for (size_t i = 0; i < summary.sentence_texts.size(); ++i) {
      MdsSentence s;
      s.doc_id = summary.doc_id;
      s.sentence_index = i < summary.sentence_indexes.size()
                             ? summary.sentence_indexes[i]
                             : static_cast<int>(i);
      s.text = summary.sentence_texts[i];
      s.content = content_token_set(s.text);
      s.length = static_cast<int>(tokenize(s.text).size());
      double score = i < summary.sentence_scores.size() ? summary.sentence_scores[i] : 0.0;
      s.salience = best > 0.0 ? score / best : 0.0;
      graph.sentences.push_back(std::move(s));
    }
  }
  int n = static_cast<int>(graph.sentences.size());
  graph.weights = Eigen::MatrixXi::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    const auto& sx = graph.sentences[x];
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto& sy = graph.sentences[y];
      int shared = shared_content(sx, sy);
      int w = 0;
      if (shared >= 2) ++w;
      if (shared >= 1 && starts_with_discourse_marker(sy.text)) ++w;
      if (sx.doc_id == sy.doc_id && sy.sentence_index == sx.sentence_index + 1) ++w;
      graph.weights(x, y) = w;
    }
  }
  return graph;
}

int redundancy(const MdsSentence& a, const MdsSentence& b) {
  size_t union_size = a.content.size() + b.content.size();
  if (union_size == 0) return 1;
  int shared = shared_content(a, b);
  double jaccard =
      static_cast<double>(shared) / static_cast<double>(union_size - shared);
  return jaccard > 0.5 ? 1 : 0;
}

int target_length(int cluster_size) {
  if (cluster_size < 70) return 150 * (cluster_size / 10) + 300;
  return 200 * (cluster_size / 10);
}

double mds_objective(const DiscourseGraph& graph, const std::vector<int>& order,
                     const MdsConfig& config) {
  double salience = 0.0;
  for (int id : order) salience += graph.sentences[id].salience;
  double coherence = 0.0;
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    coherence += graph.weights(order[i], order[i + 1]);
  }
  return salience + config.alpha * coherence -
         config.beta * static_cast<double>(order.size());
}

namespace {

// Presentation order: start from the most salient selected sentence, then
// repeatedly follow the heaviest outgoing edge to an unplaced sentence.
// Ties go to the lower sentence id.
std::vector<int> chain_order(const DiscourseGraph& graph, std::vector<int> selected) {
  std::sort(selected.begin(), selected.end());
  if (selected.empty()) return selected;
  std::vector<int> order;
  std::vector<char> placed(selected.size(), 0);
  size_t start = 0;
  for (size_t i = 1; i < selected.size(); ++i) {
    if (graph.sentences[selected[i]].salience >
        graph.sentences[selected[start]].salience) {
      start = i;
    }
  }
  order.push_back(selected[start]);
  placed[start] = 1;
  while (order.size() < selected.size()) {
    int last = order.back();
    int best = -1;
    int best_w = -1;
    for (size_t i = 0; i < selected.size(); ++i) {
      if (placed[i]) continue;
      int w = graph.weights(last, selected[i]);
      if (w > best_w) {
        best_w = w;
        best = static_cast<int>(i);
      }
    }
    order.push_back(selected[best]);
    placed[best] = 1;
  }
  return order;
}

bool non_redundant_with(const DiscourseGraph& graph, const std::vector<int>& selected,
                        int candidate, int skip = -1) {
  for (int s : selected) {
    if (s == skip) continue;
    if (redundancy(graph.sentences[s], graph.sentences[candidate]) != 0) return false;
  }
  return true;
}

int total_length(const DiscourseGraph& graph, const std::vector<int>& selected) {
  int total = 0;
  for (int s : selected) total += graph.sentences[s].length;
  return total;
}

}  // namespace

namespace {

struct SearchState {
  std::vector<int> order;
  double objective = 0.0;
  int words = 0;
};

// The chain order or its reversal, whichever scores higher. The chain
// always leaves the most salient sentence first, but the best path may
// enter it instead.
std::vector<int> chained_or_reversed(const DiscourseGraph& graph,
                                     const std::vector<int>& selected,
                                     const MdsConfig& config) {
  std::vector<int> order = chain_order(graph, selected);
  std::vector<int> reversed(order.rbegin(), order.rend());
  if (mds_objective(graph, reversed, config) >
      mds_objective(graph, order, config)) {
    return reversed;
  }
  return order;
}

// Greedy growth from one seed sentence: repeatedly add the feasible sentence
// with the highest chain-ordered objective gain per word, while the
// objective improves. Scoring per word keeps one long sentence from
// crowding out a chain of short ones.
SearchState grow_greedily(const DiscourseGraph& graph, int seed, int budget,
                          const MdsConfig& config) {
  int n = static_cast<int>(graph.sentences.size());
  SearchState state;
  state.order = {seed};
  state.words = graph.sentences[seed].length;
  state.objective = mds_objective(graph, state.order, config);
  while (true) {
    int best = -1;
    double best_obj = 0.0;
    double best_density = 0.0;
    std::vector<int> best_order;
    for (int c = 0; c < n; ++c) {
      if (std::find(state.order.begin(), state.order.end(), c) != state.order.end()) {
        continue;
      }
      if (state.words + graph.sentences[c].length >= budget) continue;
      if (!non_redundant_with(graph, state.order, c)) continue;
      std::vector<int> trial = state.order;
      trial.push_back(c);
      std::vector<int> trial_order = chained_or_reversed(graph, trial, config);
      double obj = mds_objective(graph, trial_order, config);
      double density =
          (obj - state.objective) / std::max(1, graph.sentences[c].length);
      if (best == -1 || density > best_density) {
        best = c;
        best_obj = obj;
        best_density = density;
        best_order = std::move(trial_order);
      }
    }
    if (best == -1 || best_obj <= state.objective) break;
    state.order = std::move(best_order);
    state.words += graph.sentences[best].length;
    state.objective = best_obj;
  }
  return state;
}

// First-improvement local search: add, replace or drop a sentence (all
// re-chained), swap two sentences of the presentation order, or relocate
// one sentence to another position. Accepted moves are capped.
void refine_locally(const DiscourseGraph& graph, int budget, const MdsConfig& config,
                    SearchState& state) {
  int n = static_cast<int>(graph.sentences.size());
  auto try_order = [&](std::vector<int> trial_order, int word_delta) {
    double obj = mds_objective(graph, trial_order, config);
    if (obj <= state.objective + 1e-12) return false;
    state.order = std::move(trial_order);
    state.words += word_delta;
    state.objective = obj;
    return true;
  };
  int moves = 0;
  bool improved = true;
  while (improved && moves < config.max_moves) {
    improved = false;
    for (int c = 0; c < n && !improved; ++c) {
      if (std::find(state.order.begin(), state.order.end(), c) != state.order.end()) {
        continue;
      }
      if (state.words + graph.sentences[c].length >= budget) continue;
      if (!non_redundant_with(graph, state.order, c)) continue;
      std::vector<int> trial = state.order;
      trial.push_back(c);
      improved = try_order(chained_or_reversed(graph, trial, config),
                           graph.sentences[c].length);
    }
    for (size_t si = 0; si < state.order.size() && !improved; ++si) {
      int out = state.order[si];
      for (int c = 0; c < n && !improved; ++c) {
        if (std::find(state.order.begin(), state.order.end(), c) != state.order.end()) {
          continue;
        }
        if (state.words - graph.sentences[out].length + graph.sentences[c].length >=
            budget) {
          continue;
        }
        if (!non_redundant_with(graph, state.order, c, out)) continue;
        std::vector<int> trial;
        for (int s : state.order) {
          if (s != out) trial.push_back(s);
        }
        trial.push_back(c);
        improved = try_order(chained_or_reversed(graph, trial, config),
                             graph.sentences[c].length - graph.sentences[out].length);
      }
    }
    for (size_t si = 0; si < state.order.size() && !improved && state.order.size() > 1;
         ++si) {
      int out = state.order[si];
      std::vector<int> trial;
      for (int s : state.order) {
        if (s != out) trial.push_back(s);
      }
      improved = try_order(chained_or_reversed(graph, trial, config),
                           -graph.sentences[out].length);
    }
    for (size_t i = 0; i + 1 < state.order.size() && !improved; ++i) {
      for (size_t j = i + 1; j < state.order.size() && !improved; ++j) {
        std::vector<int> trial = state.order;
        std::swap(trial[i], trial[j]);
        improved = try_order(std::move(trial), 0);
      }
    }
    for (size_t i = 0; i < state.order.size() && !improved; ++i) {
      for (size_t j = 0; j < state.order.size() && !improved; ++j) {
        if (i == j) continue;
        std::vector<int> trial = state.order;
        int moved = trial[i];
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(j), moved);
        improved = try_order(std::move(trial), 0);
      }
    }
    if (improved) ++moves;
  }
}

}  // namespace

MdsSelection summarize_cluster(const DiscourseGraph& graph, int budget,
                               const MdsConfig& config) {
  int n = static_cast<int>(graph.sentences.size());
  // Seeds: the highest-salience sentences that fit the budget, capped.
  // Multiple starts keep a large opening sentence from boxing in the search.
  std::vector<int> seeds;
  for (int i = 0; i < n; ++i) {
    if (graph.sentences[i].length < budget) seeds.push_back(i);
  }
  if (seeds.empty()) {
    throw Error("summarize_cluster: budget " + std::to_string(budget) +
                " admits no sentence");
  }
  std::stable_sort(seeds.begin(), seeds.end(), [&](int a, int b) {
    if (graph.sentences[a].salience != graph.sentences[b].salience) {
      return graph.sentences[a].salience > graph.sentences[b].salience;
    }
    return a < b;
  });
  const size_t max_seeds = 8;
  if (seeds.size() > max_seeds) seeds.resize(max_seeds);

  SearchState best;
  bool first = true;
  for (int seed : seeds) {
    SearchState state = grow_greedily(graph, seed, budget, config);
    refine_locally(graph, budget, config, state);
    if (first || state.objective > best.objective + 1e-12) {
      best = std::move(state);
      first = false;
    }
  }

  MdsSelection selection;
  selection.order = best.order;
  selection.objective = best.objective;
  selection.budget = budget;
  selection.word_count = total_length(graph, best.order);
  return selection;
}

std::string selection_text(const DiscourseGraph& graph, const MdsSelection& selection) {
  std::string out;
  for (size_t i = 0; i < selection.order.size(); ++i) {
    if (i) out.push_back(' ');
    out += graph.sentences[selection.order[i]].text;
  }
  return out;
}

}  // namespace ndorgs
