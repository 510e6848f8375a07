// Entity trend tables: capitalized-run entity extraction with a simple kind
// lexicon, grouped mention frequencies and tf-idf, and CSV/SVG output.
#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "ndorgs/corpus.hpp"

namespace ndorgs {

enum class EntityKind { Organization, Person, Geopolitical, Unknown };

const char* entity_kind_name(EntityKind kind);

struct EntityMention {
  std::string entity;  // original casing
  EntityKind kind = EntityKind::Unknown;
};

// Capitalized runs seen away from sentence starts anywhere in the corpus;
// used to admit sentence-initial occurrences of known entities.
struct EntityIndex {
  std::unordered_set<std::string> mid_sentence;
  static EntityIndex build(const Corpus& corpus);
};

// Entity mentions of one document: maximal capitalized token runs, skipping
// sentence-initial runs unless the index has seen them mid-sentence.
// Kind: geopolitical when the run or one of its tokens is a known place,
// organization on a known suffix token, person for two-token runs opening
// with a known given name.
std::vector<EntityMention> extract_entities(const Document& doc,
                                            const EntityIndex* index = nullptr);

EntityKind classify_entity(const std::vector<std::string>& run_tokens);

enum class TrendGroup { Year, Label };

struct TrendPoint {
  std::string group;
  long frequency = 0;
  double tfidf = 0.0;
};

struct EntityTrend {
  std::string entity;
  EntityKind kind = EntityKind::Unknown;
  std::vector<TrendPoint> points;  // every group key in the corpus, sorted
};

// Mention counts and tf-idf of one entity grouped by year or label.
// Documents without the group key are skipped; it is an error when no
// document has it. tf-idf per group: sum over its documents of
// tf * (ln(group size / docs with a mention) + 1); zero without mentions.
EntityTrend entity_trend(const Corpus& corpus, const std::string& entity,
                         TrendGroup group);

struct EntityTotal {
  std::string entity;
  EntityKind kind = EntityKind::Unknown;
  long frequency = 0;
  double tfidf = 0.0;
};

// The `limit` most frequent entities of one kind across the corpus.
std::vector<EntityTotal> top_entities(const Corpus& corpus, EntityKind kind, int limit);

std::string trend_csv(const EntityTrend& trend);
std::string totals_csv(const std::vector<EntityTotal>& totals);
std::string trend_svg(const EntityTrend& trend);
std::string totals_svg(const std::vector<EntityTotal>& totals, const std::string& kind);

}  // namespace ndorgs
