#include "ndorgs/trends.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ndorgs/errors.hpp"
#include "ndorgs/text.hpp"
#include "ndorgs/wordlists.hpp"

namespace ndorgs {

namespace {

bool is_entity_token(const std::string& token) {
  if (!is_capitalized(token)) return false;
  for (char c : token) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '\'' && c != '-') return false;
  }
  return true;
}

bool is_capitalized_stopword(const std::string& token) {
  return stopwords().count(to_lower_ascii(token)) > 0;
}

std::string join_run(const std::vector<std::string>& tokens, size_t from, size_t to) {
  std::string out;
  for (size_t i = from; i < to; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

// Maximal capitalized runs of one sentence as (start, end) token spans.
// Leading capitalized stopwords ("The", "A") are trimmed off each run.
std::vector<std::pair<size_t, size_t>> capitalized_runs(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<size_t, size_t>> runs;
  size_t i = 0;
  while (i < tokens.size()) {
    if (!is_entity_token(tokens[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < tokens.size() && is_entity_token(tokens[i])) ++i;
    size_t end = i;
    while (start < end && is_capitalized_stopword(tokens[start])) ++start;
    if (start < end) runs.push_back({start, end});
  }
  return runs;
}

long count_mentions(const Document& doc, const std::vector<std::string>& entity_tokens) {
  if (entity_tokens.empty()) return 0;
  long count = 0;
  for (const auto& sentence : doc.sentences) {
    std::vector<std::string> tokens = cased_tokens(sentence.text);
    if (tokens.size() < entity_tokens.size()) continue;
    for (size_t i = 0; i + entity_tokens.size() <= tokens.size(); ++i) {
      bool match = true;
      for (size_t j = 0; j < entity_tokens.size(); ++j) {
        if (tokens[i + j] != entity_tokens[j]) {
          match = false;
          break;
        }
      }
      if (match) ++count;
    }
  }
  return count;
}

std::string group_key(const Document& doc, TrendGroup group) {
  if (group == TrendGroup::Year) {
    if (doc.date.size() < 4) return "";
    return doc.date.substr(0, 4);
  }
  return doc.label;
}

std::string svg_header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
         "viewBox=\"0 0 800 400\">\n";
}

std::string format_fixed(double value, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find(',') == std::string::npos && text.find('"') == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Shared bar chart: pairs of (label, value), scaled to the tallest bar.
std::string bar_chart(const std::vector<std::pair<std::string, double>>& bars,
                      const std::string& title) {
  std::string svg = svg_header();
  svg += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
         "font-family=\"sans-serif\">" + escape_xml(title) + "</text>\n";
  svg += "<line x1=\"60\" y1=\"340\" x2=\"760\" y2=\"340\" stroke=\"#333\"/>\n";
  svg += "<line x1=\"60\" y1=\"40\" x2=\"60\" y2=\"340\" stroke=\"#333\"/>\n";
  if (!bars.empty()) {
    double peak = 0.0;
    for (const auto& [label, value] : bars) peak = std::max(peak, value);
    if (peak <= 0.0) peak = 1.0;
    double slot = 700.0 / static_cast<double>(bars.size());
    double width = std::min(60.0, slot * 0.6);
    for (size_t i = 0; i < bars.size(); ++i) {
      double x = 60.0 + slot * static_cast<double>(i) + (slot - width) / 2.0;
      double h = 290.0 * bars[i].second / peak;
      double y = 340.0 - h;
      svg += "<rect x=\"" + format_fixed(x, 2) + "\" y=\"" + format_fixed(y, 2) +
             "\" width=\"" + format_fixed(width, 2) + "\" height=\"" +
             format_fixed(h, 2) + "\" fill=\"#4878a8\"/>\n";
      svg += "<text x=\"" + format_fixed(x + width / 2.0, 2) +
             "\" y=\"358\" text-anchor=\"middle\" font-size=\"11\" "
             "font-family=\"sans-serif\">" + escape_xml(bars[i].first) + "</text>\n";
      svg += "<text x=\"" + format_fixed(x + width / 2.0, 2) + "\" y=\"" +
             format_fixed(y - 4.0, 2) +
             "\" text-anchor=\"middle\" font-size=\"11\" "
             "font-family=\"sans-serif\">" + format_fixed(bars[i].second, 2) +
             "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

const char* entity_kind_name(EntityKind kind) {
  switch (kind) {
    case EntityKind::Organization: return "organization";
    case EntityKind::Person: return "person";
    case EntityKind::Geopolitical: return "geopolitical";
    case EntityKind::Unknown: return "unknown";
  }
  return "unknown";
}

EntityKind classify_entity(const std::vector<std::string>& run_tokens) {
  if (run_tokens.empty()) return EntityKind::Unknown;
  const auto& places = gazetteer();
  std::string whole = join_run(run_tokens, 0, run_tokens.size());
  if (places.count(whole)) return EntityKind::Geopolitical;
  for (const auto& token : run_tokens) {
    if (places.count(token)) return EntityKind::Geopolitical;
  }
  if (organization_suffixes().count(run_tokens.back())) return EntityKind::Organization;
  if (run_tokens.size() == 2 && first_names().count(run_tokens.front())) {
    return EntityKind::Person;
  }
  return EntityKind::Unknown;
}

EntityIndex EntityIndex::build(const Corpus& corpus) {
  EntityIndex index;
  for (const auto& doc : corpus.documents) {
    for (const auto& sentence : doc.sentences) {
      std::vector<std::string> tokens = cased_tokens(sentence.text);
      for (const auto& [start, end] : capitalized_runs(tokens)) {
        if (start == 0) continue;  // sentence-initial casing is not evidence
        index.mid_sentence.insert(join_run(tokens, start, end));
      }
    }
  }
  return index;
}

std::vector<EntityMention> extract_entities(const Document& doc,
                                            const EntityIndex* index) {
  std::vector<EntityMention> mentions;
  for (const auto& sentence : doc.sentences) {
    std::vector<std::string> tokens = cased_tokens(sentence.text);
    for (const auto& [start, end] : capitalized_runs(tokens)) {
      std::string name = join_run(tokens, start, end);
      if (start == 0) {
        // Sentence-initial runs count only when seen mid-sentence elsewhere.
        if (index == nullptr || !index->mid_sentence.count(name)) continue;
      }
      std::vector<std::string> run(tokens.begin() + start, tokens.begin() + end);
      mentions.push_back({std::move(name), classify_entity(run)});
    }
  }
  return mentions;
}

EntityTrend entity_trend(const Corpus& corpus, const std::string& entity,
                         TrendGroup group) {
  if (entity.empty()) throw Error("entity_trend: entity name is empty");
  std::vector<std::string> entity_tokens = cased_tokens(entity);
  EntityTrend trend;
  trend.entity = entity;
  trend.kind = classify_entity(entity_tokens);

  std::map<std::string, std::vector<const Document*>> groups;
  for (const auto& doc : corpus.documents) {
    std::string key = group_key(doc, group);
    if (key.empty()) continue;
    groups[key].push_back(&doc);
  }
  if (groups.empty()) {
    throw Error(std::string("entity_trend: no document has a ") +
                (group == TrendGroup::Year ? "date" : "label"));
  }
  for (const auto& [key, docs] : groups) {
    TrendPoint point;
    point.group = key;
    double group_size = static_cast<double>(docs.size());
    std::vector<long> tf;
    tf.reserve(docs.size());
    long with_mention = 0;
    for (const Document* doc : docs) {
      long count = count_mentions(*doc, entity_tokens);
      tf.push_back(count);
      point.frequency += count;
      if (count > 0) ++with_mention;
    }
    if (with_mention > 0) {
      double idf = std::log(group_size / static_cast<double>(with_mention)) + 1.0;
      for (long count : tf) {
        if (count > 0) point.tfidf += static_cast<double>(count) * idf;
      }
    }
    trend.points.push_back(std::move(point));
  }
  return trend;
}

std::vector<EntityTotal> top_entities(const Corpus& corpus, EntityKind kind, int limit) {
  if (limit <= 0) throw Error("top_entities: limit must be positive");
  EntityIndex index = EntityIndex::build(corpus);
  std::map<std::string, EntityTotal> totals;
  std::map<std::string, long> doc_frequency;
  long corpus_size = static_cast<long>(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    std::map<std::string, long> in_doc;
    for (auto& mention : extract_entities(doc, &index)) {
      if (mention.kind != kind) continue;
      auto [it, created] = totals.try_emplace(mention.entity);
      if (created) {
        it->second.entity = mention.entity;
        it->second.kind = mention.kind;
      }
      it->second.frequency += 1;
      in_doc[mention.entity] += 1;
    }
    for (const auto& [entity, count] : in_doc) {
      (void)count;
      doc_frequency[entity] += 1;
    }
  }
  std::vector<EntityTotal> out;
  out.reserve(totals.size());
  for (auto& [entity, total] : totals) {
    double idf = std::log(static_cast<double>(corpus_size) /
                          static_cast<double>(doc_frequency[entity])) + 1.0;
    total.tfidf = static_cast<double>(total.frequency) * idf;
    out.push_back(std::move(total));
  }
  std::stable_sort(out.begin(), out.end(), [](const EntityTotal& a, const EntityTotal& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.entity < b.entity;
  });
  if (static_cast<int>(out.size()) > limit) out.resize(limit);
  return out;
}

std::string trend_csv(const EntityTrend& trend) {
  std::string out = "entity,kind,group,frequency,tfidf\n";
  for (const auto& point : trend.points) {
    out += csv_field(trend.entity);
    out += ',';
    out += entity_kind_name(trend.kind);
    out += ',';
    out += csv_field(point.group);
    out += ',';
    out += std::to_string(point.frequency);
    out += ',';
    out += format_fixed(point.tfidf, 6);
    out += '\n';
  }
  return out;
}

std::string totals_csv(const std::vector<EntityTotal>& totals) {
  std::string out = "entity,kind,group,frequency,tfidf\n";
  for (const auto& total : totals) {
    out += csv_field(total.entity);
    out += ',';
    out += entity_kind_name(total.kind);
    out += ",total,";
    out += std::to_string(total.frequency);
    out += ',';
    out += format_fixed(total.tfidf, 6);
    out += '\n';
  }
  return out;
}

std::string trend_svg(const EntityTrend& trend) {
  std::vector<std::pair<std::string, double>> bars;
  for (const auto& point : trend.points) {
    bars.push_back({point.group, static_cast<double>(point.frequency)});
  }
  return bar_chart(bars, trend.entity + " mentions");
}

std::string totals_svg(const std::vector<EntityTotal>& totals, const std::string& kind) {
  std::vector<std::pair<std::string, double>> bars;
  for (const auto& total : totals) {
    bars.push_back({total.entity, static_cast<double>(total.frequency)});
  }
  return bar_chart(bars, "Top " + kind + " entities");
}

}  // namespace ndorgs
