#include "ndorgs/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "ndorgs/errors.hpp"
#include "ndorgs/text.hpp"
#include "ndorgs/wordlists.hpp"

namespace ndorgs {

namespace {

using nlohmann::json;

std::string get_string(const json& rec, const char* key) {
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return "";
  if (!it->is_string()) throw Error(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

// Removes http://, https:// and www. URLs, leaving surrounding text intact.
std::string strip_urls(const std::string& body) {
  std::string out;
  out.reserve(body.size());
  size_t i = 0;
  auto starts = [&](const char* prefix) {
    size_t n = std::char_traits<char>::length(prefix);
    if (i + n > body.size()) return false;
    for (size_t k = 0; k < n; ++k) {
      if (std::tolower(static_cast<unsigned char>(body[i + k])) != prefix[k]) return false;
    }
    return true;
  };
  while (i < body.size()) {
    bool at_boundary = i == 0 || !std::isalnum(static_cast<unsigned char>(body[i - 1]));
    if (at_boundary && (starts("http://") || starts("https://") || starts("www."))) {
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      continue;
    }
    out.push_back(body[i]);
    ++i;
  }
  return out;
}

bool has_url(const std::string& body) {
  std::string lower = to_lower_ascii(body);
  return lower.find("http://") != std::string::npos ||
         lower.find("https://") != std::string::npos ||
         lower.find("www.") != std::string::npos;
}

// Interview-style sentence: opens with a quote or with a capitalized
// speaker tag ("Smith:" / "BBC News:").
bool is_interview_sentence(const std::string& text) {
  if (text.empty()) return false;
  unsigned char first = static_cast<unsigned char>(text[0]);
  if (first == '"' || first == '\'') return true;
  if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xE2 &&
      static_cast<unsigned char>(text[1]) == 0x80 &&
      (static_cast<unsigned char>(text[2]) == 0x9C ||
       static_cast<unsigned char>(text[2]) == 0x98)) {
    return true;
  }
  if (!std::isupper(first)) return false;
  size_t colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon > 24) return false;
  for (size_t i = 0; i < colon; ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (!std::isalnum(c) && c != ' ' && c != '.' && c != '\'') return false;
  }
  return true;
}

bool is_interview(const Document& doc, double max_ratio) {
  if (doc.sentences.empty()) return false;
  int hits = 0;
  for (const auto& s : doc.sentences) {
    if (is_interview_sentence(s.text)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(doc.sentences.size()) > max_ratio;
}

}  // namespace

int Document::word_count() const {
  int n = 0;
  for (const auto& s : sentences) n += s.word_count;
  return n;
}

std::vector<std::string> Document::all_tokens() const {
  std::vector<std::string> tokens;
  for (const auto& s : sentences) {
    tokens.insert(tokens.end(), s.tokens.begin(), s.tokens.end());
  }
  return tokens;
}

Document make_document(std::string id, std::string title, std::string body,
                       std::string date, std::string source, std::string label) {
  Document doc;
  doc.id = std::move(id);
  doc.title = std::move(title);
  doc.body = std::move(body);
  doc.date = std::move(date);
  doc.source = std::move(source);
  doc.label = std::move(label);
  int index = 0;
  for (auto& text : segment_sentences(doc.body)) {
    Sentence s;
    s.index = index++;
    s.tokens = tokenize(text);
    s.word_count = static_cast<int>(s.tokens.size());
    s.text = std::move(text);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

Corpus ingest_corpus(const std::filesystem::path& path, CorpusFormat format) {
  Corpus corpus;
  corpus.name = path.stem().string();
  if (format == CorpusFormat::Jsonl) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file: " + path.string());
    std::string line;
    int record = 0;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      ++record;
      json rec;
      try {
        rec = json::parse(line);
      } catch (const json::parse_error& e) {
        throw Error("record " + std::to_string(record) + ": invalid JSON: " + e.what());
      }
      std::string id = get_string(rec, "id");
      if (id.empty()) throw Error("record " + std::to_string(record) + ": missing id");
      if (!rec.contains("body") || !rec["body"].is_string()) {
        throw Error("record " + std::to_string(record) + ": missing body");
      }
      corpus.documents.push_back(make_document(
          id, get_string(rec, "title"), rec["body"].get<std::string>(),
          get_string(rec, "date"), get_string(rec, "source"), get_string(rec, "label")));
    }
    return corpus;
  }
  // Directory of .txt files: stem is the id, first line is the title.
  if (!std::filesystem::is_directory(path)) {
    throw Error("corpus directory not found: " + path.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open corpus file: " + file.string());
    std::string title;
    std::getline(in, title);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    corpus.documents.push_back(make_document(file.stem().string(),
                                             normalize_whitespace(title), body));
  }
  return corpus;
}

double english_ratio(const Document& doc) {
  const auto tokens = doc.all_tokens();
  if (tokens.empty()) throw Error("english_ratio: document '" + doc.id + "' has no tokens");
  const auto& common = english_top_words();
  size_t hits = 0;
  for (const auto& t : tokens) {
    if (common.count(t)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

FilterResult filter_corpus(const Corpus& corpus, const FilterConfig& config) {
  FilterResult result;
  result.corpus.name = corpus.name;
  std::unordered_set<std::string> seen_bodies;
  for (const Document& original : corpus.documents) {
    Document doc = original;
    if (has_url(doc.body)) {
      doc = make_document(doc.id, doc.title, strip_urls(doc.body), doc.date,
                          doc.source, doc.label);
    }
    if (doc.all_tokens().empty()) {
      result.removed.push_back({doc.id, "empty"});
      continue;
    }
    if (english_ratio(doc) < config.min_english_ratio) {
      result.removed.push_back({doc.id, "non-english"});
      continue;
    }
    if (is_interview(doc, config.max_interview_ratio)) {
      result.removed.push_back({doc.id, "interview"});
      continue;
    }
    std::string key = normalize_whitespace(doc.body);
    if (!seen_bodies.insert(key).second) {
      result.removed.push_back({doc.id, "duplicate"});
      continue;
    }
    result.corpus.documents.push_back(std::move(doc));
  }
  return result;
}

void write_filter_log(std::ostream& out, const std::vector<FilterRecord>& removed) {
  out << "id,reason\n";
  for (const auto& rec : removed) {
    out << rec.id << ',' << rec.reason << '\n';
  }
}

std::vector<KeywordEntry> score_keyword_tokens(
    const std::vector<std::vector<std::string>>& docs_tokens, int k,
    KeywordScoring scoring) {
  if (k <= 0) throw Error("score_keywords: k must be positive");
  const auto& stop = stopwords();
  std::map<std::string, double> score;
  if (scoring == KeywordScoring::Frequency) {
    for (const auto& tokens : docs_tokens) {
      for (const auto& t : tokens) {
        if (!stop.count(t)) score[t] += 1.0;
      }
    }
  } else {
    std::map<std::string, int> df;
    std::vector<std::map<std::string, int>> tf(docs_tokens.size());
    for (size_t d = 0; d < docs_tokens.size(); ++d) {
      for (const auto& t : docs_tokens[d]) {
        if (stop.count(t)) continue;
        if (tf[d][t]++ == 0) df[t] += 1;
      }
    }
    double n = static_cast<double>(docs_tokens.size());
    for (size_t d = 0; d < docs_tokens.size(); ++d) {
      for (const auto& [word, count] : tf[d]) {
        score[word] += count * (std::log(n / df[word]) + 1.0);
      }
    }
  }
  std::vector<KeywordEntry> entries;
  entries.reserve(score.size());
  for (const auto& [word, s] : score) entries.push_back({word, s});
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  });
  if (static_cast<int>(entries.size()) > k) entries.resize(k);
  return entries;
}

std::vector<KeywordEntry> score_keywords(const std::vector<Document>& docs, int k,
                                         KeywordScoring scoring) {
  std::vector<std::vector<std::string>> docs_tokens;
  docs_tokens.reserve(docs.size());
  for (const auto& doc : docs) docs_tokens.push_back(doc.all_tokens());
  return score_keyword_tokens(docs_tokens, k, scoring);
}

}  // namespace ndorgs
