// Corpus ingestion, cleaning filters and corpus-level keyword scoring.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ndorgs {

struct Sentence {
  int index = 0;  // 0-based position within the document
  std::string text;
  std::vector<std::string> tokens;  // lowercased word tokens
  int word_count = 0;
};

struct Document {
  std::string id;
  std::string title;
  std::string body;
  std::string date;    // ISO-8601 or empty
  std::string source;  // empty when unknown
  std::string label;   // category label or empty
  std::vector<Sentence> sentences;

  int word_count() const;
  std::vector<std::string> all_tokens() const;
};

struct Corpus {
  std::string name;
  std::vector<Document> documents;
};

enum class CorpusFormat { Jsonl, TextDir };

// Builds a Document from raw fields: segments the body into sentences and
// tokenizes each. Sentence indexes are contiguous from 0.
Document make_document(std::string id, std::string title, std::string body,
                       std::string date = "", std::string source = "",
                       std::string label = "");

// Reads a corpus from a JSON-Lines file ({id, body} required; {title, date,
// source, label} optional) or from a directory of .txt files where the file
// stem is the id and the first line is the title.
Corpus ingest_corpus(const std::filesystem::path& path, CorpusFormat format);

// Fraction of a document's tokens found in the built-in frequent-word list.
// The document must have at least one token.
double english_ratio(const Document& doc);

struct FilterConfig {
  double min_english_ratio = 0.15;
  double max_interview_ratio = 0.5;  // quoted/speaker sentences per document
};

struct FilterRecord {
  std::string id;
  std::string reason;
};

struct FilterResult {
  Corpus corpus;
  std::vector<FilterRecord> removed;
};

// Applies the cleaning filters in order: URL stripping (in-place rewrite),
// empty-document removal, language ratio, interview detection, exact
// duplicate removal. Each removed document gets exactly one log record.
FilterResult filter_corpus(const Corpus& corpus, const FilterConfig& config = {});

void write_filter_log(std::ostream& out, const std::vector<FilterRecord>& removed);

struct KeywordEntry {
  std::string word;
  double score = 0.0;
};

enum class KeywordScoring { Frequency, TfIdf };

// Top-k non-stopword words over the given documents, ordered by score
// descending with lexicographic tie-breaks.
std::vector<KeywordEntry> score_keywords(const std::vector<Document>& docs, int k,
                                         KeywordScoring scoring = KeywordScoring::Frequency);

// Same scoring over pre-tokenized pseudo-documents.
std::vector<KeywordEntry> score_keyword_tokens(
    const std::vector<std::vector<std::string>>& docs_tokens, int k,
    KeywordScoring scoring = KeywordScoring::Frequency);

}  // namespace ndorgs
