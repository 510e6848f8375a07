// Rule-based cluster titling: summary sentences are ranked by topic-word
// coverage, trimmed to headline form, and checked against a quality test.
#pragma once

#include <string>
#include <vector>

namespace ndorgs {

struct TitleSource {
  std::string text;
  bool first_of_summary = false;  // opens one of the source summaries
};

struct TitleCandidate {
  std::string source;   // original sentence
  std::string trimmed;  // headline-cased trimmed form
  double rank_score = 0.0;
  bool passed = false;
  std::string reason;  // first failed test when not passed
};

// Sentences scored by the summed weight of the distinct cluster top words
// they contain, plus a bonus for summary-opening sentences. Returns the
// best `limit` candidates with trimming and testing applied.
std::vector<TitleCandidate> select_candidates(
    const std::vector<TitleSource>& sentences,
    const std::vector<std::pair<std::string, double>>& top_words, int limit = 5);

// Trims a sentence to headline form: parentheticals, short adverbial
// lead-ins, attribution clauses and trailing subordinate clauses are
// removed until stable, terminal punctuation is stripped, and the result
// is headline-cased. Idempotent.
std::string trim_sentence(const std::string& sentence);

struct TitleCheck {
  bool pass = false;
  std::string reason;  // first failed rule, empty on pass
};

// A usable title has 3 to 12 words, does not open with a pronoun or
// discourse marker, contains a noun-like token, does not end dangling,
// and reads as a clause (finite verb or a noun phrase of 3+ words).
TitleCheck title_test(const std::string& title);

// Best passing candidate, or a headline built from the top topic words
// when no candidate passes.
std::string generate_title(const std::vector<TitleSource>& sentences,
                           const std::vector<std::pair<std::string, double>>& top_words);

// Headline casing: words capitalized except short function words, which
// stay lowercase unless first or last.
std::string headline_case(const std::string& text);

}  // namespace ndorgs
