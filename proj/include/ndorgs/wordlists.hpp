// Built-in word lists: stopwords, frequent English words, discourse markers,
// sentence-boundary abbreviations, and the small lexicons used by titling and
// entity extraction. All lookups are lowercase unless noted.
#pragma once

#include <string>
#include <unordered_set>
#include <vector>

namespace ndorgs {

// English stopwords (classic 179-word list).
const std::unordered_set<std::string>& stopwords();

// Most frequent English words; used for the language-ratio filter.
const std::unordered_set<std::string>& english_top_words();

// Discourse connectives that open a sentence ("however", "in addition", ...).
// Multi-word markers are stored space-separated.
const std::vector<std::string>& discourse_markers();

// True when the sentence opens with a discourse marker followed by a
// non-letter (comma, space, end).
bool starts_with_discourse_marker(const std::string& sentence);

// Abbreviations that end with a period without closing a sentence ("Mr.",
// "U.S.", ...). Stored lowercase including the trailing period.
const std::unordered_set<std::string>& abbreviations();

// Personal and demonstrative pronouns (titles must not start with one).
const std::unordered_set<std::string>& pronouns();

// Short function words left lowercase inside headline-cased titles.
const std::unordered_set<std::string>& title_small_words();

// Words a title must not end with (dangling prepositions, articles, ...).
const std::unordered_set<std::string>& dangling_terminal_words();

// Countries, regions and well-known place tokens, original casing.
const std::unordered_set<std::string>& gazetteer();

// Trailing tokens that mark an organization name ("Corp", "Party", ...).
const std::unordered_set<std::string>& organization_suffixes();

// Common given names, original casing; used to spot two-token person names.
const std::unordered_set<std::string>& first_names();

// Verbs of attribution ("said", "told", ...) for quote trimming.
const std::unordered_set<std::string>& attribution_verbs();

// Words that can open a short adverbial lead-in clause ("in", "meanwhile").
const std::unordered_set<std::string>& adverbial_cues();

// Frequent finite verbs for the verb-likeness test.
const std::unordered_set<std::string>& common_verbs();

}  // namespace ndorgs
