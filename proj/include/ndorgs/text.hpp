// Tokenization, sentence segmentation and small string helpers shared by
// every stage of the pipeline.
#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ndorgs {

// Lowercased word tokens. A token is a maximal run of ASCII alphanumerics,
// apostrophes inside a word, or non-ASCII bytes; everything else separates.
std::vector<std::string> tokenize(std::string_view text);

// Word tokens with original casing, same boundaries as tokenize().
std::vector<std::string> cased_tokens(std::string_view text);

// Tokens that are not stopwords.
std::vector<std::string> content_tokens(const std::vector<std::string>& tokens);

// Distinct content tokens, sorted; the lemma set used for overlap tests.
std::vector<std::string> content_token_set(std::string_view text);

// Splits text into sentences on ., ! and ? runs followed by whitespace and
// an upper-case letter, digit or opening quote. Known abbreviations and
// single-letter initials do not end a sentence. Blank lines always split.
std::vector<std::string> segment_sentences(std::string_view text);

// Collapses all whitespace runs to single spaces and trims the ends.
std::string normalize_whitespace(std::string_view text);

std::string to_lower_ascii(std::string_view text);

// True when the first character is an ASCII upper-case letter.
bool is_capitalized(std::string_view token);

// Splits on single chars, keeping empty fields.
std::vector<std::string> split(std::string_view text, char sep);

// ln(1 + e^x), numerically safe for large |x|.
double softplus(double x);

}  // namespace ndorgs
