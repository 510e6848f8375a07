#include "ndorgs/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "ndorgs/wordlists.hpp"

namespace ndorgs {

namespace {

bool is_word_char(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;
}

// Apostrophes stay inside a token only when flanked by word characters, so
// "don't" is one token but a trailing quote is not.
bool is_inner_apostrophe(std::string_view text, size_t i) {
  if (text[i] != '\'' && text[i] != 0x27) return false;
  if (i == 0 || i + 1 >= text.size()) return false;
  return is_word_char(static_cast<unsigned char>(text[i - 1])) &&
         is_word_char(static_cast<unsigned char>(text[i + 1]));
}

template <typename Fold>
std::vector<std::string> tokenize_impl(std::string_view text, Fold fold) {
  std::vector<std::string> tokens;
  std::string cur;
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_word_char(c) || (!cur.empty() && is_inner_apostrophe(text, i))) {
      cur.push_back(fold(static_cast<char>(c)));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

bool is_opening_quote(unsigned char c) {
  return c == '"' || c == '\'' || c == '(';
}

// UTF-8 left double/single quotation marks.
bool is_utf8_quote(std::string_view text, size_t i) {
  return i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
         static_cast<unsigned char>(text[i + 1]) == 0x80 &&
         (static_cast<unsigned char>(text[i + 2]) == 0x9C ||
          static_cast<unsigned char>(text[i + 2]) == 0x98);
}

// The word (letters and periods) ending right before position end.
std::string trailing_word(std::string_view text, size_t end) {
  size_t start = end;
  while (start > 0) {
    unsigned char c = static_cast<unsigned char>(text[start - 1]);
    if (std::isalpha(c) || c == '.') {
      --start;
    } else {
      break;
    }
  }
  return std::string(text.substr(start, end - start));
}

bool ends_with_abbreviation(std::string_view text, size_t period_pos) {
  std::string word = trailing_word(text, period_pos + 1);
  if (word.empty()) return false;
  // Single-letter initials such as "J." never close a sentence.
  if (word.size() == 2 && std::isalpha(static_cast<unsigned char>(word[0]))) return true;
  return abbreviations().count(to_lower_ascii(word)) > 0;
}

void push_sentence(std::vector<std::string>& out, std::string_view raw) {
  std::string s = normalize_whitespace(raw);
  if (!s.empty()) out.push_back(std::move(s));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  return tokenize_impl(text, [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  });
}

std::vector<std::string> cased_tokens(std::string_view text) {
  return tokenize_impl(text, [](char c) { return c; });
}

std::vector<std::string> content_tokens(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  const auto& stop = stopwords();
  for (const auto& t : tokens) {
    if (!stop.count(t)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> content_token_set(std::string_view text) {
  std::vector<std::string> words = content_tokens(tokenize(text));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::vector<std::string> segment_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  size_t start = 0;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    // A blank line ends the current sentence regardless of punctuation.
    if (c == '\n') {
      size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
      if (j < text.size() && text[j] == '\n') {
        push_sentence(sentences, text.substr(start, i - start));
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        start = i = j;
        continue;
      }
      ++i;
      continue;
    }
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    size_t punct_start = i;
    while (i < text.size() && (text[i] == '.' || text[i] == '!' || text[i] == '?')) ++i;
    // Trailing closing quotes stay with the sentence.
    size_t after = i;
    while (after < text.size() &&
           (text[after] == '"' || text[after] == '\'' || text[after] == ')')) {
      ++after;
    }
    size_t ws = after;
    while (ws < text.size() && std::isspace(static_cast<unsigned char>(text[ws]))) ++ws;
    bool at_end = ws >= text.size();
    bool next_opens = false;
    if (!at_end && ws > after) {
      unsigned char n = static_cast<unsigned char>(text[ws]);
      next_opens = std::isupper(n) || std::isdigit(n) || is_opening_quote(n) ||
                   is_utf8_quote(text, ws);
    }
    bool abbrev = text[punct_start] == '.' && i == punct_start + 1 &&
                  ends_with_abbreviation(text, punct_start);
    if (at_end || (next_opens && !abbrev)) {
      push_sentence(sentences, text.substr(start, after - start));
      start = ws;
      i = ws;
    }
  }
  if (start < text.size()) push_sentence(sentences, text.substr(start));
  return sentences;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = true;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_capitalized(std::string_view token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token[0]));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

double softplus(double x) {
  if (x > 30.0) return x;
  if (x < -30.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

}  // namespace ndorgs
