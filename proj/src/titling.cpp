#include "ndorgs/titling.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "ndorgs/text.hpp"
#include "ndorgs/wordlists.hpp"

namespace ndorgs {

namespace {

std::vector<std::string> words_of(const std::string& text) {
  return split(normalize_whitespace(text), ' ');
}

std::string join_words(const std::vector<std::string>& words, size_t from, size_t to) {
  std::string out;
  for (size_t i = from; i < to; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += words[i];
  }
  return out;
}

std::string strip_punct(const std::string& word) {
  size_t begin = 0;
  size_t end = word.size();
  while (begin < end && !std::isalnum(static_cast<unsigned char>(word[begin]))) ++begin;
  while (end > begin && !std::isalnum(static_cast<unsigned char>(word[end - 1]))) --end;
  return word.substr(begin, end - begin);
}

std::string remove_parentheticals(const std::string& text) {
  std::string out;
  int depth = 0;
  for (char c : text) {
    if (c == '(') {
      ++depth;
      continue;
    }
    if (c == ')') {
      if (depth > 0) --depth;
      continue;
    }
    if (depth == 0) out.push_back(c);
  }
  return normalize_whitespace(out);
}

// Drops a short lead-in ending at the first comma when it opens with an
// adverbial cue ("In fact," / "Last month,"). The rest must be nonempty.
std::string remove_leading_clause(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos || comma + 1 >= text.size()) return text;
  std::string head = normalize_whitespace(text.substr(0, comma));
  std::vector<std::string> head_words = words_of(head);
  if (head_words.empty() || head_words.size() > 5) return text;
  std::string first = to_lower_ascii(strip_punct(head_words.front()));
  bool adverbial = adverbial_cues().count(first) > 0 ||
                   (first.size() > 3 && first.ends_with("ly"));
  if (!adverbial) return text;
  std::string rest = normalize_whitespace(text.substr(comma + 1));
  if (rest.empty()) return text;
  return rest;
}

bool contains_attribution_verb(const std::vector<std::string>& words) {
  const auto& verbs = attribution_verbs();
  for (const auto& w : words) {
    if (verbs.count(to_lower_ascii(strip_punct(w)))) return true;
  }
  return false;
}

// Removes "..., analysts said." / "..., said John Smith" tails and
// "Analysts said (that) ..." heads.
std::string remove_attribution(const std::string& text) {
  std::vector<std::string> words = words_of(text);
  if (words.empty()) return text;
  size_t last_comma = text.rfind(',');
  if (last_comma != std::string::npos && last_comma + 1 < text.size()) {
    std::vector<std::string> tail = words_of(text.substr(last_comma + 1));
    if (!tail.empty() && tail.size() <= 6 && contains_attribution_verb(tail)) {
      std::string head = normalize_whitespace(text.substr(0, last_comma));
      if (!head.empty()) return head;
    }
  }
  const auto& verbs = attribution_verbs();
  size_t verb_at = 0;
  for (size_t i = 1; i < words.size() && i <= 4; ++i) {
    if (verbs.count(to_lower_ascii(strip_punct(words[i])))) {
      verb_at = i;
      break;
    }
  }
  if (verb_at > 0) {
    bool head_is_plain = true;
    for (size_t i = 0; i < verb_at; ++i) {
      if (strip_punct(words[i]).empty() || words[i].find(',') != std::string::npos) {
        head_is_plain = false;
        break;
      }
    }
    if (head_is_plain) {
      size_t from = verb_at + 1;
      if (from < words.size() && to_lower_ascii(words[from]) == "that") ++from;
      if (from < words.size()) return join_words(words, from, words.size());
    }
  }
  return text;
}

// Drops a trailing subordinate clause introduced by "which", "who",
// "because", "although" or "while" when at least four words remain.
std::string remove_trailing_subordinate(const std::string& text) {
  static const std::unordered_set<std::string> openers = {"which", "who", "because",
                                                          "although", "while"};
  std::vector<std::string> words = words_of(text);
  for (size_t i = words.size(); i-- > 1;) {
    std::string w = to_lower_ascii(strip_punct(words[i]));
    if (!openers.count(w)) continue;
    size_t keep = i;
    if (keep >= 4) {
      std::string head = join_words(words, 0, keep);
      while (!head.empty() && (head.back() == ',' || head.back() == ' ')) head.pop_back();
      if (!head.empty()) return head;
    }
  }
  return text;
}

std::string strip_terminal_punctuation(const std::string& text) {
  std::string out = text;
  auto is_terminal = [](char c) {
    return c == '.' || c == '!' || c == '?' || c == ',' || c == ';' || c == ':' ||
           c == '"' || c == '\'';
  };
  while (!out.empty() && (is_terminal(out.back()) || out.back() == ' ')) out.pop_back();
  return out;
}

bool is_all_caps(const std::string& word) {
  int letters = 0;
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (!std::isupper(static_cast<unsigned char>(c))) return false;
      ++letters;
    }
  }
  return letters >= 2;
}

}  // namespace

std::string headline_case(const std::string& text) {
  std::vector<std::string> words = words_of(text);
  const auto& small = title_small_words();
  for (size_t i = 0; i < words.size(); ++i) {
    std::string& w = words[i];
    if (w.empty() || is_all_caps(w)) continue;
    std::string bare = to_lower_ascii(strip_punct(w));
    bool edge = i == 0 || i + 1 == words.size();
    if (!edge && small.count(bare)) {
      w = to_lower_ascii(w);
      continue;
    }
    // Capitalize the first letter, leaving interior casing intact.
    for (char& c : w) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        break;
      }
    }
  }
  return join_words(words, 0, words.size());
}

std::string trim_sentence(const std::string& sentence) {
  std::string text = normalize_whitespace(sentence);
  for (int pass = 0; pass < 8; ++pass) {
    std::string before = text;
    text = remove_parentheticals(text);
    text = remove_leading_clause(text);
    text = remove_attribution(text);
    text = remove_trailing_subordinate(text);
    if (text == before) break;
  }
  text = strip_terminal_punctuation(text);
  return headline_case(text);
}

TitleCheck title_test(const std::string& title) {
  std::vector<std::string> words = words_of(title);
  size_t count = 0;
  for (const auto& w : words) {
    if (!strip_punct(w).empty()) ++count;
  }
  if (count < 3) return {false, "too short"};
  if (count > 12) return {false, "too long"};
  std::string first = to_lower_ascii(strip_punct(words.front()));
  if (pronouns().count(first)) return {false, "starts with pronoun"};
  if (starts_with_discourse_marker(title)) return {false, "starts with discourse marker"};
  const auto& stop = stopwords();
  bool noun_like = false;
  for (const auto& w : words) {
    std::string bare = strip_punct(w);
    if (bare.empty()) continue;
    if (is_capitalized(bare) || !stop.count(to_lower_ascii(bare))) {
      noun_like = true;
      break;
    }
  }
  if (!noun_like) return {false, "no noun-like token"};
  std::string last = to_lower_ascii(strip_punct(words.back()));
  if (dangling_terminal_words().count(last)) return {false, "dangling terminal word"};
  const auto& verbs = common_verbs();
  bool verb_like = false;
  for (const auto& w : words) {
    std::string bare = to_lower_ascii(strip_punct(w));
    if (verbs.count(bare) || (bare.size() > 4 && (bare.ends_with("ed") || bare.ends_with("ing")))) {
      verb_like = true;
      break;
    }
  }
  if (!verb_like && count < 3) return {false, "no clause structure"};
  return {true, ""};
}

std::vector<TitleCandidate> select_candidates(
    const std::vector<TitleSource>& sentences,
    const std::vector<std::pair<std::string, double>>& top_words, int limit) {
  struct Scored {
    size_t position;
    double score;
  };
  std::vector<Scored> scored;
  scored.reserve(sentences.size());
  for (size_t i = 0; i < sentences.size(); ++i) {
    std::vector<std::string> tokens = tokenize(sentences[i].text);
    std::unordered_set<std::string> present(tokens.begin(), tokens.end());
    double score = 0.0;
    for (const auto& [word, weight] : top_words) {
      if (present.count(word)) score += weight;
    }
    if (sentences[i].first_of_summary) score += 0.5;
    scored.push_back({i, score});
  }
  std::stable_sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.position < b.position;
  });
  if (static_cast<int>(scored.size()) > limit) scored.resize(limit);
  std::vector<TitleCandidate> candidates;
  for (const auto& s : scored) {
    TitleCandidate c;
    c.source = sentences[s.position].text;
    c.rank_score = s.score;
    c.trimmed = trim_sentence(c.source);
    TitleCheck check = title_test(c.trimmed);
    c.passed = check.pass;
    c.reason = check.reason;
    candidates.push_back(std::move(c));
  }
  return candidates;
}

std::string generate_title(const std::vector<TitleSource>& sentences,
                           const std::vector<std::pair<std::string, double>>& top_words) {
  for (const auto& candidate : select_candidates(sentences, top_words)) {
    if (candidate.passed) return candidate.trimmed;
  }
  // Fallback: headline from the strongest topic words.
  std::string joined;
  int used = 0;
  for (const auto& [word, weight] : top_words) {
    (void)weight;
    if (used == 3) break;
    if (!joined.empty()) joined.push_back(' ');
    joined += word;
    ++used;
  }
  if (joined.empty()) return "Untitled";
  return headline_case(joined);
}

}  // namespace ndorgs
