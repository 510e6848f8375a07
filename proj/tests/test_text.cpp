#include <doctest.h>

#include <cmath>

#include "ndorgs/text.hpp"

using namespace ndorgs;

TEST_SUITE("text") {

TEST_CASE("tokenize lowercases and splits on punctuation") {
  CHECK(tokenize("Hello, World!") == std::vector<std::string>{"hello", "world"});
  CHECK(tokenize("a  b\tc\nd") == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(tokenize("") == std::vector<std::string>{});
  CHECK(tokenize(" .,;: ") == std::vector<std::string>{});
}

TEST_CASE("tokenize keeps digits and inner apostrophes") {
  CHECK(tokenize("in 2004 GDP rose 3.5%") ==
        std::vector<std::string>{"in", "2004", "gdp", "rose", "3", "5"});
  CHECK(tokenize("don't stop") == std::vector<std::string>{"don't", "stop"});
  CHECK(tokenize("the dogs' home") == std::vector<std::string>{"the", "dogs", "home"});
  CHECK(tokenize("'quoted'") == std::vector<std::string>{"quoted"});
}

TEST_CASE("tokenize treats non-ascii bytes as word characters") {
  auto tokens = tokenize("caf\xc3\xa9 bar");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0] == "caf\xc3\xa9");
  CHECK(tokens[1] == "bar");
}

TEST_CASE("cased_tokens keeps casing with the same boundaries") {
  CHECK(cased_tokens("Hello, World!") == std::vector<std::string>{"Hello", "World"});
  auto lower = tokenize("South Korea grew");
  auto cased = cased_tokens("South Korea grew");
  REQUIRE(lower.size() == cased.size());
  CHECK(cased[0] == "South");
  CHECK(lower[0] == "south");
}

TEST_CASE("content_tokens drops stopwords") {
  auto tokens = tokenize("the market is strong and the bank agrees");
  auto content = content_tokens(tokens);
  CHECK(content == std::vector<std::string>{"market", "strong", "bank", "agrees"});
}

TEST_CASE("content_token_set is sorted and distinct") {
  auto set = content_token_set("Bank market bank MARKET profit");
  CHECK(set == std::vector<std::string>{"bank", "market", "profit"});
}

TEST_CASE("segment_sentences splits on terminators before capitals") {
  auto s = segment_sentences("First sentence. Second one! Third? Yes.");
  REQUIRE(s.size() == 4);
  CHECK(s[0] == "First sentence.");
  CHECK(s[1] == "Second one!");
  CHECK(s[2] == "Third?");
  CHECK(s[3] == "Yes.");
}

TEST_CASE("segment_sentences needs an upper-case, digit or quote continuation") {
  CHECK(segment_sentences("It ran. then it stopped.").size() == 1);
  CHECK(segment_sentences("Version 2. 0 shipped.").size() == 2);
  CHECK(segment_sentences("He left. \"Stay,\" she said.").size() == 2);
}

TEST_CASE("segment_sentences keeps abbreviations and initials together") {
  CHECK(segment_sentences("Mr. Smith arrived late.").size() == 1);
  CHECK(segment_sentences("U.S. officials spoke to Dr. Jones.").size() == 1);
  CHECK(segment_sentences("J. K. Rowling wrote it.").size() == 1);
  CHECK(segment_sentences("The firm met Mr. Smith. Profits rose.").size() == 2);
}

TEST_CASE("segment_sentences splits after closing quotes") {
  auto s = segment_sentences("He said \"Stop.\" Then he left.");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "He said \"Stop.\"");
  CHECK(s[1] == "Then he left.");
}

TEST_CASE("segment_sentences treats blank lines as boundaries") {
  auto s = segment_sentences("first paragraph without terminator\n\nsecond one");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "first paragraph without terminator");
  CHECK(s[1] == "second one");
}

TEST_CASE("segment_sentences collapses runs of terminators") {
  auto s = segment_sentences("Really?! Yes.");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "Really?!");
}

TEST_CASE("normalize_whitespace collapses and trims") {
  CHECK(normalize_whitespace("  a\t b\n\nc  ") == "a b c");
  CHECK(normalize_whitespace("") == "");
  CHECK(normalize_whitespace(" \t ") == "");
}

TEST_CASE("helpers") {
  CHECK(to_lower_ascii("AbC-\xc3\x89") == "abc-\xc3\x89");
  CHECK(is_capitalized("Hello"));
  CHECK(!is_capitalized("hello"));
  CHECK(!is_capitalized("9am"));
  CHECK(!is_capitalized(""));
  CHECK(split("a,b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(split("", ',') == std::vector<std::string>{""});
}

TEST_CASE("softplus matches ln(1 + e^x) and is safe at extremes") {
  CHECK(softplus(0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(softplus(1.5) == doctest::Approx(std::log(1.0 + std::exp(1.5))).epsilon(1e-12));
  CHECK(softplus(100.0) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(softplus(-100.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(softplus(0.2) > softplus(0.1));
}

}  // TEST_SUITE
