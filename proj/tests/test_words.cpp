#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "nalg/word.hpp"
#include "oracles.hpp"

using namespace nalg;
using namespace testsupport;

TEST_CASE("parsing words") {
  const Word w = parse_word("x(yz)");
  CHECK(w.length() == 3);
  CHECK(w.left() == Word::letter("x"));
  CHECK(w.right() == Word::product(Word::letter("y"), Word::letter("z")));
  CHECK(parse_word("(xy)z") != w);
  CHECK(parse_word("xy") == Word::product(Word::letter("x"), Word::letter("y")));
  CHECK(parse_word("(xy)") == parse_word("xy"));
  CHECK_THROWS_AS(parse_word("((xy))"), ParseError);
  CHECK(parse_word("e12").is_letter());
  CHECK(parse_word("e1e2").length() == 2);
  CHECK(parse_word("(xx)(x(xx))").length() == 5);
}

TEST_CASE("malformed words are rejected with a position") {
  CHECK_THROWS_AS(parse_word("xyz"), ParseError);
  CHECK_THROWS_AS(parse_word("()"), ParseError);
  CHECK_THROWS_AS(parse_word("(x"), ParseError);
  CHECK_THROWS_AS(parse_word("x)"), ParseError);
  CHECK_THROWS_AS(parse_word("(xyz)"), ParseError);
  CHECK_THROWS_AS(parse_word("x(yz)x"), ParseError);
  CHECK_THROWS_AS(parse_word(""), ParseError);
  try {
    parse_word("x(y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() <= 3);
  }
}

TEST_CASE("alphabet names take the longest match") {
  const std::vector<std::string> alphabet{"a", "ab", "b"};
  CHECK(parse_word("ab", &alphabet).is_letter());
  CHECK(parse_word("a b", &alphabet).length() == 2);
  CHECK(parse_word("(a b)ab", &alphabet).length() == 3);
  CHECK_THROWS_AS(parse_word("(ab)a", &alphabet), ParseError);
  const std::vector<std::string> names{"x2", "x"};
  CHECK(parse_word("x2x", &names).length() == 2);
  CHECK_THROWS_AS(parse_word("q", &names), ParseError);
}

TEST_CASE("printing uses minimal brackets and round-trips") {
  CHECK(print_word(parse_word("x(yz)")) == "x(yz)");
  CHECK(print_word(parse_word("(xy)z")) == "(xy)z");
  CHECK(print_word(parse_word("((xy)(zx))")) == "(xy)(zx)");
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, {"x", "y", "z"}, static_cast<std::size_t>(uniform(rng, 1, 7)));
    CHECK(parse_word(print_word(w)) == w);
  }
}

TEST_CASE("types and degrees") {
  const Word w = parse_word("(xy)(xz)");
  CHECK(w.type() == TypeVector{{"x", 2}, {"y", 1}, {"z", 1}});
  CHECK(w.degree("x") == 2);
  CHECK(w.degree("q") == 0);
  CHECK(w.leaves() == std::vector<std::string>{"x", "y", "x", "z"});
  CHECK(type_to_string(w.type()) == "(x:2,y:1,z:1)");
}

TEST_CASE("word order: length first, then left factor, then right factor") {
  CHECK(parse_word("y") < parse_word("xx"));
  CHECK(parse_word("x(xx)") < parse_word("(xx)x"));
  CHECK(parse_word("xy") < parse_word("yx"));
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Word a = random_word(rng, {"x", "y"}, static_cast<std::size_t>(uniform(rng, 1, 4)));
    const Word b = random_word(rng, {"x", "y"}, static_cast<std::size_t>(uniform(rng, 1, 4)));
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
    if (a.length() < b.length()) CHECK(a < b);
  }
}

TEST_CASE("enumeration matches the Catalan count") {
  for (std::size_t s = 1; s <= 3; ++s) {
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < s; ++i) letters.push_back(std::string(1, static_cast<char>('a' + i)));
    const auto words = enumerate_words(letters, 5);
    std::map<std::size_t, std::size_t> by_len;
    for (const Word& w : words) by_len[w.length()]++;
    for (std::size_t n = 1; n <= 5; ++n) {
      unsigned long long expect = catalan(static_cast<unsigned>(n - 1));
      for (std::size_t i = 0; i < n; ++i) expect *= s;
      CHECK(by_len[n] == expect);
      CHECK(count_words(s, n) == expect);
    }
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());
  }
  CHECK(enumerate_words({"x"}, 3).size() == 4);
}

TEST_CASE("renaming letters") {
  const Word w = parse_word("x(yx)");
  CHECK(rename_letters(w, {{"x", "b"}}) == parse_word("b(yb)"));
  CHECK(rename_letters(w, {}) == w);
}
