#include "nalg/word.hpp"

#include <algorithm>
#include <functional>

#include "lexer.hpp"
#include "nalg/error.hpp"

namespace nalg {

struct Word::Node {
  std::string letter;
  Word left{nullptr};
  Word right{nullptr};
  std::size_t length = 1;
};

Word Word::letter(std::string name) {
  auto node = std::make_shared<Node>();
  node->letter = std::move(name);
  return Word(std::move(node));
}

Word Word::product(const Word& left, const Word& right) {
  auto node = std::make_shared<Node>();
  node->left = left;
  node->right = right;
  node->length = left.length() + right.length();
  return Word(std::move(node));
}

bool Word::is_letter() const { return node_->length == 1; }
const std::string& Word::letter_name() const { return node_->letter; }
const Word& Word::left() const { return node_->left; }
const Word& Word::right() const { return node_->right; }
std::size_t Word::length() const { return node_->length; }

std::size_t Word::degree(std::string_view letter) const {
  if (is_letter()) return node_->letter == letter ? 1 : 0;
  return left().degree(letter) + right().degree(letter);
}

TypeVector Word::type() const {
  TypeVector t;
  for (const std::string& l : leaves()) ++t[l];
  return t;
}

std::vector<std::string> Word::leaves() const {
  std::vector<std::string> out;
  std::function<void(const Word&)> walk = [&](const Word& w) {
    if (w.is_letter()) {
      out.push_back(w.letter_name());
    } else {
      walk(w.left());
      walk(w.right());
    }
  };
  walk(*this);
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (a.is_letter()) return a.letter_name() <=> b.letter_name();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

bool operator==(const Word& a, const Word& b) { return (a <=> b) == 0; }

std::string Word::to_string() const { return print_word(*this); }

std::vector<Word> enumerate_words(const std::vector<std::string>& letters, std::size_t max_length) {
  std::vector<std::string> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<Word>> by_length(max_length + 1);
  if (max_length >= 1) {
    for (const auto& l : sorted) by_length[1].push_back(Word::letter(l));
  }
  for (std::size_t n = 2; n <= max_length; ++n) {
    for (std::size_t i = 1; i < n; ++i) {
      for (const Word& a : by_length[i])
        for (const Word& b : by_length[n - i]) by_length[n].push_back(Word::product(a, b));
    }
  }
  std::vector<Word> out;
  for (auto& level : by_length) out.insert(out.end(), level.begin(), level.end());
  return out;
}

unsigned long long count_words(std::size_t letters, std::size_t n) {
  if (n == 0) return 0;
  // Catalan(n-1) via the recurrence C(k+1) = C(k) * 2(2k+1)/(k+2).
  unsigned long long catalan = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) catalan = catalan * 2 * (2 * k + 1) / (k + 2);
  unsigned long long power = 1;
  for (std::size_t i = 0; i < n; ++i) power *= letters;
  return catalan * power;
}

namespace detail {

Word parse_item(Lexer& lex) {
  const Token t = lex.next();
  if (t.kind == Tok::Letter) return Word::letter(t.text);
  if (t.kind != Tok::LParen) throw ParseError("expected a letter or '('", t.pos);
  if (lex.peek().kind == Tok::RParen) throw ParseError("empty brackets '()' are not a word", t.pos);
  Word left = parse_item(lex);
  if (lex.peek().kind == Tok::RParen) {
    throw ParseError("brackets must enclose exactly two words", lex.peek().pos);
  }
  Word right = parse_item(lex);
  const Token close = lex.next();
  if (close.kind != Tok::RParen) {
    if (close.kind == Tok::End) throw ParseError("unbalanced brackets: missing ')'", close.pos);
    throw ParseError("brackets must enclose exactly two words; ambiguous unbracketed product", close.pos);
  }
  return Word::product(left, right);
}

Word parse_juxtaposed(Lexer& lex) {
  const std::size_t start = lex.peek().pos;
  auto at_item = [&] { return lex.peek().kind == Tok::Letter || lex.peek().kind == Tok::LParen; };
  if (!at_item()) throw ParseError("expected a word", start);
  Word first = parse_item(lex);
  if (!at_item()) return first;
  Word second = parse_item(lex);
  if (at_item()) {
    throw ParseError("unbracketed product of three or more words is ambiguous", lex.peek().pos);
  }
  return Word::product(first, second);
}

}  // namespace detail

Word parse_word(std::string_view text, const std::vector<std::string>* alphabet) {
  detail::Lexer lex(text, alphabet);
  Word w = detail::parse_juxtaposed(lex);
  const auto& rest = lex.peek();
  if (rest.kind == detail::Tok::RParen) throw ParseError("unbalanced brackets: unexpected ')'", rest.pos);
  if (rest.kind != detail::Tok::End) throw ParseError("unexpected '" + rest.text + "' after word", rest.pos);
  return w;
}

namespace {

void print_factor(const Word& w, std::string& out);

void print_bare(const Word& w, std::string& out) {
  if (w.is_letter()) {
    out += w.letter_name();
    return;
  }
  print_factor(w.left(), out);
  print_factor(w.right(), out);
}

void print_factor(const Word& w, std::string& out) {
  if (w.is_letter()) {
    out += w.letter_name();
    return;
  }
  out += '(';
  print_bare(w, out);
  out += ')';
}

}  // namespace

std::string print_word(const Word& w) {
  std::string out;
  print_bare(w, out);
  return out;
}

Word rename_letters(const Word& w, const std::map<std::string, std::string>& renaming) {
  if (w.is_letter()) {
    auto it = renaming.find(w.letter_name());
    return it == renaming.end() ? w : Word::letter(it->second);
  }
  return Word::product(rename_letters(w.left(), renaming), rename_letters(w.right(), renaming));
}

std::string type_to_string(const TypeVector& type) {
  std::string out = "(";
  bool first = true;
  for (const auto& [letter, k] : type) {
    if (!first) out += ',';
    first = false;
    out += letter + ":" + std::to_string(k);
  }
  return out + ")";
}

}  // namespace nalg
