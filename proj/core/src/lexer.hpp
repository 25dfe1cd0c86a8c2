#pragma once

// Tokenizer shared by the word and polynomial grammars.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nalg/error.hpp"
#include "nalg/word.hpp"

namespace nalg::detail {

enum class Tok { Letter, Number, Slash, LParen, RParen, Plus, Minus, Star, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  Lexer(std::string_view text, const std::vector<std::string>* alphabet) : text_(text), alphabet_(alphabet) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  std::string_view text() const { return text_; }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    if (i_ >= text_.size()) {
      current_ = {Tok::End, "", i_};
      return;
    }
    const std::size_t start = i_;
    const char c = text_[i_];
    auto single = [&](Tok k) {
      ++i_;
      current_ = {k, std::string(1, c), start};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '/': return single(Tok::Slash);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      current_ = {Tok::Number, std::string(text_.substr(start, i_ - start)), start};
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    if (alphabet_ != nullptr) {
      std::size_t best = 0;
      for (const std::string& name : *alphabet_) {
        if (name.size() > best && text_.substr(start, name.size()) == name) best = name.size();
      }
      if (best == 0) throw ParseError("unknown letter", start);
      i_ += best;
    } else {
      ++i_;
      while (i_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) ++i_;
    }
    current_ = {Tok::Letter, std::string(text_.substr(start, i_ - start)), start};
  }

  std::string_view text_;
  const std::vector<std::string>* alphabet_;
  std::size_t i_ = 0;
  Token current_{Tok::End, "", 0};
};

/// item := letter | '(' item item ')'
Word parse_item(Lexer& lex);

/// word := item [item], stopping before '+', '-' or end of input.
Word parse_juxtaposed(Lexer& lex);

}  // namespace nalg::detail
