#pragma once

// Non-associative words: full binary trees with named letters at the
// leaves, i.e. elements of the free magma on an alphabet.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace nalg {

/// Letter counts of a monomial; letters of degree 0 are omitted.
using TypeVector = std::map<std::string, std::size_t>;

class Word {
 public:
  static Word letter(std::string name);
  /// The free-magma product (ab); never re-associated.
  static Word product(const Word& left, const Word& right);

  bool is_letter() const;
  const std::string& letter_name() const;  // only for letters
  const Word& left() const;                // only for products
  const Word& right() const;

  /// Number of leaves.
  std::size_t length() const;
  std::size_t degree(std::string_view letter) const;
  TypeVector type() const;
  /// Leaf letters from left to right.
  std::vector<std::string> leaves() const;

  /// Length first, then left factor, then right factor; letters by name.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b);

  std::string to_string() const;

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Word word_mul(const Word& a, const Word& b) { return Word::product(a, b); }

/// All words of length <= max_length over the letters, ordered by
/// length and then structurally (Word's ordering).
std::vector<Word> enumerate_words(const std::vector<std::string>& letters, std::size_t max_length);

/// Number of words of length exactly n over s letters: Catalan(n-1) * s^n.
unsigned long long count_words(std::size_t letters, std::size_t n);

/// Grammar: word := item [item]; item := letter | '(' item item ')'.
/// Without an alphabet a letter is one ASCII letter followed by digits or
/// underscores (so `xy` is two letters and `e12` is one). With an alphabet,
/// the longest matching alphabet name is taken.
Word parse_word(std::string_view text, const std::vector<std::string>* alphabet = nullptr);

/// Minimal brackets: outer brackets dropped, product factors bracketed.
std::string print_word(const Word& w);

/// Replaces letters according to the map; unmapped letters are kept.
Word rename_letters(const Word& w, const std::map<std::string, std::string>& renaming);

std::string type_to_string(const TypeVector& type);

}  // namespace nalg
