#pragma once

// Elements of the free non-associative algebra: finite linear combinations
// of words with no constant term.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nalg/scalar.hpp"
#include "nalg/word.hpp"

namespace nalg {

class Poly {
 public:
  explicit Poly(const Field& field = Field()) : field_(field) {}

  static Poly monomial(const Field& field, const Word& w, const Scalar& coefficient);
  static Poly monomial(const Field& field, const Word& w) { return monomial(field, w, Scalar::one(field)); }
  static Poly variable(const Field& field, const std::string& name) { return monomial(field, Word::letter(name)); }

  const Field& field() const { return field_; }
  /// Ordered by word order; no stored coefficient is zero.
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& coefficient);

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Scalar& c, const Poly& p);
  /// Bilinear extension of the word product.
  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Maximal word length (0 for the zero polynomial).
  std::size_t degree() const;
  std::size_t degree_in(const std::string& variable) const;
  std::set<std::string> variables() const;
  bool is_homogeneous() const;
  /// Every variable occurs at most once in every monomial.
  bool is_multilinear() const;

  std::string to_string() const;

 private:
  Field field_;
  std::map<Word, Scalar> terms_;
};

Poly poly_mul(const Poly& p, const Poly& q);

/// Components keyed by monomial type; their sum is p and none is zero.
std::map<TypeVector, Poly> homogeneous_components(const Poly& p);

/// poly := term {('+'|'-') term}; term := [scalar ['*']] word.
/// A single `0` denotes the zero polynomial.
Poly parse_poly(const Field& field, std::string_view text, const std::vector<std::string>* alphabet = nullptr);

}  // namespace nalg
