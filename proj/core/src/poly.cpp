#include "nalg/poly.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "nalg/error.hpp"

namespace nalg {

Poly Poly::monomial(const Field& field, const Word& w, const Scalar& coefficient) {
  Poly p(field);
  p.add_term(w, coefficient);
  return p;
}

Scalar Poly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Poly::add_term(const Word& w, const Scalar& coefficient) {
  if (!(coefficient.field() == field_)) throw FieldMismatch();
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly out(field_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (!(field_ == rhs.field_)) throw FieldMismatch();
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (!(field_ == rhs.field_)) throw FieldMismatch();
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

Poly operator*(const Scalar& c, const Poly& p) {
  Poly out(p.field_);
  for (const auto& [w, a] : p.terms_) out.add_term(w, c * a);
  return out;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (!(p.field_ == q.field_)) throw FieldMismatch();
  Poly out(p.field_);
  for (const auto& [u, a] : p.terms_)
    for (const auto& [v, b] : q.terms_) out.add_term(Word::product(u, v), a * b);
  return out;
}

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.length());
  return d;
}

std::size_t Poly::degree_in(const std::string& variable) const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree(variable));
  return d;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [w, c] : terms_)
    for (auto& l : w.leaves()) out.insert(l);
  return out;
}

bool Poly::is_homogeneous() const { return homogeneous_components(*this).size() <= 1; }

bool Poly::is_multilinear() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) {
    const TypeVector t = term.first.type();
    return std::all_of(t.begin(), t.end(), [](const auto& kv) { return kv.second <= 1; });
  });
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string coeff;
    bool negative = false;
    if (field_.is_finite()) {
      coeff = c.is_one() ? "" : c.to_string();
    } else {
      negative = c.rational() < 0;
      const mpq_class magnitude = abs(c.rational());
      coeff = magnitude == 1 ? "" : magnitude.get_str();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (!coeff.empty()) out += coeff + " ";
    out += print_word(w);
  }
  return out;
}

std::map<TypeVector, Poly> homogeneous_components(const Poly& p) {
  std::map<TypeVector, Poly> out;
  for (const auto& [w, c] : p.terms()) {
    auto [it, inserted] = out.try_emplace(w.type(), p.field());
    it->second.add_term(w, c);
  }
  return out;
}

Poly parse_poly(const Field& field, std::string_view text, const std::vector<std::string>* alphabet) {
  using detail::Tok;
  detail::Lexer lex(text, alphabet);
  Poly out(field);
  if (lex.peek().kind == Tok::Number && lex.peek().text == "0") {
    detail::Lexer probe(text, alphabet);
    probe.next();
    if (probe.peek().kind == Tok::End) return out;
  }
  bool first = true;
  while (true) {
    bool negative = false;
    const auto& t = lex.peek();
    if (t.kind == Tok::End) {
      if (first) throw ParseError("empty polynomial", t.pos);
      throw ParseError("expected a term after sign", t.pos);
    }
    if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
      negative = t.kind == Tok::Minus;
      lex.next();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", t.pos);
    }
    first = false;
    Scalar coeff = Scalar::one(field);
    if (lex.peek().kind == Tok::Number) {
      std::string literal = lex.next().text;
      if (lex.peek().kind == Tok::Slash) {
        lex.next();
        const auto den = lex.next();
        if (den.kind != Tok::Number) throw ParseError("expected denominator", den.pos);
        literal += "/" + den.text;
      }
      coeff = Scalar::parse(field, literal);
      if (lex.peek().kind == Tok::Star) lex.next();
    }
    const Word w = detail::parse_juxtaposed(lex);
    out.add_term(w, negative ? -coeff : coeff);
    const auto& after = lex.peek();
    if (after.kind == Tok::End) break;
    if (after.kind == Tok::RParen) throw ParseError("unbalanced brackets: unexpected ')'", after.pos);
    if (after.kind != Tok::Plus && after.kind != Tok::Minus) {
      throw ParseError("unexpected '" + after.text + "' in polynomial", after.pos);
    }
  }
  return out;
}

}  // namespace nalg
