#include "nalg/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace nalg {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::size_t offset;  // column of text[0], 0-based
  std::string_view text;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Non-empty lines with comments removed and whitespace trimmed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t b = 0, e = line.size();
    while (b < e && is_space(line[b])) ++b;
    while (e > b && is_space(line[e - 1])) --e;
    if (b < e) out.push_back({number, b, line.substr(b, e - b)});
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& message) {
  throw ParseError(message, line.number, line.offset + column + 1);
}

// Runs a parser on a slice of a line and maps its diagnostics to file positions.
template <typename Fn>
auto at_line(const Line& line, std::size_t column, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    fail(line, column + e.position(), e.detail());
  } catch (const DivisionByZero& e) {
    fail(line, column, e.what());
  } catch (const InvalidArgument& e) {
    fail(line, column, e.what());
  }
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

// Keyword followed by whitespace; returns the rest (trimmed) and its column.
std::optional<std::pair<std::string_view, std::size_t>> keyword(const Line& line, std::string_view kw) {
  if (line.text.substr(0, kw.size()) != kw) return std::nullopt;
  if (line.text.size() > kw.size() && !is_space(line.text[kw.size()])) return std::nullopt;
  std::size_t lead = 0;
  std::string_view rest = trim(line.text.substr(kw.size()), &lead);
  return std::make_pair(rest, kw.size() + lead);
}

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::size_t basis_index(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? names.size() : static_cast<std::size_t>(it - names.begin());
}

Vec element_from_text(const Field& field, const std::vector<std::string>& names, std::string_view text) {
  const Poly p = parse_poly(field, text, &names);
  Vec v = zero_vector(field, names.size());
  for (const auto& [w, c] : p.terms()) {
    if (!w.is_letter()) throw ParseError("expected a linear combination of basis names, found '" + print_word(w) + "'", 0);
    const std::size_t i = basis_index(names, w.letter_name());
    if (i == names.size()) throw ParseError("unknown basis name '" + w.letter_name() + "'", 0);
    v[i] = c;
  }
  return v;
}

Field field_line(const Line& line, std::string_view rest, std::size_t column) {
  return at_line(line, column, [&] { return Field::parse(rest); });
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const auto lines = content_lines(text);
  std::optional<Field> field;
  std::optional<std::vector<std::string>> names;
  std::vector<Vec> table;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Line& line : lines) {
    if (auto f = keyword(line, "field")) {
      if (field) fail(line, 0, "duplicate field line");
      field = field_line(line, f->first, f->second);
      continue;
    }
    if (auto b = keyword(line, "basis")) {
      if (!field) fail(line, 0, "basis before field");
      if (names) fail(line, 0, "duplicate basis line");
      names.emplace();
      std::size_t pos = 0;
      const std::string_view rest = b->first;
      while (pos < rest.size()) {
        while (pos < rest.size() && is_space(rest[pos])) ++pos;
        std::size_t end = pos;
        while (end < rest.size() && !is_space(rest[end])) ++end;
        if (end == pos) break;
        const std::string name(rest.substr(pos, end - pos));
        if (!valid_name(name)) fail(line, b->second + pos, "invalid basis name '" + name + "'");
        if (basis_index(*names, name) != names->size()) fail(line, b->second + pos, "duplicate basis name '" + name + "'");
        names->push_back(name);
        pos = end;
      }
      table.assign(names->size() * names->size(), zero_vector(*field, names->size()));
      continue;
    }
    if (!names) fail(line, 0, "expected 'field' and 'basis' before products");
    const std::size_t eq = line.text.find('=');
    if (eq == std::string_view::npos) fail(line, 0, "expected 'a * b = ...'");
    const std::string_view lhs = line.text.substr(0, eq);
    const std::size_t star = lhs.find('*');
    if (star == std::string_view::npos) fail(line, 0, "expected '*' in product line");
    std::size_t lead_a = 0, lead_b = 0;
    const std::string_view a = trim(lhs.substr(0, star), &lead_a);
    const std::string_view b = trim(lhs.substr(star + 1), &lead_b);
    const std::size_t i = basis_index(*names, a), j = basis_index(*names, b);
    if (i == names->size()) fail(line, lead_a, "unknown basis name '" + std::string(a) + "'");
    if (j == names->size()) fail(line, star + 1 + lead_b, "unknown basis name '" + std::string(b) + "'");
    if (!seen.insert({i, j}).second) fail(line, 0, "duplicate product " + std::string(a) + " * " + std::string(b));
    std::size_t lead_r = 0;
    const std::string_view rhs = trim(line.text.substr(eq + 1), &lead_r);
    table[i * names->size() + j] = at_line(line, eq + 1 + lead_r, [&] { return element_from_text(*field, *names, rhs); });
  }
  if (!field) throw ParseError("missing 'field' line", 1, 1);
  if (!names) throw ParseError("missing 'basis' line", 1, 1);
  return Algebra(*field, *names, table);
}

std::string format_algebra(const Algebra& a) {
  std::ostringstream out;
  out << "field " << a.field().to_string() << "\n";
  out << "basis";
  for (const auto& n : a.basis_names()) out << ' ' << n;
  out << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.product_sparse(i, j).empty()) continue;
      out << a.basis_names()[i] << " * " << a.basis_names()[j] << " = " << a.format_element(a.product(i, j)) << "\n";
    }
  return out.str();
}

Vec parse_element(const Algebra& a, std::string_view text) {
  return element_from_text(a.field(), a.basis_names(), text);
}

Morphism parse_morphism(std::string_view text, const Algebra& source, const Algebra& target) {
  if (!(source.field() == target.field())) throw FieldMismatch();
  Matrix m(source.field(), target.dim(), source.dim());
  std::set<std::size_t> seen;
  for (const Line& raw : content_lines(text)) {
    Line line = raw;
    if (auto rest = keyword(raw, "map")) {
      line.offset += rest->second;
      line.text = rest->first;
    }
    const std::size_t arrow = line.text.find("->");
    if (arrow == std::string_view::npos) fail(line, 0, "expected 'e -> ...'");
    std::size_t lead = 0;
    const std::string_view name = trim(line.text.substr(0, arrow), &lead);
    const std::size_t i = basis_index(source.basis_names(), name);
    if (i == source.dim()) fail(line, lead, "unknown source basis name '" + std::string(name) + "'");
    if (!seen.insert(i).second) fail(line, lead, "duplicate image for '" + std::string(name) + "'");
    std::size_t lead_r = 0;
    const std::string_view rhs = trim(line.text.substr(arrow + 2), &lead_r);
    const Vec img = at_line(line, arrow + 2 + lead_r, [&] { return parse_element(target, rhs); });
    for (std::size_t r = 0; r < target.dim(); ++r) m(r, i) = img[r];
  }
  return Morphism::make(source, target, m);
}

std::string format_morphism(const Morphism& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.source().dim(); ++i) {
    out << "map " << f.source().basis_names()[i] << " -> " << f.target().format_element(f.matrix().column(i)) << "\n";
  }
  return out.str();
}

IdentitySet parse_variety(std::string_view text) {
  IdentitySet v{"", Field::rationals(), {}};
  bool named = false, fielded = false;
  for (const Line& line : content_lines(text)) {
    if (auto n = keyword(line, "variety")) {
      if (named) fail(line, 0, "duplicate variety line");
      if (n->first.empty()) fail(line, 0, "missing variety name");
      v.name = std::string(n->first);
      named = true;
      continue;
    }
    if (auto f = keyword(line, "field")) {
      if (fielded) fail(line, 0, "duplicate field line");
      if (!v.polys.empty()) fail(line, 0, "field must precede the identities");
      v.field = field_line(line, f->first, f->second);
      fielded = true;
      continue;
    }
    Poly p = at_line(line, 0, [&] { return parse_poly(v.field, line.text); });
    if (p.is_zero()) fail(line, 0, "identity is the zero polynomial");
    v.polys.push_back(std::move(p));
  }
  if (!named) v.name = "custom";
  return v;
}

std::string format_variety(const IdentitySet& v) {
  std::ostringstream out;
  out << "variety " << v.name << "\n";
  out << "field " << v.field.to_string() << "\n";
  for (const Poly& p : v.polys) out << p.to_string() << "\n";
  return out.str();
}

}  // namespace nalg
