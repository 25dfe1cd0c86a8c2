// Degree-truncated free algebras in a variety.
//
// Words of length <= d span the truncated free algebra. The relation space U
// is the ideal generated by all values of the identities, computed from
// generic substitutions: a variable v of an identity is replaced by
// sum_w t_{v,w} w over words w, and every coefficient of a t-monomial is a
// relation. Over Q the identities are homogenized first and U splits into
// blocks by letter type; over GF(p) (and whenever extra relations are
// present) a single block is used and t-monomials are merged by reduced
// exponents, which captures exactly the span of values of the identities.

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "nalg/variety.hpp"

namespace nalg {

namespace {

using Counts = std::vector<std::size_t>;  // letter multiplicities

Counts add_counts(const Counts& a, const Counts& b) {
  Counts out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool within(const Counts& a, const std::optional<Counts>& bound) {
  if (!bound) return true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > (*bound)[i]) return false;
  return true;
}

using Row = std::map<std::size_t, Scalar>;  // column -> nonzero coefficient

// Relations are short, so the blocks are kept as sparse rows in fully
// reduced echelon form. A row's pivot is its smallest column.
class SparseEchelon {
 public:
  Row reduce(Row v) const {
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [k, x] : v)
      if (pivot_row_.count(k)) hits.emplace_back(k, x);
    for (const auto& [k, x] : hits)
      for (const auto& [col, y] : rows_[pivot_row_.at(k)]) add(v, col, -(x * y));
    return v;
  }

  std::optional<Row> insert(const Row& v) {
    Row r = reduce(v);
    if (r.empty()) return std::nullopt;
    const std::size_t pivot = r.begin()->first;
    const Scalar inv = Scalar::one(r.begin()->second.field()) / r.begin()->second;
    for (auto& [k, x] : r) x *= inv;
    for (Row& row : rows_) {
      const auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Scalar c = it->second;
      for (const auto& [k, x] : r) add(row, k, -(c * x));
    }
    pivot_row_.emplace(pivot, rows_.size());
    rows_.push_back(r);
    return r;
  }

  bool is_pivot(std::size_t col) const { return pivot_row_.count(col) != 0; }
  const std::map<std::size_t, std::size_t>& pivots() const { return pivot_row_; }

  static void add(Row& v, std::size_t k, const Scalar& x) {
    auto [pos, fresh] = v.try_emplace(k, x);
    if (!fresh) {
      pos->second += x;
      if (pos->second.is_zero()) v.erase(pos);
    }
  }

 private:
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

std::size_t total(const Counts& c) {
  std::size_t s = 0;
  for (std::size_t x : c) s += x;
  return s;
}

// Words grouped by letter counts, generated by splitting the counts.
class WordStore {
 public:
  WordStore(const std::vector<std::string>& letters, std::size_t d, const std::optional<Counts>& bound,
            std::size_t max_basis)
      : letters_(letters) {
    enumerate_counts(Counts(letters.size(), 0), 0, d, bound);
    std::sort(all_counts_.begin(), all_counts_.end(), [](const Counts& a, const Counts& b) {
      return total(a) != total(b) ? total(a) < total(b) : a < b;
    });
    unsigned long long n = 0;
    for (const Counts& c : all_counts_) {
      n += count(c);
      if (n > max_basis) {
        throw BudgetExceeded("truncated free algebra needs more than " + std::to_string(max_basis) + " words");
      }
    }
    for (const Counts& c : all_counts_) generate(c);
  }

  const std::vector<Counts>& all_counts() const { return all_counts_; }
  const std::vector<Word>& words(const Counts& c) const { return words_.at(c); }

  Counts counts_of(const Word& w) const {
    Counts out(letters_.size(), 0);
    for (const std::string& leaf : w.leaves()) {
      out[static_cast<std::size_t>(std::lower_bound(letters_.begin(), letters_.end(), leaf) - letters_.begin())]++;
    }
    return out;
  }

 private:
  void enumerate_counts(Counts cur, std::size_t pos, std::size_t budget, const std::optional<Counts>& bound) {
    if (pos == cur.size()) {
      if (total(cur) > 0) all_counts_.push_back(cur);
      return;
    }
    const std::size_t cap = bound ? std::min(budget, (*bound)[pos]) : budget;
    for (std::size_t k = 0; k <= cap; ++k) {
      cur[pos] = k;
      enumerate_counts(cur, pos + 1, budget - k, bound);
    }
  }

  unsigned long long count(const Counts& c) {
    auto it = counts_memo_.find(c);
    if (it != counts_memo_.end()) return it->second;
    unsigned long long n = 0;
    if (total(c) == 1) {
      n = 1;
    } else {
      for_each_split(c, [&](const Counts& l, const Counts& r) {
        const unsigned long long a = count(l), b = count(r);
        n = (a != 0 && b > (1ULL << 62) / a) ? (1ULL << 62) : std::min(n + a * b, 1ULL << 62);
      });
    }
    counts_memo_[c] = n;
    return n;
  }

  void generate(const Counts& c) {
    std::vector<Word> out;
    if (total(c) == 1) {
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] == 1) out.push_back(Word::letter(letters_[i]));
    } else {
      for_each_split(c, [&](const Counts& l, const Counts& r) {
        for (const Word& a : words_.at(l))
          for (const Word& b : words_.at(r)) out.push_back(Word::product(a, b));
      });
    }
    std::sort(out.begin(), out.end());
    words_[c] = std::move(out);
  }

  // All c = l + r with l, r nonzero.
  static void for_each_split(const Counts& c, const std::function<void(const Counts&, const Counts&)>& fn) {
    Counts l(c.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == c.size()) {
        const std::size_t tl = total(l);
        if (tl == 0 || tl == total(c)) return;
        Counts r(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i] - l[i];
        fn(l, r);
        return;
      }
      for (std::size_t k = 0; k <= c[pos]; ++k) {
        l[pos] = k;
        rec(pos + 1);
      }
      l[pos] = 0;
    };
    rec(0);
  }

  std::vector<std::string> letters_;
  std::vector<Counts> all_counts_;
  std::map<Counts, std::vector<Word>> words_;
  std::map<Counts, unsigned long long> counts_memo_;
};

using WordPoly = std::map<Word, Scalar>;

// Generic substitution of words into the variables of an identity.
// Keys: (variable index, word index) slots with exponents.
class WordSubstitution {
 public:
  using Key = std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>>;
  struct Entry {
    std::size_t length;
    Counts counts;
    WordPoly value;
  };
  using Value = std::map<Key, Entry>;

  WordSubstitution(const Field& field, const std::vector<Word>& words, const std::vector<Counts>& word_counts,
                   const std::vector<std::string>& vars, std::size_t d, std::size_t max_leaf,
                   const std::optional<Counts>& bound)
      : words_(words), counts_(word_counts), d_(d), max_leaf_(max_leaf), bound_(bound), field_(field) {
    for (std::size_t k = 0; k < vars.size(); ++k) index_[vars[k]] = static_cast<std::uint32_t>(k);
  }

  const Value& value(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Value out;
    if (w.is_letter()) {
      const std::uint32_t v = index_.at(w.letter_name());
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i].length() > max_leaf_) continue;
        out.emplace(Key{{{v, static_cast<std::uint32_t>(i)}, 1}},
                    Entry{words_[i].length(), counts_[i], WordPoly{{words_[i], Scalar::one(field_)}}});
      }
    } else {
      const Value left = value(w.left());
      const Value& right = value(w.right());
      for (const auto& [kl, el] : left)
        for (const auto& [kr, er] : right) {
          if (el.length + er.length > d_) continue;
          Counts c = add_counts(el.counts, er.counts);
          if (!within(c, bound_)) continue;
          Entry& e = out.try_emplace(merge(kl, kr), Entry{el.length + er.length, c, {}}).first->second;
          for (const auto& [wl, cl] : el.value)
            for (const auto& [wr, cr] : er.value) accumulate(e.value, Word::product(wl, wr), cl * cr);
        }
      std::erase_if(out, [](const auto& kv) { return kv.second.value.empty(); });
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

  static void accumulate(WordPoly& acc, const Word& w, const Scalar& c) {
    auto [pos, fresh] = acc.try_emplace(w, c);
    if (!fresh) {
      pos->second += c;
      if (pos->second.is_zero()) acc.erase(pos);
    }
  }

 private:
  static Key merge(const Key& a, const Key& b) {
    Key out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back(b[j++]);
      } else {
        out.push_back({a[i].first, a[i].second + b[j].second});
        ++i;
        ++j;
      }
    }
    return out;
  }

  const std::vector<Word>& words_;
  const std::vector<Counts>& counts_;
  std::size_t d_;
  std::size_t max_leaf_;
  std::optional<Counts> bound_;
  Field field_;
  std::map<std::string, std::uint32_t> index_;
  std::map<Word, Value> memo_;
};

struct BuildOptions {
  bool graded = true;
  std::optional<Counts> bound;
  std::vector<Poly> extra_relations;
};

class FreeBuilder {
 public:
  FreeBuilder(const IdentitySet& v, std::vector<std::string> letters, std::size_t d, const Budget& budget,
              BuildOptions options)
      : field_(v.field),
        letters_(std::move(letters)),
        d_(d),
        options_(std::move(options)),
        store_(letters_, d, options_.bound, budget.max_basis) {
    for (const Counts& c : store_.all_counts())
      for (const Word& w : store_.words(c)) {
        all_words_.push_back(w);
        all_counts_.push_back(c);
      }
    make_blocks();
    const IdentitySet ids = field_.is_finite() ? v : homogenize(v);
    for (const Poly& p : ids.polys) add_identity(p);
    for (const Poly& p : options_.extra_relations) insert_poly(truncate(p));
    close();
  }

  const std::vector<Word>& all_words() const { return all_words_; }

  // Normal form: every pivot word eliminated.
  WordPoly reduce(const WordPoly& p) const {
    std::map<Counts, Row> parts;
    for (const auto& [w, c] : p) {
      if (w.length() > d_) continue;
      const Counts key = block_key(w);
      auto bit = blocks_.find(key);
      if (bit == blocks_.end()) throw InvalidArgument("word " + print_word(w) + " outside the truncation bound");
      SparseEchelon::add(parts[key], bit->second.index.at(w), c);
    }
    WordPoly out;
    for (const auto& [key, v] : parts) {
      const Block& b = blocks_.at(key);
      for (const auto& [i, c] : b.echelon.reduce(v)) out.emplace(b.words[i], c);
    }
    return out;
  }

  bool is_pivot(const Word& w) const {
    const Block& b = blocks_.at(block_key(w));
    return b.echelon.is_pivot(b.index.at(w));
  }

  std::vector<std::size_t> relations_by_degree() const {
    std::vector<std::size_t> out(d_, 0);
    for (const auto& [key, b] : blocks_)
      for (const auto& [i, row] : b.echelon.pivots()) out[b.words[i].length() - 1]++;
    return out;
  }

  std::vector<std::size_t> words_by_degree() const {
    std::vector<std::size_t> out(d_, 0);
    for (const Word& w : all_words_) out[w.length() - 1]++;
    return out;
  }

 private:
  struct Block {
    // Longest first and descending within a length, so pivots are the
    // largest words and the representatives the smallest.
    std::vector<Word> words;
    std::map<Word, std::size_t> index;
    SparseEchelon echelon;
  };

  Counts block_key(const Word& w) const { return options_.graded ? store_.counts_of(w) : Counts{}; }

  void make_blocks() {
    std::map<Counts, std::vector<Word>> grouped;
    for (const Word& w : all_words_) grouped[block_key(w)].push_back(w);
    for (auto& [key, words] : grouped) {
      std::stable_sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
        return a.length() != b.length() ? a.length() > b.length() : b < a;
      });
      Block b{words, {}, {}};
      for (std::size_t i = 0; i < words.size(); ++i) b.index.emplace(words[i], i);
      blocks_.emplace(key, std::move(b));
    }
  }

  WordPoly truncate(const Poly& p) const {
    if (!(p.field() == field_)) throw FieldMismatch();
    WordPoly out;
    for (const auto& [w, c] : p.terms())
      if (w.length() <= d_) out.emplace(w, c);
    return out;
  }

  void add_identity(const Poly& p) {
    if (p.is_zero()) return;
    const auto var_set = p.variables();
    const std::vector<std::string> vars(var_set.begin(), var_set.end());
    std::size_t min_len = SIZE_MAX;
    for (const auto& [w, c] : p.terms()) min_len = std::min(min_len, w.length());
    if (min_len > d_) return;
    const std::size_t max_leaf = d_ - min_len + 1;
    WordSubstitution sub(field_, all_words_, all_counts_, vars, d_, max_leaf, options_.bound);

    using Key = WordSubstitution::Key;
    std::map<Key, WordPoly> values;
    const bool reduce = field_.is_finite();
    const std::uint64_t q = field_.characteristic();
    for (const auto& [w, c] : p.terms()) {
      if (w.length() > d_) continue;
      for (const auto& [key, entry] : sub.value(w)) {
        Key k = key;
        if (reduce) {
          for (auto& [slot, e] : k) e = static_cast<std::uint32_t>(1 + (e - 1) % (q - 1));
        }
        WordPoly& acc = values[k];
        for (const auto& [word, coef] : entry.value) WordSubstitution::accumulate(acc, word, c * coef);
      }
    }
    for (const auto& [key, value] : values)
      if (!value.empty()) insert_poly(value);
  }

  // Inserts a relation, splitting it across blocks.
  void insert_poly(const WordPoly& p) {
    std::map<Counts, Row> parts;
    for (const auto& [w, c] : p) {
      const Counts key = block_key(w);
      auto bit = blocks_.find(key);
      if (bit == blocks_.end()) continue;  // beyond the type bound
      SparseEchelon::add(parts[key], bit->second.index.at(w), c);
    }
    for (auto& [key, v] : parts)
      if (auto added = blocks_.at(key).echelon.insert(v)) pending_.emplace_back(key, std::move(*added));
  }

  void close() {
    while (!pending_.empty()) {
      auto [key, v] = std::move(pending_.front());
      pending_.pop_front();
      const Block& b = blocks_.at(key);
      WordPoly terms;
      std::size_t min_len = SIZE_MAX;
      for (const auto& [i, c] : v) {
        terms.emplace(b.words[i], c);
        min_len = std::min(min_len, b.words[i].length());
      }
      for (std::size_t u = 0; u < all_words_.size(); ++u) {
        const Word& w = all_words_[u];
        if (w.length() + min_len > d_) break;  // all_words_ is sorted by length
        WordPoly left, right;
        for (const auto& [t, c] : terms) {
          if (t.length() + w.length() > d_) continue;
          left.emplace(Word::product(w, t), c);
          right.emplace(Word::product(t, w), c);
        }
        insert_poly(left);
        insert_poly(right);
      }
    }
  }

  Field field_;
  std::vector<std::string> letters_;
  std::size_t d_;
  BuildOptions options_;
  WordStore store_;
  std::vector<Word> all_words_;
  std::vector<Counts> all_counts_;
  std::map<Counts, Block> blocks_;
  std::deque<std::pair<Counts, Row>> pending_;
};

std::vector<std::string> sorted_unique(std::vector<std::string> letters) {
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

TruncatedFreeAlgebra assemble(const IdentitySet& v, const std::vector<std::string>& letters, std::size_t d,
                              const FreeBuilder& fb) {
  TruncatedFreeAlgebra out;
  out.variety = v;
  out.letters = letters;
  out.max_degree = d;
  for (const Word& w : fb.all_words())
    if (!fb.is_pivot(w)) out.basis_words.push_back(w);
  std::sort(out.basis_words.begin(), out.basis_words.end());
  std::map<Word, std::size_t> position;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < out.basis_words.size(); ++i) {
    position.emplace(out.basis_words[i], i);
    names.push_back(print_word(out.basis_words[i]));
  }
  const std::size_t n = out.basis_words.size();
  for (const Word& w : fb.all_words()) {
    Vec img = zero_vector(v.field, n);
    for (const auto& [rep, c] : fb.reduce({{w, Scalar::one(v.field)}})) img[position.at(rep)] = c;
    out.word_images.emplace(w, std::move(img));
  }
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Word& a = out.basis_words[i];
      const Word& b = out.basis_words[j];
      if (a.length() + b.length() <= d) table[i * n + j] = to_sparse(out.word_images.at(Word::product(a, b)));
    }
  out.carrier = Algebra(v.field, std::move(names), std::move(table));
  out.words_by_degree = fb.words_by_degree();
  out.relations_by_degree = fb.relations_by_degree();
  return out;
}

Poly to_poly(const Field& f, const WordPoly& wp) {
  Poly p(f);
  for (const auto& [w, c] : wp) p.add_term(w, c);
  return p;
}

Vec evaluate_word(const Word& w, const std::map<std::string, Vec>& letters, const Algebra& target) {
  if (w.is_letter()) return letters.at(w.letter_name());
  return target.multiply(evaluate_word(w.left(), letters, target), evaluate_word(w.right(), letters, target));
}

}  // namespace

Vec TruncatedFreeAlgebra::image(const Poly& p) const {
  Vec out = carrier.zero_element();
  for (const auto& [w, c] : p.terms()) {
    if (w.length() > max_degree) continue;
    auto it = word_images.find(w);
    if (it == word_images.end()) throw InvalidArgument("word " + print_word(w) + " uses letters outside the alphabet");
    add_scaled(out, c, it->second);
  }
  return out;
}

TruncatedFreeAlgebra truncated_free(const IdentitySet& v, const std::vector<std::string>& letters, std::size_t d,
                                    const Budget& budget) {
  const auto sorted = sorted_unique(letters);
  BuildOptions opts;
  opts.graded = !v.field.is_finite();
  FreeBuilder fb(v, sorted, d, budget, opts);
  return assemble(v, sorted, d, fb);
}

Implication identity_implied(const IdentitySet& v, const Poly& p, std::size_t d, const Budget& budget) {
  if (!(p.field() == v.field)) throw FieldMismatch();
  if (d < p.degree()) {
    throw DegreeTooSmall("degree " + std::to_string(d) + " is below the degree " + std::to_string(p.degree()) +
                         " of the polynomial");
  }
  Implication out{true, Poly(v.field)};
  if (p.is_zero()) return out;
  const auto var_set = p.variables();
  const std::vector<std::string> letters(var_set.begin(), var_set.end());
  BuildOptions opts;
  opts.graded = !v.field.is_finite();
  if (opts.graded) {
    // Only the types of p's components are needed.
    Counts bound(letters.size(), 0);
    for (const auto& [w, c] : p.terms()) {
      for (std::size_t i = 0; i < letters.size(); ++i) bound[i] = std::max(bound[i], w.degree(letters[i]));
    }
    opts.bound = bound;
  }
  FreeBuilder fb(v, letters, d, budget, opts);
  WordPoly terms(p.terms().begin(), p.terms().end());
  out.residue = to_poly(v.field, fb.reduce(terms));
  out.implied = out.residue.is_zero();
  return out;
}

std::vector<ClosureEntry> homogeneous_closure_check(const IdentitySet& v, std::size_t d, const Budget& budget) {
  if (v.field.is_finite()) throw InvalidArgument("the homogeneous closure check needs the rationals");
  std::vector<ClosureEntry> out;
  for (std::size_t i = 0; i < v.polys.size(); ++i)
    for (const auto& [type, component] : homogeneous_components(v.polys[i])) {
      const bool implied = identity_implied(v, component, d, budget).implied;
      out.push_back({i, type, component, implied});
    }
  return out;
}

TruncatedCoproduct truncated_coproduct(const std::vector<Algebra>& factors, const IdentitySet& v, std::size_t d,
                                       const Budget& budget) {
  std::vector<std::vector<std::string>> names;
  for (const Algebra& a : factors) {
    if (!(a.field() == v.field)) throw FieldMismatch();
    names.push_back(a.basis_names());
  }
  TruncatedCoproduct out;
  out.factors = factors;
  out.letters = disjoint_names(names);
  std::vector<std::string> all;
  for (const auto& block : out.letters) all.insert(all.end(), block.begin(), block.end());
  const auto sorted = sorted_unique(all);
  if (sorted.size() != all.size()) throw InvalidArgument("factor basis names are not distinct");

  BuildOptions opts;
  opts.graded = false;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Algebra& a = factors[k];
    const auto& ls = out.letters[k];
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Poly rel(v.field);
        if (d >= 2) rel.add_term(Word::product(Word::letter(ls[i]), Word::letter(ls[j])), Scalar::one(v.field));
        for (const auto& [c, coef] : a.product_sparse(i, j)) rel.add_term(Word::letter(ls[c]), -coef);
        if (!rel.is_zero()) opts.extra_relations.push_back(rel);
      }
  }
  FreeBuilder fb(v, sorted, d, budget, opts);
  out.free = assemble(v, sorted, d, fb);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<Vec> cols;
    for (const std::string& l : out.letters[k]) cols.push_back(out.free.word_images.at(Word::letter(l)));
    out.injections.push_back(Morphism::make(factors[k], out.free.carrier,
                                            Matrix::from_columns(v.field, out.free.carrier.dim(), cols)));
  }
  return out;
}

Morphism coproduct_mediator(const TruncatedCoproduct& c, const std::vector<Morphism>& legs) {
  if (legs.size() != c.factors.size()) throw DiagramInvalid("one leg per factor is required");
  const Algebra& target = legs.front().target();
  std::map<std::string, Vec> letter_values;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!(legs[k].source() == c.factors[k])) throw DiagramInvalid("leg " + std::to_string(k + 1) + " has the wrong source");
    if (!(legs[k].target() == target)) throw DiagramInvalid("legs must share their target");
    for (std::size_t i = 0; i < c.factors[k].dim(); ++i)
      letter_values.emplace(c.letters[k][i], legs[k].matrix().column(i));
  }
  const TruncatedFreeAlgebra& fr = c.free;
  std::vector<Vec> cols;
  for (const Word& w : fr.basis_words) cols.push_back(evaluate_word(w, letter_values, target));
  const Matrix m = Matrix::from_columns(target.field(), target.dim(), cols);
  // The word map has to kill the relations; multiplicativity on the carrier
  // then also forces products beyond the truncation degree to vanish.
  for (const auto& [w, img] : fr.word_images) {
    if (evaluate_word(w, letter_values, target) != m.apply(img)) {
      throw DiagramInvalid("legs do not factor through the coproduct (word " + print_word(w) + ")");
    }
  }
  try {
    return Morphism::make(fr.carrier, target, m);
  } catch (const NotMultiplicative&) {
    throw DiagramInvalid("target is not nilpotent of class <= " + std::to_string(fr.max_degree));
  }
}

Flat flat(const Algebra& b, const Algebra& x, const IdentitySet& v, std::size_t d, const Budget& budget) {
  TruncatedCoproduct cp = truncated_coproduct({b, x}, v, d, budget);
  Morphism r = [&] {
    try {
      return coproduct_mediator(cp, {Morphism::identity(b), Morphism::zero(x, b)});
    } catch (const DiagramInvalid& e) {
      throw InvalidArgument(std::string("B admits no retraction from the truncated coproduct: ") + e.what());
    }
  }();
  if (compose(r, cp.injections[0]).matrix() != Matrix::identity(b.field(), b.dim())) {
    throw InvalidArgument("retraction does not split the inclusion of B");
  }
  Subobject k = kernel(r);
  return {std::move(cp), std::move(r), std::move(k)};
}

CoherenceReport coherence_probe(const Algebra& b, const Algebra& x, const Algebra& y, const IdentitySet& v,
                                std::size_t d, const Budget& budget) {
  const Flat bx = flat(b, x, v, d, budget);
  const Flat by = flat(b, y, v, d, budget);
  const Flat bxy = [&] {
    TruncatedCoproduct cp = truncated_coproduct({b, x, y}, v, d, budget);
    Morphism r = coproduct_mediator(cp, {Morphism::identity(b), Morphism::zero(x, b), Morphism::zero(y, b)});
    Subobject k = kernel(r);
    return Flat{std::move(cp), std::move(r), std::move(k)};
  }();
  const TruncatedFreeAlgebra& big = bxy.coproduct.free;

  // Letter (factor, index) of a two-factor coproduct -> the same letter in B+X+Y.
  auto embed = [&](const Flat& small, std::size_t other) {
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < b.dim(); ++i) rename[small.coproduct.letters[0][i]] = bxy.coproduct.letters[0][i];
    for (std::size_t i = 0; i < small.coproduct.letters[1].size(); ++i)
      rename[small.coproduct.letters[1][i]] = bxy.coproduct.letters[other][i];
    std::vector<Vec> images;
    const auto& reps = small.coproduct.free.basis_words;
    const Matrix& incl = small.kernel.inclusion.matrix();
    for (std::size_t col = 0; col < incl.cols(); ++col) {
      Vec img = big.carrier.zero_element();
      for (std::size_t r = 0; r < reps.size(); ++r) {
        if (incl(r, col).is_zero()) continue;
        add_scaled(img, incl(r, col), big.word_images.at(rename_letters(reps[r], rename)));
      }
      images.push_back(std::move(img));
    }
    return images;
  };
  std::vector<Vec> gens = embed(bx, 1);
  const std::vector<Vec> from_y = embed(by, 2);
  gens.insert(gens.end(), from_y.begin(), from_y.end());

  const Subspace target = bxy.kernel.inclusion.image_subspace();
  const Subspace generated = generated_subalgebra(big.carrier, gens);
  CoherenceReport out;
  out.flat_dim = target.dim();
  out.generated_dim = generated.dim();
  out.flat_x_dim = bx.kernel.algebra.dim();
  out.flat_y_dim = by.kernel.algebra.dim();
  out.coherent = generated == target;
  return out;
}

OrzechReport orzech_check(const IdentitySet& v, const std::vector<Scalar>& lambdas, std::size_t d,
                          const Budget& budget) {
  if (d < 3) throw DegreeTooSmall("the Orzech equations have degree 3");
  OrzechReport out{orzech_polynomials(v.field, lambdas), {Implication{false, Poly(v.field)}, Implication{false, Poly(v.field)}}};
  for (std::size_t i = 0; i < 2; ++i) out.results[i] = identity_implied(v, out.polys[i], d, budget);
  return out;
}

}  // namespace nalg
