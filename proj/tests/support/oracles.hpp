#pragma once

// Independent reference computations used to cross-check the library.
// They share only the scalar type and the data types with the code under
// test: elimination, substitution and closure are re-implemented here in
// the most direct way.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "gen.hpp"
#include "nalg/variety.hpp"
#include "nalg/word.hpp"

namespace testsupport {

using nalg::IdentitySet;

/// Row span kept fully reduced with unit pivots.
class OracleSpan {
 public:
  OracleSpan(const Field& f, std::size_t n) : f_(f), n_(n) {}

  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[piv_[r]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < n_; ++k) v[k] -= c * rows_[r][k];
    }
    return v;
  }

  bool insert(const Vec& v) {
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    const Scalar inv = Scalar::one(f_) / r[p];
    for (auto& x : r) x *= inv;
    for (auto& row : rows_) {
      const Scalar c = row[p];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < n_; ++k) row[k] -= c * r[k];
    }
    rows_.push_back(std::move(r));
    piv_.push_back(p);
    return true;
  }

  bool contains(const Vec& v) const {
    const Vec r = reduce(v);
    for (const auto& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

/// Truncated free V-algebra by brute force: random (over Q) or exhaustive
/// (small GF(p)) substitution of polynomials into the identities, then
/// closure under multiplication by words until nothing changes.
class FreeOracle {
 public:
  FreeOracle(const IdentitySet& v, const std::vector<std::string>& letters, std::size_t d,
             const std::vector<Poly>& extra = {}, std::uint64_t seed = 1)
      : f_(v.field), d_(d), words_(nalg::enumerate_words(letters, d)), span_(v.field, words_.size()) {
    for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
    Rng rng(seed);
    for (const Poly& psi : v.polys) add_identity(psi, rng);
    for (const Poly& p : extra) span_.insert(to_vec(p));
    close();
  }

  std::size_t dim() const { return words_.size() - span_.rank(); }
  bool is_relation(const Poly& p) const { return span_.contains(to_vec(p)); }
  const std::vector<Word>& words() const { return words_; }

  /// Dimension of the span of the classes of the given words.
  std::size_t rank_of_classes(const std::vector<Word>& ws) const {
    OracleSpan s = span_;
    const std::size_t before = s.rank();
    for (const Word& w : ws) s.insert(unit(w));
    return s.rank() - before;
  }

 private:
  Vec unit(const Word& w) const {
    Vec v(words_.size(), Scalar::zero(f_));
    v[index_.at(w)] = Scalar::one(f_);
    return v;
  }

  Vec to_vec(const Poly& p) const {
    Vec v(words_.size(), Scalar::zero(f_));
    for (const auto& [w, c] : p.terms())
      if (w.length() <= d_) v[index_.at(w)] += c;
    return v;
  }

  Poly truncated_product(const Poly& a, const Poly& b) const {
    Poly out(f_);
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) {
        if (wa.length() + wb.length() > d_) continue;
        out.add_term(Word::product(wa, wb), ca * cb);
      }
    return out;
  }

  Poly eval_word(const Word& w, const std::map<std::string, Poly>& asg) const {
    if (w.is_letter()) return asg.at(w.letter_name());
    return truncated_product(eval_word(w.left(), asg), eval_word(w.right(), asg));
  }

  Poly eval(const Poly& psi, const std::map<std::string, Poly>& asg) const {
    Poly out(f_);
    for (const auto& [w, c] : psi.terms()) out += c * eval_word(w, asg);
    return out;
  }

  Poly from_vec(const Vec& v) const {
    Poly p(f_);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) p.add_term(words_[i], v[i]);
    return p;
  }

  void add_identity(const Poly& psi, Rng& rng) {
    const auto vs = psi.variables();
    const std::vector<std::string> vars(vs.begin(), vs.end());
    const std::size_t n = words_.size();
    if (f_.is_finite()) {
      std::uint64_t per = 1, total = 1;
      bool small = true;
      for (std::size_t i = 0; i < n && small; ++i) small = (per *= f_.characteristic()) <= 4096;
      for (std::size_t i = 0; i < vars.size() && small; ++i) small = (total *= per) <= 300000;
      if (small) {
        for (std::uint64_t t = 0; t < total; ++t) {
          std::uint64_t rest = t;
          std::map<std::string, Poly> asg;
          for (const auto& var : vars) {
            Vec v;
            for (std::size_t i = 0; i < n; ++i) {
              v.emplace_back(f_, static_cast<long long>(rest % f_.characteristic()));
              rest /= f_.characteristic();
            }
            asg.emplace(var, from_vec(v));
          }
          span_.insert(to_vec(eval(psi, asg)));
        }
        return;
      }
    }
    const std::size_t samples = 3 * n + 20;
    for (std::size_t s = 0; s < samples; ++s) {
      std::map<std::string, Poly> asg;
      for (const auto& var : vars) asg.emplace(var, from_vec(random_vec(rng, f_, n, 60)));
      span_.insert(to_vec(eval(psi, asg)));
    }
  }

  void close() {
    bool changed = true;
    while (changed) {
      changed = false;
      const std::vector<Vec> rows = span_.rows();
      for (const Vec& r : rows) {
        const Poly p = from_vec(r);
        for (const Word& w : words_) {
          const Poly lw = Poly::monomial(f_, w);
          changed |= span_.insert(to_vec(truncated_product(lw, p)));
          changed |= span_.insert(to_vec(truncated_product(p, lw)));
        }
      }
    }
  }

  Field f_;
  std::size_t d_;
  std::vector<Word> words_;
  std::map<Word, std::size_t> index_;
  OracleSpan span_;
};

/// Span of all monomial evaluations phi(a_1, ..., a_n), n <= max_len, with
/// every a_i taken from the basis of S or the basis of A and at least one
/// from S.
inline Subspace monomial_span(const Algebra& a, const std::vector<Vec>& s_basis, std::size_t max_len) {
  std::vector<Vec> pool = s_basis;
  const std::size_t from_s = pool.size();
  for (std::size_t i = 0; i < a.dim(); ++i) pool.push_back(a.basis_element(i));
  OracleSpan span(a.field(), a.dim());
  const auto shapes = nalg::enumerate_words({"t"}, max_len);
  for (const Word& shape : shapes) {
    const std::size_t n = shape.length();
    std::vector<std::size_t> choice(n, 0);
    for (;;) {
      bool uses_s = false;
      for (std::size_t c : choice) uses_s |= c < from_s;
      if (uses_s) {
        std::size_t leaf = 0;
        std::function<Vec(const Word&)> ev = [&](const Word& w) -> Vec {
          if (w.is_letter()) return pool[choice[leaf++]];
          Vec l = ev(w.left());
          return a.multiply(l, ev(w.right()));
        };
        span.insert(ev(shape));
      }
      std::size_t k = 0;
      while (k < n && ++choice[k] == pool.size()) choice[k++] = 0;
      if (k == n) break;
    }
  }
  return Subspace::span(a.field(), a.dim(), span.rows());
}

/// Ideal test written directly from the definition on spanning sets.
inline bool oracle_is_ideal(const Algebra& a, const Subspace& s) {
  OracleSpan span(a.field(), a.dim());
  for (const Vec& v : s.basis()) span.insert(v);
  for (const Vec& v : s.basis())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!span.contains(a.multiply(a.basis_element(i), v))) return false;
      if (!span.contains(a.multiply(v, a.basis_element(i)))) return false;
    }
  return true;
}

/// Dimension of the degree-n part of the free Lie algebra on k generators
/// (necklace formula).
inline std::size_t witt_dimension(std::size_t k, std::size_t n) {
  auto mobius = [](std::size_t m) {
    int sign = 1;
    for (std::size_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      sign = -sign;
    }
    return m > 1 ? -sign : sign;
  };
  long long sum = 0;
  for (std::size_t dv = 1; dv <= n; ++dv) {
    if (n % dv) continue;
    long long power = 1;
    for (std::size_t i = 0; i < n / dv; ++i) power *= static_cast<long long>(k);
    sum += mobius(dv) * power;
  }
  return static_cast<std::size_t>(sum / static_cast<long long>(n));
}

/// Catalan number C_m by the product formula.
inline unsigned long long catalan(unsigned m) {
  unsigned long long c = 1;
  for (unsigned i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

/// Every morphism A -> B over a small prime field, by enumerating all
/// matrices and keeping the multiplicative ones (checked here, not by make).
inline std::vector<nalg::Morphism> all_morphisms(const Algebra& a, const Algebra& b) {
  const Field& f = a.field();
  const auto p = f.characteristic();
  const std::size_t cells = a.dim() * b.dim();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < cells; ++i) count *= p;
  std::vector<nalg::Morphism> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Matrix m(f, b.dim(), a.dim());
    std::uint64_t rest = idx;
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) {
        m(r, c) = Scalar(f, static_cast<long long>(rest % p));
        rest /= p;
      }
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.dim(); ++i)
      for (std::size_t j = 0; ok && j < a.dim(); ++j)
        ok = m.apply(a.product(i, j)) == b.multiply(m.column(i), m.column(j));
    if (ok) out.push_back(nalg::Morphism::make(a, b, m));
  }
  return out;
}

}  // namespace testsupport
