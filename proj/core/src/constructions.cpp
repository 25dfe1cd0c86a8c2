#include "nalg/constructions.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nalg {

namespace {

// e_i * v
Vec left_basis_mult(const Algebra& a, std::size_t i, const Vec& v) {
  Vec out = a.zero_element();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [k, c] : a.product_sparse(i, j)) out[k] += v[j] * c;
  }
  return out;
}

// v * e_i
Vec right_basis_mult(const Algebra& a, const Vec& v, std::size_t i) {
  Vec out = a.zero_element();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [k, c] : a.product_sparse(j, i)) out[k] += v[j] * c;
  }
  return out;
}

void check_element(const Algebra& a, const Vec& v) {
  if (v.size() != a.dim()) throw DimensionMismatch("element has wrong length");
}

Matrix columns_to_matrix(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  return Matrix::from_columns(f, rows, cols);
}

}  // namespace

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace not in the algebra's ambient space");
  for (const Vec& u : s.basis())
    for (const Vec& v : s.basis())
      if (!s.contains(a.multiply(u, v))) return false;
  return true;
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace not in the algebra's ambient space");
  for (const Vec& v : s.basis())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!s.contains(left_basis_mult(a, i, v))) return false;
      if (!s.contains(right_basis_mult(a, v, i))) return false;
    }
  return true;
}

Subspace generated_ideal(const Algebra& a, const std::vector<Vec>& elements) {
  EchelonBuilder ideal(a.field(), a.dim());
  std::deque<Vec> pending;
  for (const Vec& v : elements) {
    check_element(a, v);
    if (auto added = ideal.insert(v)) pending.push_back(std::move(*added));
  }
  while (!pending.empty() && !ideal.full()) {
    const Vec v = std::move(pending.front());
    pending.pop_front();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (auto added = ideal.insert(left_basis_mult(a, i, v))) pending.push_back(std::move(*added));
      if (auto added = ideal.insert(right_basis_mult(a, v, i))) pending.push_back(std::move(*added));
    }
  }
  return ideal.to_subspace();
}

Subspace generated_subalgebra(const Algebra& a, const std::vector<Vec>& elements) {
  EchelonBuilder sub(a.field(), a.dim());
  std::vector<Vec> directions;
  std::deque<Vec> pending;
  for (const Vec& v : elements) {
    check_element(a, v);
    if (auto added = sub.insert(v)) pending.push_back(std::move(*added));
  }
  while (!pending.empty() && !sub.full()) {
    Vec v = std::move(pending.front());
    pending.pop_front();
    directions.push_back(v);
    for (const Vec& u : directions) {
      if (auto added = sub.insert(a.multiply(u, v))) pending.push_back(std::move(*added));
      if (auto added = sub.insert(a.multiply(v, u))) pending.push_back(std::move(*added));
    }
  }
  return sub.to_subspace();
}

Subobject induced_subalgebra(const Algebra& a, const Subspace& s, const std::string& prefix) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace not in the algebra's ambient space");
  const std::size_t m = s.dim();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < m; ++k) {
    const Vec& b = s.basis()[k];
    const SparseVec sp = to_sparse(b);
    if (sp.size() == 1 && sp.front().second.is_one()) {
      names.push_back(a.basis_names()[sp.front().first]);
    } else {
      names.push_back(prefix + std::to_string(k + 1));
    }
  }
  std::vector<Vec> table;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec prod = a.multiply(s.basis()[i], s.basis()[j]);
      if (!s.contains(prod)) throw InvalidArgument("subspace is not closed under multiplication");
      table.push_back(s.coordinates(prod));
    }
  Algebra sub(a.field(), std::move(names), table);
  Matrix incl = columns_to_matrix(a.field(), a.dim(), s.basis());
  return {sub, Morphism::make(sub, a, incl)};
}

Subobject kernel(const Morphism& f) { return induced_subalgebra(f.source(), f.kernel_subspace(), "k"); }

std::pair<Algebra, Matrix> coset_structure(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace not in the algebra's ambient space");
  const QuotientData qd = quotient_data(s);
  const auto& reps = qd.representative_coordinates;
  std::vector<std::string> names;
  for (std::size_t r : reps) names.push_back(a.basis_names()[r]);
  std::vector<Vec> table;
  for (std::size_t x : reps)
    for (std::size_t y : reps) table.push_back(qd.projection.apply(a.product(x, y)));
  return {Algebra(a.field(), std::move(names), table), qd.projection};
}

Quotient quotient(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw NotAnIdeal("subspace is not an ideal; the coset product is ill-defined");
  auto [q, proj] = coset_structure(a, ideal);
  return {q, Morphism::make(a, q, proj)};
}

Quotient cokernel(const Morphism& f) {
  return quotient(f.target(), generated_ideal(f.target(), f.matrix().column_vectors()));
}

Quotient coequalizer(const Morphism& f, const Morphism& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw NotComposable("coequalizer needs a parallel pair");
  }
  std::vector<Vec> diffs;
  for (std::size_t i = 0; i < f.source().dim(); ++i) diffs.push_back(f.matrix().column(i) - g.matrix().column(i));
  return quotient(f.target(), generated_ideal(f.target(), diffs));
}

std::vector<std::vector<std::string>> disjoint_names(const std::vector<std::vector<std::string>>& factors) {
  std::set<std::string> seen;
  bool clash = false;
  for (const auto& names : factors)
    for (const auto& n : names) clash |= !seen.insert(n).second;
  if (!clash) return factors;
  std::vector<std::vector<std::string>> out = factors;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto& n : out[k]) n += "_" + std::to_string(k + 1);
  return out;
}

Cone product(const Algebra& a, const Algebra& c) {
  if (!(a.field() == c.field())) throw FieldMismatch();
  const Field& f = a.field();
  const std::size_t n = a.dim(), m = c.dim(), t = n + m;
  const auto names = disjoint_names({a.basis_names(), c.basis_names()});
  std::vector<std::string> all = names[0];
  all.insert(all.end(), names[1].begin(), names[1].end());
  std::vector<SparseVec> table(t * t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * t + j] = a.product_sparse(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SparseVec shifted;
      for (const auto& [k, s] : c.product_sparse(i, j)) shifted.emplace_back(k + n, s);
      table[(i + n) * t + (j + n)] = std::move(shifted);
    }
  Algebra p(f, std::move(all), std::move(table));
  Matrix pa(f, n, t), pc(f, m, t);
  for (std::size_t i = 0; i < n; ++i) pa(i, i) = Scalar::one(f);
  for (std::size_t i = 0; i < m; ++i) pc(i, n + i) = Scalar::one(f);
  return {p, Morphism::make(p, a, pa), Morphism::make(p, c, pc)};
}

Cone pullback(const Morphism& f, const Morphism& g) {
  if (!(f.target() == g.target())) throw NotComposable("pullback needs a common codomain");
  if (!(f.source().field() == g.source().field())) throw FieldMismatch();
  const Cone full = product(f.source(), g.source());
  const std::size_t n = f.source().dim(), m = g.source().dim();
  const Field& fld = f.source().field();
  Matrix diff(fld, f.target().dim(), n + m);
  for (std::size_t r = 0; r < f.target().dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) diff(r, c) = f.matrix()(r, c);
    for (std::size_t c = 0; c < m; ++c) diff(r, n + c) = -g.matrix()(r, c);
  }
  const Subobject sub = induced_subalgebra(full.algebra, map_kernel_image(diff).kernel, "p");
  return {sub.algebra, compose(full.first, sub.inclusion), compose(full.second, sub.inclusion)};
}

Morphism mediating_morphism(const Cone& p, const Morphism& a, const Morphism& c) {
  if (!(a.source() == c.source())) throw DiagramInvalid("cone legs must share their source");
  if (!(a.target() == p.first.target()) || !(c.target() == p.second.target())) {
    throw DiagramInvalid("cone legs must land in the factors");
  }
  const Field& f = p.algebra.field();
  const std::size_t na = a.target().dim(), nc = c.target().dim();
  Matrix legs(f, na + nc, p.algebra.dim());
  for (std::size_t col = 0; col < p.algebra.dim(); ++col) {
    for (std::size_t r = 0; r < na; ++r) legs(r, col) = p.first.matrix()(r, col);
    for (std::size_t r = 0; r < nc; ++r) legs(na + r, col) = p.second.matrix()(r, col);
  }
  Matrix out(f, p.algebra.dim(), a.source().dim());
  for (std::size_t x = 0; x < a.source().dim(); ++x) {
    Vec target = a.matrix().column(x);
    const Vec cx = c.matrix().column(x);
    target.insert(target.end(), cx.begin(), cx.end());
    const auto coords = solve(legs, target);
    if (!coords) throw DiagramInvalid("cone does not factor through the limit (squares do not commute)");
    for (std::size_t r = 0; r < p.algebra.dim(); ++r) out(r, x) = (*coords)[r];
  }
  return Morphism::make(a.source(), p.algebra, out);
}

ImageFactorization image_factorization(const Morphism& f) {
  const Subspace img = f.image_subspace();
  const Subobject sub = induced_subalgebra(f.target(), img, "m");
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < f.source().dim(); ++i) cols.push_back(img.coordinates(f.matrix().column(i)));
  Morphism onto = Morphism::make(f.source(), sub.algebra, columns_to_matrix(f.source().field(), img.dim(), cols));
  return {sub.algebra, onto, sub.inclusion};
}

std::vector<JointReport> is_exact(const std::vector<Morphism>& maps, bool zero_ends) {
  if (maps.empty()) throw NotComposable("empty sequence");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!(maps[i].target() == maps[i + 1].source())) {
      throw NotComposable("map " + std::to_string(i + 2) + " does not start where map " + std::to_string(i + 1) + " ends");
    }
  }
  std::vector<JointReport> out;
  auto joint = [&](std::size_t object, const Subspace& image, const Subspace& kern) {
    out.push_back({object, image.dim(), kern.dim(), image == kern});
  };
  if (zero_ends) {
    const Algebra& first = maps.front().source();
    joint(1, Subspace(first.field(), first.dim()), maps.front().kernel_subspace());
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    joint(i + 2, maps[i].image_subspace(), maps[i + 1].kernel_subspace());
  }
  if (zero_ends) {
    const Algebra& last = maps.back().target();
    joint(maps.size() + 1, maps.back().image_subspace(), Subspace::full(last.field(), last.dim()));
  }
  return out;
}

bool split_short_five_check(const SplitFiveDiagram& d) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DiagramInvalid(what);
  };
  require(d.f.target() == d.g.source(), "f and g are not composable");
  require(d.s.source() == d.g.target() && d.s.target() == d.g.source(), "s is not a map C -> B");
  require(d.k.target() == d.q.source(), "k and q are not composable");
  require(d.t.source() == d.q.target() && d.t.target() == d.q.source(), "t is not a map F -> E");
  require(d.alpha.source() == d.f.source() && d.alpha.target() == d.k.source(), "alpha is not a map A -> D");
  require(d.beta.source() == d.g.source() && d.beta.target() == d.q.source(), "beta is not a map B -> E");
  require(d.gamma.source() == d.g.target() && d.gamma.target() == d.q.target(), "gamma is not a map C -> F");
  require(d.f.injective() && d.f.image_subspace() == d.g.kernel_subspace(), "f is not a kernel of g");
  require(d.k.injective() && d.k.image_subspace() == d.q.kernel_subspace(), "k is not a kernel of q");
  require((d.g.matrix() * d.s.matrix()) == Matrix::identity(d.g.target().field(), d.g.target().dim()), "g s is not the identity");
  require((d.q.matrix() * d.t.matrix()) == Matrix::identity(d.q.target().field(), d.q.target().dim()), "q t is not the identity");
  require(d.beta.matrix() * d.f.matrix() == d.k.matrix() * d.alpha.matrix(), "left square does not commute");
  require(d.q.matrix() * d.beta.matrix() == d.gamma.matrix() * d.g.matrix(), "right square (q beta = gamma g) does not commute");
  require(d.beta.matrix() * d.s.matrix() == d.t.matrix() * d.gamma.matrix(), "section square (beta s = t gamma) does not commute");
  return d.beta.is_isomorphism();
}

Derivations derivations(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  // Unknown D(r, c) sits at index r * n + c; D(e_c) is column c.
  Matrix system(f, n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row0 = (i * n + j) * n;
      // D(e_i e_j)
      for (const auto& [c, coef] : a.product_sparse(i, j))
        for (std::size_t k = 0; k < n; ++k) system(row0 + k, k * n + c) += coef;
      // - D(e_i) e_j - e_i D(e_j)
      for (std::size_t r = 0; r < n; ++r) {
        for (const auto& [k, coef] : a.product_sparse(r, j)) system(row0 + k, r * n + i) -= coef;
        for (const auto& [k, coef] : a.product_sparse(i, r)) system(row0 + k, r * n + j) -= coef;
      }
    }
  const Subspace der = map_kernel_image(system).kernel;
  std::vector<Matrix> maps;
  for (const Vec& flat : der.basis()) {
    Matrix d(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = flat[r * n + c];
    maps.push_back(std::move(d));
  }
  auto flatten = [&](const Matrix& m) {
    Vec v;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(m(r, c));
    return v;
  };
  std::vector<std::string> names;
  std::vector<Vec> table;
  for (std::size_t x = 0; x < maps.size(); ++x) names.push_back("d" + std::to_string(x + 1));
  for (std::size_t x = 0; x < maps.size(); ++x)
    for (std::size_t y = 0; y < maps.size(); ++y) {
      const Vec bracket = flatten(maps[x] * maps[y] - maps[y] * maps[x]);
      table.push_back(der.coordinates(bracket));
    }
  return {Algebra(f, std::move(names), table), std::move(maps)};
}

bool is_associative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a.multiply(a.basis_element(i), a.product(j, k)) != a.multiply(a.product(i, j), a.basis_element(k))) {
          return false;
        }
      }
  return true;
}

Algebra commutator_algebra(const Algebra& a) {
  if (!is_associative(a)) throw NotAssociative("commutator bracket requires an associative algebra");
  std::vector<Vec> table;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) table.push_back(a.product(i, j) - a.product(j, i));
  return Algebra(a.field(), a.basis_names(), table);
}

bool ideal_square_is_ideal(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw NotAnIdeal("input subspace is not an ideal");
  std::vector<Vec> products;
  for (const Vec& u : ideal.basis())
    for (const Vec& v : ideal.basis()) products.push_back(a.multiply(u, v));
  return is_ideal(a, Subspace::span(a.field(), a.dim(), products));
}

}  // namespace nalg
