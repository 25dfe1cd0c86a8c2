#pragma once

// Finite-dimensional non-associative algebras given by structure constants,
// and the multiplication-preserving linear maps between them.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nalg/error.hpp"
#include "nalg/linalg.hpp"

namespace nalg {

/// Sparse coordinate vector: (index, nonzero coefficient), ascending index.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const Field& field, std::size_t n, const SparseVec& v);

class Algebra {
 public:
  /// The zero algebra over Q.
  Algebra();
  /// `table[i * dim + j]` holds e_i * e_j. Entries must have length dim.
  Algebra(const Field& field, std::vector<std::string> basis_names, const std::vector<Vec>& table);
  Algebra(const Field& field, std::vector<std::string> basis_names, std::vector<SparseVec> table);

  static Algebra zero(const Field& field) { return Algebra(field, {}, std::vector<SparseVec>{}); }
  /// Zero multiplication.
  static Algebra abelian(const Field& field, std::vector<std::string> basis_names);

  const Field& field() const { return data_->field; }
  std::size_t dim() const { return data_->names.size(); }
  const std::vector<std::string>& basis_names() const { return data_->names; }

  const SparseVec& product_sparse(std::size_t i, std::size_t j) const { return data_->table[i * dim() + j]; }
  Vec product(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the structure constants.
  Vec multiply(const Vec& a, const Vec& b) const;

  Vec zero_element() const { return zero_vector(field(), dim()); }
  Vec basis_element(std::size_t i) const { return unit_vector(field(), dim(), i); }

  /// Linear combination of basis names, e.g. `2 e1 - e3`, or `0`.
  std::string format_element(const Vec& v) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Data {
    Field field;
    std::vector<std::string> names;
    std::vector<SparseVec> table;
  };
  std::shared_ptr<const Data> data_;
};

/// Structure-constant table of an algebra as a map on pairs, for reuse in
/// constructions: entry (i, j) of the returned vector is e_i * e_j.
std::vector<Vec> dense_table(const Algebra& a);

/// A linear map does not preserve the product on the basis pair (i, j).
class NotMultiplicative : public Error {
 public:
  NotMultiplicative(std::size_t i, std::size_t j, Vec lhs, Vec rhs, const std::string& detail);
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  /// f(e_i e_j)
  const Vec& lhs() const { return lhs_; }
  /// f(e_i) f(e_j)
  const Vec& rhs() const { return rhs_; }

 private:
  std::size_t i_, j_;
  Vec lhs_, rhs_;
};

class Morphism {
 public:
  /// Verifies shape, field and multiplicativity on all basis pairs.
  static Morphism make(const Algebra& source, const Algebra& target, const Matrix& matrix);
  static Morphism identity(const Algebra& a);
  static Morphism zero(const Algebra& source, const Algebra& target);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  /// target-dim x source-dim.
  const Matrix& matrix() const { return matrix_; }

  Vec apply(const Vec& v) const { return matrix_.apply(v); }

  Subspace kernel_subspace() const;
  Subspace image_subspace() const;
  bool injective() const { return kernel_subspace().dim() == 0; }
  bool surjective() const { return image_subspace().dim() == target_.dim(); }
  bool is_isomorphism() const { return injective() && surjective(); }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Morphism(Algebra source, Algebra target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

  Algebra source_;
  Algebra target_;
  Matrix matrix_;
};

/// g after f. Throws NotComposable unless f.target() == g.source().
Morphism compose(const Morphism& g, const Morphism& f);

/// Checked construction; `make_morphism` is an alias.
inline Morphism make_morphism(const Algebra& source, const Algebra& target, const Matrix& matrix) {
  return Morphism::make(source, target, matrix);
}

}  // namespace nalg
