#pragma once

// Dense exact linear algebra. Subspaces are always stored by their reduced
// row-echelon basis, so two subspaces are equal exactly when their stored
// bases are equal entry-wise.

#include <cstddef>
#include <optional>
#include <vector>

#include "nalg/scalar.hpp"

namespace nalg {

using Vec = std::vector<Scalar>;

Vec zero_vector(const Field& field, std::size_t n);
Vec unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
/// acc += c * v
void add_scaled(Vec& acc, const Scalar& c, const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> row_vectors() const;
  std::vector<Vec> column_vectors() const;

  Matrix transpose() const;
  /// Matrix acting on a column vector.
  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  bool is_zero() const;

  std::size_t rank() const;
  /// nullopt when singular or not square.
  std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

/// Exact Gauss-Jordan elimination. Zero rows are kept at the bottom.
RrefResult rref(const Matrix& m);

class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of field^ambient.
  Subspace(const Field& field, std::size_t ambient);

  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(const Field& field, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  /// Canonical RREF basis, one vector per row.
  const std::vector<Vec>& basis() const { return basis_; }
  Matrix basis_matrix() const { return Matrix::from_rows(field_, ambient_, basis_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Removes the components along the pivot columns; zero iff v is a member.
  Vec reduce(Vec v) const;
  /// Coefficients of a member vector on the canonical basis.
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class EchelonBuilder;
  void check_ambient(std::size_t n) const;

  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

struct KernelImage {
  Subspace kernel;  // null space of m acting on columns
  Subspace image;   // column space
};

KernelImage map_kernel_image(const Matrix& m);

struct QuotientData {
  /// ambient -> quotient coordinates, (ambient - dim sub) x ambient.
  Matrix projection;
  /// quotient coordinates -> canonical coset representatives.
  Matrix section;
  /// Ambient coordinates not used as pivots by the subspace, ascending.
  std::vector<std::size_t> representative_coordinates;
  std::vector<Vec> coset_basis;
};

QuotientData quotient_data(const Subspace& sub);

/// Some x with m x = b, or nullopt when b is not in the column space.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Incremental RREF for closure computations: rows are kept fully reduced
/// after every insertion.
class EchelonBuilder {
 public:
  EchelonBuilder(const Field& field, std::size_t ambient);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool full() const { return rows_.size() == ambient_; }

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  /// Adds v to the span. Returns the reduced new direction, or nullopt when
  /// v was already in the span.
  std::optional<Vec> insert(const Vec& v);

  Subspace to_subspace() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace nalg
