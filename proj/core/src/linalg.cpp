#include "nalg/linalg.hpp"

#include <algorithm>
#include <string>

#include "nalg/error.hpp"

namespace nalg {

Vec zero_vector(const Field& field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

Vec unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vec v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

void add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  if (acc.size() != v.size()) throw DimensionMismatch("vector lengths differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += c * v[i];
  }
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vec> Matrix::row_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Vec> Matrix::column_vectors() const {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix has " + std::to_string(cols_) + " columns, vector length " + std::to_string(v.size()));
  Vec out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (!m.is_zero()) out[r] += m * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (!(field_ == rhs.field_)) throw FieldMismatch();
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Scalar& b = rhs(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Matrix::rank() const { return rref(*this).pivots.size(); }

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = Scalar::one(field_);
  }
  RrefResult red = rref(aug);
  if (red.pivots.size() < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
  return inv;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  Matrix& a = out.matrix;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead_row, c));
    const Scalar inv = a(lead_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(lead_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(lead_row, c).is_zero()) a(r, c) -= factor * a(lead_row, c);
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  return out;
}

// -------------------------------------------------------------- Subspace

Subspace::Subspace(const Field& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

void Subspace::check_ambient(std::size_t n) const {
  if (n != ambient_) {
    throw DimensionMismatch("expected ambient dimension " + std::to_string(ambient_) + ", got " + std::to_string(n));
  }
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(field, ambient);
  if (vectors.empty()) return s;
  for (const Vec& v : vectors) s.check_ambient(v.size());
  RrefResult red = rref(Matrix::from_rows(field, ambient, vectors));
  for (std::size_t r = 0; r < red.pivots.size(); ++r) s.basis_.push_back(red.matrix.row(r));
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(field, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  check_ambient(v.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (!c.is_zero()) add_scaled(v, -c, basis_[r]);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other.ambient_);
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  check_ambient(other.ambient_);
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other.ambient_);
  if (basis_.empty() || other.basis_.empty()) return Subspace(field_, ambient_);
  // Solutions (x, y) of sum x_i a_i - sum y_j b_j = 0 give the common vectors.
  std::vector<Vec> columns = basis_;
  for (const Vec& b : other.basis_) columns.push_back(-Scalar::one(field_) * b);
  const Subspace null = map_kernel_image(Matrix::from_columns(field_, ambient_, columns)).kernel;
  std::vector<Vec> common;
  for (const Vec& z : null.basis()) {
    Vec w = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) add_scaled(w, z[i], basis_[i]);
    common.push_back(std::move(w));
  }
  return span(field_, ambient_, common);
}

Vec Subspace::coordinates(const Vec& v) const {
  check_ambient(v.size());
  Vec c;
  c.reserve(basis_.size());
  for (std::size_t p : pivots_) c.push_back(v[p]);
  return c;
}

KernelImage map_kernel_image(const Matrix& m) {
  const Field& f = m.field();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> null_vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vector(f, m.cols());
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.matrix(r, free);
    null_vectors.push_back(std::move(v));
  }
  return {Subspace::span(f, m.cols(), null_vectors), Subspace::span(f, m.rows(), m.column_vectors())};
}

QuotientData quotient_data(const Subspace& sub) {
  const Field& f = sub.field();
  const std::size_t n = sub.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : sub.pivots()) is_pivot[p] = true;
  QuotientData q;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) q.representative_coordinates.push_back(i);
  const std::size_t qdim = q.representative_coordinates.size();
  q.projection = Matrix(f, qdim, n);
  q.section = Matrix(f, n, qdim);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec residual = sub.reduce(unit_vector(f, n, j));
    for (std::size_t k = 0; k < qdim; ++k) q.projection(k, j) = residual[q.representative_coordinates[k]];
  }
  for (std::size_t k = 0; k < qdim; ++k) {
    q.section(q.representative_coordinates[k], k) = Scalar::one(f);
    q.coset_basis.push_back(unit_vector(f, n, q.representative_coordinates[k]));
  }
  return q;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side has wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = red.matrix(r, m.cols());
  return x;
}

// --------------------------------------------------------- EchelonBuilder

EchelonBuilder::EchelonBuilder(const Field& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

Vec EchelonBuilder::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("echelon insert of wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (!c.is_zero()) add_scaled(v, -c, rows_[r]);
  }
  return v;
}

std::optional<Vec> EchelonBuilder::insert(const Vec& v) {
  Vec w = reduce(v);
  std::size_t lead = 0;
  while (lead < w.size() && w[lead].is_zero()) ++lead;
  if (lead == w.size()) return std::nullopt;
  const Scalar inv = w[lead].inverse();
  for (auto& x : w) x *= inv;
  for (auto& row : rows_) {
    const Scalar c = row[lead];
    if (!c.is_zero()) add_scaled(row, -c, w);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, w);
  return w;
}

Subspace EchelonBuilder::to_subspace() const {
  Subspace s(field_, ambient_);
  s.basis_ = rows_;
  s.pivots_ = pivots_;
  return s;
}

}  // namespace nalg
