#include "nalg/algebra.hpp"

#include <sstream>

namespace nalg {

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

Vec to_dense(const Field& field, std::size_t n, const SparseVec& v) {
  Vec out = zero_vector(field, n);
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

Algebra::Algebra() : Algebra(Field(), {}, std::vector<SparseVec>{}) {}

Algebra::Algebra(const Field& field, std::vector<std::string> basis_names, const std::vector<Vec>& table) {
  const std::size_t n = basis_names.size();
  if (table.size() != n * n) throw DimensionMismatch("structure table needs dim^2 entries");
  std::vector<SparseVec> sparse;
  sparse.reserve(table.size());
  for (const Vec& v : table) {
    if (v.size() != n) throw DimensionMismatch("structure constant vector has wrong length");
    for (const Scalar& s : v)
      if (!(s.field() == field)) throw FieldMismatch();
    sparse.push_back(to_sparse(v));
  }
  data_ = std::make_shared<const Data>(Data{field, std::move(basis_names), std::move(sparse)});
}

Algebra::Algebra(const Field& field, std::vector<std::string> basis_names, std::vector<SparseVec> table) {
  const std::size_t n = basis_names.size();
  if (table.size() != n * n) throw DimensionMismatch("structure table needs dim^2 entries");
  for (const SparseVec& v : table)
    for (const auto& [i, c] : v) {
      if (i >= n) throw DimensionMismatch("structure constant index out of range");
      if (!(c.field() == field)) throw FieldMismatch();
    }
  data_ = std::make_shared<const Data>(Data{field, std::move(basis_names), std::move(table)});
}

Algebra Algebra::abelian(const Field& field, std::vector<std::string> basis_names) {
  const std::size_t n = basis_names.size();
  return Algebra(field, std::move(basis_names), std::vector<SparseVec>(n * n));
}

Vec Algebra::product(std::size_t i, std::size_t j) const { return to_dense(field(), dim(), product_sparse(i, j)); }

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw DimensionMismatch("element has wrong length");
  Vec out = zero_element();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const SparseVec& c = product_sparse(i, j);
      if (c.empty()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& [k, s] : c) out[k] += ab * s;
    }
  }
  return out;
}

std::string Algebra::format_element(const Vec& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Scalar& c = v[i];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string magnitude;
    if (field().is_finite()) {
      magnitude = c.is_one() ? "" : c.to_string();
    } else {
      negative = c.rational() < 0;
      const mpq_class m = abs(c.rational());
      magnitude = m == 1 ? "" : m.get_str();
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!magnitude.empty()) out += magnitude + " ";
    out += basis_names()[i];
  }
  return out.empty() ? "0" : out;
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->field == b.data_->field && a.data_->names == b.data_->names && a.data_->table == b.data_->table;
}

std::vector<Vec> dense_table(const Algebra& a) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.push_back(a.product(i, j));
  return out;
}

namespace {

std::string pair_message(const Algebra& a, std::size_t i, std::size_t j, const Algebra& b, const Vec& lhs, const Vec& rhs) {
  std::ostringstream os;
  os << "not multiplicative on (" << a.basis_names()[i] << ", " << a.basis_names()[j] << "): f(" << a.basis_names()[i]
     << " * " << a.basis_names()[j] << ") = " << b.format_element(lhs) << " but f(" << a.basis_names()[i] << ") * f("
     << a.basis_names()[j] << ") = " << b.format_element(rhs);
  return os.str();
}

}  // namespace

NotMultiplicative::NotMultiplicative(std::size_t i, std::size_t j, Vec lhs, Vec rhs, const std::string& detail)
    : Error(detail), i_(i), j_(j), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

Morphism Morphism::make(const Algebra& source, const Algebra& target, const Matrix& matrix) {
  if (!(source.field() == target.field()) || !(matrix.field() == source.field())) throw FieldMismatch();
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw DimensionMismatch("morphism matrix must be " + std::to_string(target.dim()) + " x " + std::to_string(source.dim()));
  }
  std::vector<Vec> images = matrix.column_vectors();
  for (std::size_t i = 0; i < source.dim(); ++i) {
    for (std::size_t j = 0; j < source.dim(); ++j) {
      Vec lhs = matrix.apply(source.product(i, j));
      Vec rhs = target.multiply(images[i], images[j]);
      if (lhs != rhs) {
        std::string detail = pair_message(source, i, j, target, lhs, rhs);
        throw NotMultiplicative(i, j, std::move(lhs), std::move(rhs), detail);
      }
    }
  }
  return Morphism(source, target, matrix);
}

Morphism Morphism::identity(const Algebra& a) { return Morphism(a, a, Matrix::identity(a.field(), a.dim())); }

Morphism Morphism::zero(const Algebra& source, const Algebra& target) {
  if (!(source.field() == target.field())) throw FieldMismatch();
  return Morphism(source, target, Matrix(source.field(), target.dim(), source.dim()));
}

Subspace Morphism::kernel_subspace() const { return map_kernel_image(matrix_).kernel; }
Subspace Morphism::image_subspace() const { return map_kernel_image(matrix_).image; }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source())) throw NotComposable("target of the first map is not the source of the second");
  return Morphism::make(f.source(), g.target(), g.matrix() * f.matrix());
}

}  // namespace nalg
