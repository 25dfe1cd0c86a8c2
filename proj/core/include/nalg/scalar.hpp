#pragma once

// Exact ground-field arithmetic: arbitrary-precision rationals and prime
// fields GF(p). Nothing in the library ever touches floating point.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nalg {

class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  /// The default field is Q.
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InvalidArgument unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);
  /// Accepts `Q` or `GF(p)`.
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return kind_ == Kind::PrimeField; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  /// Zero in Q.
  Scalar() = default;
  Scalar(const Field& field, long long value);
  Scalar(const Field& field, const mpz_class& numerator, const mpz_class& denominator);

  static Scalar zero(const Field& field) { return Scalar(field, 0); }
  static Scalar one(const Field& field) { return Scalar(field, 1); }
  /// Literal syntax: `-3`, `5/6`. Over GF(p) a fraction means num * den^-1.
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Reduced fraction; only valid over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Canonical residue in [0, p); only valid over GF(p).
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used only for canonical containers; not a field order.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& rhs) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_{mpq_class(0)};
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Checked binary operation: FieldMismatch, DivisionByZero.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// The first `count` elements 0, 1, 2, ... of the field.
/// Throws NotEnoughElements when count exceeds p over GF(p).
std::vector<Scalar> distinct_scalars(const Field& field, std::size_t count);

}  // namespace nalg
