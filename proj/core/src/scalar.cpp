#include "nalg/scalar.hpp"

#include <cctype>
#include <limits>

#include "nalg/error.hpp"

namespace nalg {

namespace {

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base % p;
    base = base * base % p;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw InvalidArgument("GF(" + std::to_string(p) + "): characteristic must be a prime below 2^32");
  }
  return Field(Kind::PrimeField, p);
}

Field Field::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string_view digits = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || p > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError("malformed field '" + std::string(text) + "'", 0);
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (!digits.empty()) return prime(p);
  }
  throw ParseError("expected field 'Q' or 'GF(p)', got '" + std::string(text) + "'", 0);
}

std::string Field::to_string() const {
  return kind_ == Kind::Rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(const Field& field, long long value) : field_(field) {
  if (field.is_finite()) {
    const auto p = static_cast<long long>(field.characteristic());
    long long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(const Field& field, const mpz_class& numerator, const mpz_class& denominator) : field_(field) {
  if (denominator == 0) throw DivisionByZero();
  if (field.is_finite()) {
    const std::uint64_t p = field.characteristic();
    const std::uint64_t den = reduce_mod(denominator, p);
    if (den == 0) throw DivisionByZero();
    value_ = reduce_mod(numerator, p) * pow_mod(den, p - 2, p) % p;
  } else {
    mpq_class q(numerator, denominator);
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto read_digits = [&](std::string& out) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
    if (i == start) throw ParseError("expected digits in scalar '" + std::string(text) + "'", i);
  };
  std::string num;
  std::string den = "1";
  read_digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    read_digits(den);
  }
  if (i != text.size()) throw ParseError("trailing characters in scalar '" + std::string(text) + "'", i);
  mpz_class n(num);
  if (negative) n = -n;
  return Scalar(field, n, mpz_class(den));
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return residue() == 0;
  return rational() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return residue() == 1 % field_.characteristic();
  return rational() == 1;
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) throw FieldMismatch();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_finite()) {
    const std::uint64_t p = field_.characteristic();
    out.value_ = (p - residue()) % p;
  } else {
    out.value_ = mpq_class(-rational());
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar out = *this;
  if (field_.is_finite()) {
    const std::uint64_t p = field_.characteristic();
    out.value_ = pow_mod(residue(), p - 2, p);
  } else {
    out.value_ = mpq_class(1 / rational());
  }
  return out;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_finite()) {
    value_ = (residue() + rhs.residue()) % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) += rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_finite()) {
    const std::uint64_t p = field_.characteristic();
    value_ = (residue() + p - rhs.residue()) % p;
  } else {
    std::get<mpq_class>(value_) -= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_finite()) {
    value_ = residue() * rhs.residue() % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) *= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_finite()) return a.residue() == b.residue();
  return a.rational() == b.rational();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.field_.characteristic() != b.field_.characteristic()) {
    return a.field_.characteristic() <=> b.field_.characteristic();
  }
  if (a.field_.is_finite()) return a.residue() <=> b.residue();
  const int c = cmp(a.rational(), b.rational());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(residue());
  return rational().get_str();
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

std::vector<Scalar> distinct_scalars(const Field& field, std::size_t count) {
  if (field.is_finite() && count > field.characteristic()) {
    throw NotEnoughElements(field.to_string() + " has only " + std::to_string(field.characteristic()) +
                            " elements, " + std::to_string(count) + " distinct scalars requested");
  }
  std::vector<Scalar> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(field, static_cast<long long>(i));
  return out;
}

}  // namespace nalg
