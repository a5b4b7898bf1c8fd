#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sdb/polynomial.hpp"

namespace sdb {

/// Ground field: Q, GF(p), or Q(vars) for an ordered list of parameter names.
class Field {
 public:
  enum class Kind { rational, prime, params };

  static Field rational();
  /// Throws field_error unless p is prime.
  static Field prime(std::uint64_t p);
  /// Throws field_error unless names are distinct identifiers [a-z][a-z0-9]*.
  static Field params(std::vector<std::string> vars);

  Field() : Field(rational()) {}

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  std::uint64_t characteristic() const noexcept { return p_; }
  const std::vector<std::string>& vars() const;
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  Field(Kind kind, std::uint64_t p, std::shared_ptr<const std::vector<std::string>> vars)
      : kind_(kind), p_(p), vars_(std::move(vars)) {}

  Kind kind_ = Kind::rational;
  std::uint64_t p_ = 0;
  std::shared_ptr<const std::vector<std::string>> vars_;
};

bool is_prime_number(std::uint64_t n);
bool is_identifier(std::string_view name);

/// Reduced quotient of two polynomials; the denominator is monic in the
/// graded-lex order, so equal values are structurally identical.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Exact field element tagged by its owning Field.
///
/// Values are immutable once built and every operation is pure, so scalars
/// can be shared freely between threads.
class Scalar {
 public:
  Scalar() : Scalar(zero(Field::rational())) {}

  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_integer(const Field& field, const mpz_class& value);
  static Scalar from_integer(const Field& field, long value) { return from_integer(field, mpz_class(value)); }
  /// Embeds a rational number; throws pole_error in GF(p) when p divides the denominator.
  static Scalar from_rational(const Field& field, const mpq_class& value);
  static Scalar variable(const Field& field, std::size_t index);
  static Scalar from_function(const Field& field, RationalFunction value);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const { return *this == one(field_); }

  const mpq_class& rational() const;
  std::uint64_t residue() const;
  const RationalFunction& function() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint32_t exponent) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Text in the scalar-expression grammar; parse_scalar(render()) == *this.
  std::string render() const;

 private:
  Scalar(Field field, std::variant<mpq_class, std::uint64_t, RationalFunction> value)
      : field_(std::move(field)), value_(std::move(value)) {}

  Field field_;
  std::variant<mpq_class, std::uint64_t, RationalFunction> value_;
};

enum class ArithOp { add, sub, mul, div };

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Parses the scalar-expression grammar
///   expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
///   factor := atom ('^' integer)? ; atom := integer | variable | '(' expr ')' | '-' atom
/// Throws parse_error (with position) on syntax errors, unknown variables and
/// division by zero.
Scalar parse_scalar(std::string_view text, const Field& field);

using Assignment = std::map<std::string, Scalar>;

/// Substitutes values for the parameters of a params-field scalar. Values must
/// all live in `target`. Rational and residue scalars are mapped into `target`.
/// Throws pole_error when the denominator vanishes.
Scalar evaluate(const Scalar& s, const Assignment& assignment, const Field& target);

/// Evaluates a polynomial (variables named by `names`) at `assignment`.
Scalar evaluate(const Polynomial& poly, const std::vector<std::string>& names, const Assignment& assignment,
                const Field& target);

}  // namespace sdb
