#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdb {

/// Exponent vector, one entry per declared variable (declaration order).
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically with the first declared variable most significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map ordered by GrlexLess, so the leading term is the
/// last entry. Zero coefficients are never stored, which makes structural
/// equality coincide with mathematical equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpq_class, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const mpq_class& value);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  /// index^power as a polynomial in nvars variables.
  static Polynomial variable_power(std::size_t nvars, std::size_t index, std::uint32_t power);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; meaningful when is_constant().
  mpq_class constant_value() const;

  const Monomial& leading_monomial() const;
  const mpq_class& leading_coefficient() const;
  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial scaled(const mpq_class& factor) const;
  Polynomial pow(std::uint32_t exponent) const;

  /// Quotient when `divisor` divides this polynomial exactly, else nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Coefficients as a polynomial in `var`: result[k] multiplies var^k and
  /// does not involve `var`. Empty for the zero polynomial.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// Least common multiple of all coefficient denominators.
  mpz_class denominator_lcm() const;
  /// Gcd of all numerators of an integer-coefficient polynomial.
  mpz_class integer_content() const;

  std::string render(const std::vector<std::string>& names) const;

  void add_term(const Monomial& m, const mpq_class& c);

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace sdb
