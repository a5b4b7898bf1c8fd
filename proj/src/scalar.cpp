#include "sdb/scalar.hpp"

#include <algorithm>
#include <set>

#include "sdb/errors.hpp"

namespace sdb {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); });
}

Field Field::rational() { return Field(Kind::rational, 0, nullptr); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime_number(p)) throw field_error("GF(p) needs a prime p, got " + std::to_string(p));
  if (p > (std::uint64_t{1} << 31)) throw field_error("prime too large for residue arithmetic: " + std::to_string(p));
  return Field(Kind::prime, p, nullptr);
}

Field Field::params(std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw field_error("invalid parameter name '" + v + "'");
    if (!seen.insert(v).second) throw field_error("duplicate parameter name '" + v + "'");
  }
  return Field(Kind::params, 0, std::make_shared<const std::vector<std::string>>(std::move(vars)));
}

const std::vector<std::string>& Field::vars() const {
  static const std::vector<std::string> none;
  return vars_ ? *vars_ : none;
}

std::string Field::describe() const {
  switch (kind_) {
    case Kind::rational:
      return "Q";
    case Kind::prime:
      return "GF(" + std::to_string(p_) + ")";
    case Kind::params: {
      std::string out = "Q(";
      for (std::size_t i = 0; i < vars().size(); ++i) out += (i ? "," : "") + vars()[i];
      return out + ")";
    }
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Field::Kind::rational:
      return true;
    case Field::Kind::prime:
      return a.p_ == b.p_;
    case Field::Kind::params:
      return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }
  return false;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
  if (num_.nvars() != den_.nvars()) throw field_error("numerator and denominator over different variables");
  normalize();
}

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  const mpq_class lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

namespace {

std::uint64_t mod_reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    throw field_error("field mismatch: " + a.field().describe() + " vs " + b.field().describe());
  }
}

}  // namespace

Scalar Scalar::zero(const Field& field) { return from_integer(field, mpz_class(0)); }

Scalar Scalar::one(const Field& field) { return from_integer(field, mpz_class(1)); }

Scalar Scalar::from_integer(const Field& field, const mpz_class& value) {
  switch (field.kind()) {
    case Field::Kind::rational:
      return Scalar(field, mpq_class(value));
    case Field::Kind::prime:
      return Scalar(field, mod_reduce(value, field.characteristic()));
    case Field::Kind::params:
      return Scalar(field, RationalFunction(Polynomial::constant(field.vars().size(), mpq_class(value))));
  }
  throw field_error("unknown field kind");
}

Scalar Scalar::from_rational(const Field& field, const mpq_class& raw) {
  if (raw.get_den() == 0) throw division_by_zero("rational with zero denominator");
  mpq_class value = raw;
  value.canonicalize();
  switch (field.kind()) {
    case Field::Kind::rational:
      return Scalar(field, value);
    case Field::Kind::prime: {
      const std::uint64_t p = field.characteristic();
      const std::uint64_t den = mod_reduce(value.get_den(), p);
      if (den == 0) throw pole_error("denominator " + value.get_den().get_str() + " vanishes in " + field.describe());
      return Scalar(field, mod_reduce(value.get_num(), p) * mod_inverse(den, p) % p);
    }
    case Field::Kind::params:
      return Scalar(field, RationalFunction(Polynomial::constant(field.vars().size(), value)));
  }
  throw field_error("unknown field kind");
}

Scalar Scalar::variable(const Field& field, std::size_t index) {
  if (field.kind() != Field::Kind::params) throw field_error("variables only exist in a params field");
  return Scalar(field, RationalFunction(Polynomial::variable(field.vars().size(), index)));
}

Scalar Scalar::from_function(const Field& field, RationalFunction value) {
  if (field.kind() != Field::Kind::params || value.numerator().nvars() != field.vars().size()) {
    throw field_error("rational function does not belong to " + field.describe());
  }
  return Scalar(field, std::move(value));
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) == 0;
    case 1:
      return std::get<1>(value_) == 0;
    default:
      return std::get<2>(value_).is_zero();
  }
}

const mpq_class& Scalar::rational() const {
  if (value_.index() != 0) throw field_error("not a rational scalar");
  return std::get<0>(value_);
}

std::uint64_t Scalar::residue() const {
  if (value_.index() != 1) throw field_error("not a prime-field scalar");
  return std::get<1>(value_);
}

const RationalFunction& Scalar::function() const {
  if (value_.index() != 2) throw field_error("not a rational-function scalar");
  return std::get<2>(value_);
}

Scalar Scalar::operator-() const { return zero(field_) - *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of zero in " + field_.describe());
  switch (value_.index()) {
    case 0:
      return Scalar(field_, mpq_class(1) / std::get<0>(value_));
    case 1:
      return Scalar(field_, mod_inverse(std::get<1>(value_), field_.characteristic()));
    default: {
      const auto& f = std::get<2>(value_);
      return Scalar(field_, RationalFunction(f.denominator(), f.numerator()));
    }
  }
}

Scalar Scalar::pow(std::uint32_t exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  switch (a.value_.index()) {
    case 0:
      return Scalar(a.field_, mpq_class(std::get<0>(a.value_) + std::get<0>(b.value_)));
    case 1:
      return Scalar(a.field_, (std::get<1>(a.value_) + std::get<1>(b.value_)) % a.field_.characteristic());
    default: {
      const auto& f = std::get<2>(a.value_);
      const auto& g = std::get<2>(b.value_);
      if (f.denominator() == g.denominator()) {
        return Scalar(a.field_, RationalFunction(f.numerator() + g.numerator(), f.denominator()));
      }
      return Scalar(a.field_, RationalFunction(f.numerator() * g.denominator() + g.numerator() * f.denominator(),
                                               f.denominator() * g.denominator()));
    }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  switch (a.value_.index()) {
    case 0:
      return Scalar(a.field_, mpq_class(std::get<0>(a.value_) - std::get<0>(b.value_)));
    case 1: {
      const std::uint64_t p = a.field_.characteristic();
      return Scalar(a.field_, (std::get<1>(a.value_) + p - std::get<1>(b.value_)) % p);
    }
    default: {
      const auto& f = std::get<2>(a.value_);
      const auto& g = std::get<2>(b.value_);
      if (f.denominator() == g.denominator()) {
        return Scalar(a.field_, RationalFunction(f.numerator() - g.numerator(), f.denominator()));
      }
      return Scalar(a.field_, RationalFunction(f.numerator() * g.denominator() - g.numerator() * f.denominator(),
                                               f.denominator() * g.denominator()));
    }
  }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  switch (a.value_.index()) {
    case 0:
      return Scalar(a.field_, mpq_class(std::get<0>(a.value_) * std::get<0>(b.value_)));
    case 1:
      return Scalar(a.field_, std::get<1>(a.value_) * std::get<1>(b.value_) % a.field_.characteristic());
    default: {
      const auto& f = std::get<2>(a.value_);
      const auto& g = std::get<2>(b.value_);
      if (f.is_zero() || g.is_zero()) return Scalar::zero(a.field_);
      return Scalar(a.field_,
                    RationalFunction(f.numerator() * g.numerator(), f.denominator() * g.denominator()));
    }
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw division_by_zero("division by zero in " + a.field_.describe());
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw error("unknown arithmetic operation");
}

std::string Scalar::render() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_).get_str();
    case 1:
      return std::to_string(std::get<1>(value_));
    default: {
      const auto& f = std::get<2>(value_);
      const auto& names = field_.vars();
      if (f.denominator().is_constant()) return f.numerator().render(names);
      return "(" + f.numerator().render(names) + ")/(" + f.denominator().render(names) + ")";
    }
  }
}

Scalar evaluate(const Polynomial& poly, const std::vector<std::string>& names, const Assignment& assignment,
                const Field& target) {
  std::vector<Scalar> values;
  values.reserve(names.size());
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (poly.degree_in(v) == 0) {
      values.push_back(Scalar::zero(target));
      continue;
    }
    auto it = assignment.find(names[v]);
    if (it == assignment.end()) throw input_error("no value assigned to parameter '" + names[v] + "'");
    if (!(it->second.field() == target)) {
      throw field_error("value for '" + names[v] + "' is not in " + target.describe());
    }
    values.push_back(it->second);
  }
  Scalar sum = Scalar::zero(target);
  for (const auto& [m, c] : poly.terms()) {
    Scalar term = Scalar::from_rational(target, c);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v]) term *= values[v].pow(m[v]);
    }
    sum += term;
  }
  return sum;
}

Scalar evaluate(const Scalar& s, const Assignment& assignment, const Field& target) {
  switch (s.field().kind()) {
    case Field::Kind::rational:
      return Scalar::from_rational(target, s.rational());
    case Field::Kind::prime:
      if (!(s.field() == target)) throw field_error("cannot move a " + s.field().describe() + " scalar into " + target.describe());
      return s;
    case Field::Kind::params:
      break;
  }
  // Clear denominators first so GF(p) targets see integer coefficients: the
  // monic normal form can carry spurious factors of p in its coefficients.
  const auto& f = s.function();
  const mpz_class scale = lcm(f.numerator().denominator_lcm(), f.denominator().denominator_lcm());
  Polynomial num = f.numerator().scaled(mpq_class(scale));
  Polynomial den = f.denominator().scaled(mpq_class(scale));
  const mpz_class content = gcd(num.integer_content(), den.integer_content());
  if (content > 1) {
    num = num.scaled(mpq_class(1, 1) / mpq_class(content));
    den = den.scaled(mpq_class(1, 1) / mpq_class(content));
  }
  const auto& names = s.field().vars();
  const Scalar d = evaluate(den, names, assignment, target);
  if (d.is_zero()) throw pole_error("denominator " + f.denominator().render(names) + " vanishes at this assignment");
  return evaluate(num, names, assignment, target) / d;
}

}  // namespace sdb
