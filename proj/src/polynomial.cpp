#include "sdb/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "sdb/errors.hpp"

namespace sdb {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const mpq_class& value) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return variable_power(nvars, index, 1);
}

Polynomial Polynomial::variable_power(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw field_error("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = power;
  Polynomial p(nvars);
  p.add_term(m, 1);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

mpq_class Polynomial::constant_value() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const mpq_class& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : std::accumulate(leading_monomial().begin(), leading_monomial().end(), 0u);
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw field_error("polynomials over different variable sets");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw field_error("polynomials over different variable sets");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw field_error("polynomials over different variable sets");
  Polynomial r(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < a.nvars_; ++v) m[v] = ma[v] + mb[v];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const mpq_class& factor) const {
  Polynomial r(nvars_);
  if (factor == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * factor);
  return r;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw division_by_zero("polynomial division by zero");
  if (nvars_ != divisor.nvars_) throw field_error("polynomials over different variable sets");
  Polynomial quotient(nvars_);
  Polynomial rest = *this;
  const Monomial& lm = divisor.leading_monomial();
  const mpq_class& lc = divisor.leading_coefficient();
  Monomial shift(nvars_);
  while (!rest.is_zero()) {
    const Monomial& rm = rest.leading_monomial();
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (rm[v] < lm[v]) return std::nullopt;
      shift[v] = rm[v] - lm[v];
    }
    Polynomial t(nvars_);
    t.add_term(shift, rest.leading_coefficient() / lc);
    quotient += t;
    rest -= t * divisor;
  }
  return quotient;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out;
  if (is_zero()) return out;
  out.assign(degree_in(var) + 1, Polynomial(nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[var] = 0;
    out[m[var]].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coefficient());
}

mpz_class Polynomial::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& [m, c] : terms_) l = lcm(l, mpz_class(c.get_den()));
  return l;
}

mpz_class Polynomial::integer_content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) g = gcd(g, mpz_class(c.get_num()));
  return g;
}

namespace {

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

}  // namespace

std::string Polynomial::render(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const mpq_class magnitude = abs(c);
    const std::string mono = render_monomial(m, names);
    std::string body;
    if (mono.empty()) {
      body = magnitude.get_str();
    } else if (magnitude == 1) {
      // A leading "-x^2" would parse as (-x)^2, so keep the unit coefficient.
      const auto lead = std::find_if(m.begin(), m.end(), [](std::uint32_t e) { return e != 0; });
      body = (first && negative && *lead > 1) ? "1*" + mono : mono;
    } else {
      body = magnitude.get_str() + '*' + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

namespace {

std::optional<std::size_t> main_variable(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return std::nullopt;
}

Polynomial content_in(const Polynomial& a, std::size_t var) {
  Polynomial g(a.nvars());
  for (const auto& c : a.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Scales to integer coefficients with trivial integer content, which keeps
// the remainder sequence from accumulating rational coefficient growth.
Polynomial integral(const Polynomial& a) {
  if (a.is_zero()) return a;
  const Polynomial cleared = a.scaled(mpq_class(a.denominator_lcm()));
  return cleared.scaled(mpq_class(1, 1) / mpq_class(cleared.integer_content()));
}

Polynomial primitive_part(const Polynomial& a, std::size_t var) {
  if (a.is_zero()) return a;
  return integral(*a.divide_exact(content_in(a, var)));
}

// Pseudo-remainder of a by b as polynomials in `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const auto bc = b.coefficients_in(var);
  const std::uint32_t db = static_cast<std::uint32_t>(bc.size() - 1);
  const Polynomial& lcb = bc.back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const auto rc = r.coefficients_in(var);
    const std::uint32_t dr = static_cast<std::uint32_t>(rc.size() - 1);
    const Polynomial t = rc.back() * Polynomial::variable_power(a.nvars(), var, dr - db);
    r = integral(lcb * r - t * b);
  }
  return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw field_error("polynomials over different variable sets");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const auto var = main_variable(a, b);
  if (!var) return Polynomial::constant(a.nvars(), 1);
  const std::size_t v = *var;
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  Polynomial pa = integral(*a.divide_exact(ca));
  Polynomial pb = integral(*b.divide_exact(cb));
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  Polynomial g(a.nvars());
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Polynomial::constant(a.nvars(), 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return (gcd(ca, cb) * primitive_part(g, v)).monic();
}

}  // namespace sdb
