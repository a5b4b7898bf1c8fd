#include "sdb/axioms.hpp"

#include "sdb/errors.hpp"
#include "sdb/finite.hpp"
#include "sdb/quandle.hpp"

namespace sdb {

namespace {

// Element of A (x) A as an n x n grid of coefficients of e_a (x) e_b.
using Square = std::vector<std::vector<Scalar>>;
// Element of A (x) A (x) A, flattened.
using Cube = std::vector<Scalar>;

Square zero_square(const Field& field, std::size_t n) { return Square(n, std::vector<Scalar>(n, Scalar::zero(field))); }

std::string render_square(const Square& s) {
  std::string out;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (s[a][b].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + s[a][b].render() + ")*e" + std::to_string(a + 1) + "(x)e" + std::to_string(b + 1);
    }
  return out.empty() ? "0" : out;
}

std::string render_cube(const Cube& c, std::size_t n) {
  std::string out;
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (c[idx].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c[idx].render() + ")*e" + std::to_string(idx / (n * n) + 1) + "(x)e" +
           std::to_string(idx / n % n + 1) + "(x)e" + std::to_string(idx % n + 1);
  }
  return out.empty() ? "0" : out;
}

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

Square delta_of(const Coalgebra& c, const Element& u) {
  Square s = zero_square(c.field, c.dim());
  for (const auto& t : comultiply(c, u)) s[t.left][t.right] = t.coef;
  return s;
}

Element basis(const Field& field, std::size_t n, std::size_t i) { return Element::basis(field, n, i); }

void require_prime(const Field& field, const char* op) {
  if (!field.is_prime()) {
    throw unsupported_field(std::string(op) + " enumerates the carrier and needs a prime field, got " +
                            field.describe());
  }
}

}  // namespace

CheckReport check_associativity(const Algebra& a) {
  CheckReport report;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Element lhs = multiply(a, basis_product(a, i, j), basis(a.field, n, k));
        const Element rhs = multiply(a, basis(a.field, n, i), basis_product(a, j, k));
        if (!(lhs == rhs)) {
          report.fail({"(" + basis_name(i) + basis_name(j) + ")" + basis_name(k) + " vs " + basis_name(i) + "(" +
                           basis_name(j) + basis_name(k) + ")",
                       lhs.render(), rhs.render()});
        }
      }
  return report;
}

CheckReport check_coassociativity(const Coalgebra& c) {
  CheckReport report;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Cube left(n * n * n, Scalar::zero(c.field)), right = left;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& w = c.comul(i, a, b);
        if (w.is_zero()) continue;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            // (Delta (x) id): Delta(e_a) (x) e_b ; (id (x) Delta): e_a (x) Delta(e_b)
            if (!c.comul(a, x, y).is_zero()) left[(x * n + y) * n + b] += w * c.comul(a, x, y);
            if (!c.comul(b, x, y).is_zero()) right[(a * n + x) * n + y] += w * c.comul(b, x, y);
          }
      }
    if (left != right) report.fail({"Delta on " + basis_name(i), render_cube(left, n), render_cube(right, n)});
  }
  return report;
}

CheckReport check_cocommutativity(const Coalgebra& c) {
  CheckReport report;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Square d = delta_of(c, basis(c.field, n, i));
    Square flipped = zero_square(c.field, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) flipped[b][a] = d[a][b];
    if (d != flipped) report.fail({"flip on " + basis_name(i), render_square(flipped), render_square(d)});
  }
  return report;
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& m,
                                                const std::vector<Scalar>& rhs, const Field& field) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw dimension_error("linear system: rhs size mismatch");
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<Scalar>> aug(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw dimension_error("linear system: ragged matrix");
    aug[r] = m[r];
    aug[r].push_back(rhs[r]);
  }
  // Fraction-free forward elimination: row <- pivot*row - lead*pivot_row.
  std::vector<std::size_t> pivot_cols;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t sel = prow;
    while (sel < rows && aug[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(aug[sel], aug[prow]);
    const Scalar pivot = aug[prow][col];
    for (std::size_t r = prow + 1; r < rows; ++r) {
      if (aug[r][col].is_zero()) continue;
      const Scalar lead = aug[r][col];
      for (std::size_t c = col; c <= cols; ++c) aug[r][c] = pivot * aug[r][c] - lead * aug[prow][c];
    }
    pivot_cols.push_back(col);
    ++prow;
  }
  for (std::size_t r = prow; r < rows; ++r) {
    if (!aug[r][cols].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(cols, Scalar::zero(field));
  for (std::size_t r = prow; r-- > 0;) {
    const std::size_t col = pivot_cols[r];
    Scalar acc = aug[r][cols];
    for (std::size_t c = col + 1; c < cols; ++c) acc -= aug[r][c] * x[c];
    x[col] = acc / aug[r][col];
  }
  return x;
}

std::optional<std::vector<Scalar>> find_counit(const Coalgebra& c) {
  const std::size_t n = c.dim();
  std::vector<std::vector<Scalar>> m;
  std::vector<Scalar> rhs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < n; ++b) {
      // (eps (x) id) Delta(e_i) = sum_a comul(i,a,b) eps_a e_b = e_i
      std::vector<Scalar> row(n, Scalar::zero(c.field));
      for (std::size_t a = 0; a < n; ++a) row[a] = c.comul(i, a, b);
      m.push_back(std::move(row));
      rhs.push_back(i == b ? Scalar::one(c.field) : Scalar::zero(c.field));
    }
    for (std::size_t a = 0; a < n; ++a) {
      // (id (x) eps) Delta(e_i) = sum_b comul(i,a,b) eps_b e_a = e_i
      std::vector<Scalar> row(n, Scalar::zero(c.field));
      for (std::size_t b = 0; b < n; ++b) row[b] = c.comul(i, a, b);
      m.push_back(std::move(row));
      rhs.push_back(i == a ? Scalar::one(c.field) : Scalar::zero(c.field));
    }
  }
  return solve_linear(m, rhs, c.field);
}

std::optional<Element> find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Scalar>> m;
  std::vector<Scalar> rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Scalar> left(n, Scalar::zero(a.field)), right = left;
      for (std::size_t x = 0; x < n; ++x) {
        left[x] = a.mul(x, i, k);   // u e_i
        right[x] = a.mul(i, x, k);  // e_i u
      }
      m.push_back(std::move(left));
      m.push_back(std::move(right));
      const Scalar target = i == k ? Scalar::one(a.field) : Scalar::zero(a.field);
      rhs.push_back(target);
      rhs.push_back(target);
    }
  auto solution = solve_linear(m, rhs, a.field);
  if (!solution) return std::nullopt;
  return Element(std::move(*solution));
}

CheckReport check_consistency(const Bialgebra& b) {
  b.validate();
  CheckReport report;
  const Algebra& a = b.algebra;
  const Coalgebra& c = b.coalgebra;
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Square lhs = delta_of(c, basis_product(a, i, j));
      Square rhs = zero_square(a.field, n);
      for (const auto& x : comultiply(c, basis(a.field, n, i)))
        for (const auto& y : comultiply(c, basis(a.field, n, j))) {
          const Element left = basis_product(a, x.left, y.left);
          const Element right = basis_product(a, x.right, y.right);
          const Scalar w = x.coef * y.coef;
          for (std::size_t s = 0; s < n; ++s) {
            if (left[s].is_zero()) continue;
            for (std::size_t t = 0; t < n; ++t) {
              if (!right[t].is_zero()) rhs[s][t] += w * left[s] * right[t];
            }
          }
        }
      if (lhs != rhs) {
        report.fail({"Delta(" + basis_name(i) + basis_name(j) + ") vs Delta(" + basis_name(i) + ")Delta(" +
                         basis_name(j) + ")",
                     render_square(lhs), render_square(rhs)});
      }
    }
  return report;
}

CheckReport check_sd_bialgebra(const Bialgebra& b) {
  b.validate();
  CheckReport report;
  const Algebra& a = b.algebra;
  const std::size_t n = b.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const SweedlerTerms dk = comultiply(b.coalgebra, basis(a.field, n, k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Element lhs = multiply(a, basis_product(a, i, j), basis(a.field, n, k));
        Element rhs(a.field, n);
        for (const auto& t : dk) {
          rhs = rhs + t.coef * multiply(a, basis_product(a, i, t.left), basis_product(a, j, t.right));
        }
        if (!(lhs == rhs)) {
          report.fail({"(" + basis_name(i) + basis_name(j) + ")" + basis_name(k), lhs.render(), rhs.render()});
        }
      }
  }
  return report;
}

CheckReport check_sd_algebra_pointwise(const Algebra& a) {
  require_prime(a.field, "check_sd_algebra_pointwise");
  const auto fp = finite::FpTensor::from_algebra(a);
  const CayleyTable table = finite::carrier_table(fp);
  CheckReport report;
  if (auto v = finite::parallel::first_sd_violation(table)) {
    const auto elem = [&](std::uint32_t code) {
      return finite::to_element(finite::decode_element(code, fp.p(), fp.dim()), a.field, fp.dim());
    };
    const Element u = elem((*v)[0]), w1 = elem((*v)[1]), w2 = elem((*v)[2]);
    const Element lhs = multiply(a, multiply(a, u, w1), w2);
    const Element rhs = multiply(a, multiply(a, u, w2), multiply(a, w1, w2));
    report.fail({"u=" + u.render() + ", v=" + w1.render() + ", w=" + w2.render(), lhs.render(), rhs.render()});
  }
  return report;
}

CheckReport check_cube_zero(const Algebra& a) {
  CheckReport report;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Element lhs = multiply(a, basis_product(a, i, j), basis(a.field, n, k));
        if (!lhs.is_zero()) {
          report.fail({"(" + basis_name(i) + basis_name(j) + ")" + basis_name(k), lhs.render(), "0"});
        }
      }
  return report;
}

std::vector<Element> find_idempotents(const Algebra& a) {
  require_prime(a.field, "find_idempotents");
  const auto fp = finite::FpTensor::from_algebra(a);
  std::vector<Element> out;
  for (auto code : finite::parallel::idempotents(fp)) {
    out.push_back(finite::to_element(finite::decode_element(code, fp.p(), fp.dim()), a.field, fp.dim()));
  }
  return out;
}

CheckReport verify_idempotent_family(const Algebra& a, const Element& family) {
  CheckReport report;
  const Element residual = multiply(a, family, family) - family;
  for (std::size_t i = 0; i < residual.dim(); ++i) {
    if (!residual[i].is_zero()) {
      report.fail({"coordinate " + basis_name(i) + " of u*u - u", residual[i].render(), "0"});
    }
  }
  return report;
}

CheckReport is_rack_carrier(const Algebra& a) {
  require_prime(a.field, "is_rack_carrier");
  return is_rack(finite::carrier_table(finite::FpTensor::from_algebra(a)));
}

}  // namespace sdb
