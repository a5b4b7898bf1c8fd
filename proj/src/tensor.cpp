#include "sdb/tensor.hpp"

#include <algorithm>
#include <map>

#include "sdb/errors.hpp"

namespace sdb {

Element Element::basis(const Field& field, std::size_t dim, std::size_t index) {
  Element e(field, dim);
  e[index] = Scalar::one(field);
  return e;
}

bool Element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Element operator+(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) throw dimension_error("element dimensions differ");
  Element r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] += b[i];
  return r;
}

Element operator-(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) throw dimension_error("element dimensions differ");
  Element r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] -= b[i];
  return r;
}

Element operator*(const Scalar& s, const Element& a) {
  Element r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
  return r;
}

std::string Element::render() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string basis = "e" + std::to_string(i + 1);
    out += coeffs_[i].is_one() ? basis : "(" + coeffs_[i].render() + ")*" + basis;
  }
  return out.empty() ? "0" : out;
}

namespace {

void validate_tensor(const Field& field, const Tensor3& t, const char* what) {
  if (t.dim() == 0) throw dimension_error(std::string(what) + " has dimension 0");
  if (t.flat().size() != t.dim() * t.dim() * t.dim()) throw dimension_error(std::string(what) + " is not n x n x n");
  for (const auto& s : t.flat()) {
    if (!(s.field() == field)) throw field_error(std::string(what) + " entry not in " + field.describe());
  }
}

void require_element(const Field& field, std::size_t dim, const Element& u) {
  if (u.dim() != dim) throw dimension_error("element of dimension " + std::to_string(u.dim()) + ", expected " + std::to_string(dim));
  for (const auto& s : u.coeffs()) {
    if (!(s.field() == field)) throw field_error("element coefficient not in " + field.describe());
  }
}

void require_square(const Matrix& g, std::size_t n) {
  if (g.size() != n) throw dimension_error("basis-change matrix has wrong size");
  for (const auto& row : g) {
    if (row.size() != n) throw dimension_error("basis-change matrix is not square");
  }
}

}  // namespace

void Algebra::validate() const { validate_tensor(field, mul, "multiplication tensor"); }
void Coalgebra::validate() const { validate_tensor(field, comul, "comultiplication tensor"); }

void Bialgebra::validate() const {
  algebra.validate();
  coalgebra.validate();
  if (!(algebra.field == coalgebra.field)) throw field_error("algebra and coalgebra over different fields");
  if (algebra.dim() != coalgebra.dim()) throw dimension_error("algebra and coalgebra dimensions differ");
}

Matrix identity_matrix(const Field& field, std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(field);
  return m;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  require_square(a, n);
  require_square(b, n);
  const Field& field = a.at(0).at(0).field();
  Matrix r(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Matrix invert(const Matrix& g) {
  const std::size_t n = g.size();
  require_square(g, n);
  const Field& field = g.at(0).at(0).field();
  Matrix left = g;
  Matrix right = identity_matrix(field, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && left[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw division_by_zero("singular basis-change matrix");
    std::swap(left[pivot], left[col]);
    std::swap(right[pivot], right[col]);
    const Scalar inv = left[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      left[col][j] *= inv;
      right[col][j] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || left[r][col].is_zero()) continue;
      const Scalar factor = left[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        left[r][j] -= factor * left[col][j];
        right[r][j] -= factor * right[col][j];
      }
    }
  }
  return right;
}

Element basis_product(const Algebra& a, std::size_t i, std::size_t j) {
  Element r(a.field, a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) r[k] = a.mul(i, j, k);
  return r;
}

Element multiply(const Algebra& a, const Element& u, const Element& v) {
  require_element(a.field, a.dim(), u);
  require_element(a.field, a.dim(), v);
  const std::size_t n = a.dim();
  Element r(a.field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!a.mul(i, j, k).is_zero()) r[k] += uv * a.mul(i, j, k);
      }
    }
  }
  return r;
}

SweedlerTerms comultiply(const Coalgebra& c, const Element& u) {
  require_element(c.field, c.dim(), u);
  const std::size_t n = c.dim();
  SweedlerTerms out;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t r = 0; r < n; ++r) {
      Scalar coef = Scalar::zero(c.field);
      for (std::size_t i = 0; i < n; ++i) {
        if (!u[i].is_zero() && !c.comul(i, l, r).is_zero()) coef += u[i] * c.comul(i, l, r);
      }
      if (!coef.is_zero()) out.push_back({coef, l, r});
    }
  }
  return out;
}

Coalgebra dualize(const Algebra& a) {
  const std::size_t n = a.dim();
  Coalgebra c{a.field, Tensor3(a.field, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.comul(k, i, j) = a.mul(i, j, k);
  return c;
}

Algebra codualize(const Coalgebra& c) {
  const std::size_t n = c.dim();
  Algebra a{c.field, Tensor3(c.field, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.mul(i, j, k) = c.comul(k, i, j);
  return a;
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  Algebra r{a.field, Tensor3(a.field, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r.mul(i, j, k) = a.mul(j, i, k);
  return r;
}

Algebra change_basis(const Algebra& a, const Matrix& g) {
  const std::size_t n = a.dim();
  require_square(g, n);
  const Matrix h = invert(g);
  // f_a f_b = sum g[a][i] g[b][j] mul(i,j,k) e_k and e_k = sum_c h[k][c] f_c.
  Tensor3 partial(a.field, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < n; ++i) {
        if (g[x][i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (g[y][j].is_zero()) continue;
          const Scalar w = g[x][i] * g[y][j];
          for (std::size_t k = 0; k < n; ++k) partial(x, y, k) += w * a.mul(i, j, k);
        }
      }
  Algebra r{a.field, Tensor3(a.field, n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t k = 0; k < n; ++k) {
        if (partial(x, y, k).is_zero()) continue;
        for (std::size_t z = 0; z < n; ++z) r.mul(x, y, z) += partial(x, y, k) * h[k][z];
      }
  return r;
}

Coalgebra change_basis(const Coalgebra& c, const Matrix& g) {
  const std::size_t n = c.dim();
  require_square(g, n);
  const Matrix h = invert(g);
  // Delta(f_a) = sum_i g[a][i] comul(i,j,k) e_j (x) e_k, then e_j = sum_b h[j][b] f_b.
  Coalgebra r{c.field, Tensor3(c.field, n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < n; ++i) {
      if (g[x][i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (c.comul(i, j, k).is_zero()) continue;
          const Scalar w = g[x][i] * c.comul(i, j, k);
          for (std::size_t y = 0; y < n; ++y) {
            if (h[j][y].is_zero()) continue;
            for (std::size_t z = 0; z < n; ++z) r.comul(x, y, z) += w * h[j][y] * h[k][z];
          }
        }
    }
  return r;
}

Coalgebra group_like_coalgebra(const Field& field, std::size_t dim) {
  Coalgebra c{field, Tensor3(field, dim)};
  for (std::size_t i = 0; i < dim; ++i) c.comul(i, i, i) = Scalar::one(field);
  return c;
}

namespace {

Tensor3 tensor_from_strings(const Field& field, const std::vector<std::vector<std::vector<std::string>>>& s) {
  const std::size_t n = s.size();
  Tensor3 t(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i].size() != n) throw dimension_error("tensor is not n x n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (s[i][j].size() != n) throw dimension_error("tensor is not n x n x n");
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = parse_scalar(s[i][j][k], field);
    }
  }
  return t;
}

}  // namespace

Algebra make_algebra(const Field& field, const std::vector<std::vector<std::vector<std::string>>>& mul) {
  Algebra a{field, tensor_from_strings(field, mul)};
  a.validate();
  return a;
}

Coalgebra make_coalgebra(const Field& field, const std::vector<std::vector<std::vector<std::string>>>& comul) {
  Coalgebra c{field, tensor_from_strings(field, comul)};
  c.validate();
  return c;
}

}  // namespace sdb
