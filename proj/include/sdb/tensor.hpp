#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdb/scalar.hpp"

namespace sdb {

/// Coefficient vector of an element in the ambient basis e_0, ..., e_{n-1}.
class Element {
 public:
  Element() = default;
  Element(const Field& field, std::size_t dim) : coeffs_(dim, Scalar::zero(field)) {}
  explicit Element(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
  static Element basis(const Field& field, std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return coeffs_.size(); }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Scalar& s, const Element& a);
  friend bool operator==(const Element& a, const Element& b) { return a.coeffs_ == b.coeffs_; }

  /// "a*e1 + b*e2" style rendering with 1-based basis names.
  std::string render() const;

 private:
  std::vector<Scalar> coeffs_;
};

/// Dense n x n x n structure tensor, row-major in (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(const Field& field, std::size_t dim) : dim_(dim), data_(dim * dim * dim, Scalar::zero(field)) {}

  std::size_t dim() const noexcept { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Scalar>& flat() const noexcept { return data_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

/// Algebra given by structure constants: e_i e_j = sum_k mul(i,j,k) e_k.
struct Algebra {
  Field field;
  Tensor3 mul;

  std::size_t dim() const noexcept { return mul.dim(); }
  /// Throws dimension_error/field_error when the tensor is malformed.
  void validate() const;
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.field == b.field && a.mul == b.mul; }
};

/// Coalgebra given by structure constants: Delta(e_i) = sum_{j,k} comul(i,j,k) e_j (x) e_k.
struct Coalgebra {
  Field field;
  Tensor3 comul;

  std::size_t dim() const noexcept { return comul.dim(); }
  void validate() const;
  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.field == b.field && a.comul == b.comul;
  }
};

/// Algebra and coalgebra on the same space. Consistency between the two is a
/// property checked by the axiom engine, not an invariant of this type.
struct Bialgebra {
  Algebra algebra;
  Coalgebra coalgebra;

  std::size_t dim() const noexcept { return algebra.dim(); }
  const Field& field() const noexcept { return algebra.field; }
  void validate() const;
};

/// Element of A (x) A as a list of (coef, left, right) with at most one entry
/// per (left, right) pair, sorted by (left, right), zero entries dropped.
struct SweedlerTerm {
  Scalar coef;
  std::size_t left;
  std::size_t right;
  friend bool operator==(const SweedlerTerm& a, const SweedlerTerm& b) {
    return a.coef == b.coef && a.left == b.left && a.right == b.right;
  }
};
using SweedlerTerms = std::vector<SweedlerTerm>;

/// Square matrix of scalars, rows first.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(const Field& field, std::size_t n);
Matrix matrix_product(const Matrix& a, const Matrix& b);
/// Exact inverse by Gauss-Jordan elimination; throws division_by_zero when singular.
Matrix invert(const Matrix& g);

Element multiply(const Algebra& a, const Element& u, const Element& v);
Element basis_product(const Algebra& a, std::size_t i, std::size_t j);
SweedlerTerms comultiply(const Coalgebra& c, const Element& u);

/// comul(k, i, j) = mul(i, j, k): the coalgebra structure on the dual basis.
Coalgebra dualize(const Algebra& a);
/// Inverse transpose of dualize: mul(i, j, k) = comul(k, i, j).
Algebra codualize(const Coalgebra& c);
/// mul'(i, j, k) = mul(j, i, k).
Algebra opposite(const Algebra& a);

/// Basis change. The new basis vectors are the rows of g written in the old
/// basis: f_a = sum_i g[a][i] e_i. Acting by g and then by h equals acting by
/// h*g. Example: the trivial-quandle ring on (t1, t2) with
/// g = [[1, 0], [1, -1]] yields the basis (t, tau) = (t1, t1 - t2) and the table
/// t*t = t, t*tau = 0, tau*t = tau, tau*tau = 0.
Algebra change_basis(const Algebra& a, const Matrix& g);
Coalgebra change_basis(const Coalgebra& c, const Matrix& g);

/// Delta(e_i) = e_i (x) e_i.
Coalgebra group_like_coalgebra(const Field& field, std::size_t dim);

/// Builds an algebra/coalgebra from scalar-expression strings indexed [i][j][k].
Algebra make_algebra(const Field& field, const std::vector<std::vector<std::vector<std::string>>>& mul);
Coalgebra make_coalgebra(const Field& field, const std::vector<std::vector<std::vector<std::string>>>& comul);

}  // namespace sdb
