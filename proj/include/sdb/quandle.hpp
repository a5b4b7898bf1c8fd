#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sdb/magma.hpp"
#include "sdb/report.hpp"
#include "sdb/tensor.hpp"

namespace sdb {

/// Quandle axioms: Q1 x*x = x, Q2 right translations are bijections, Q3
/// (x*y)*z = (x*z)*(y*z). Checked by full enumeration.
CheckReport is_quandle(const CayleyTable& t);
/// Q2 and Q3 only.
CheckReport is_rack(const CayleyTable& t);

/// x*y = x.
CayleyTable trivial_quandle(std::size_t n);
/// x*y = 2y - x mod n.
CayleyTable dihedral_quandle(std::size_t n);

/// Every labelled quandle structure on {0..n-1}, in lexicographic table order.
/// Columns are enumerated as permutations fixing the diagonal; n <= 5.
std::vector<CayleyTable> enumerate_quandles(std::size_t n);

/// k[Q]: basis Q, e_i e_j = e_{T(i,j)}.
Algebra quandle_ring(const CayleyTable& t, const Field& field);

/// Sum of coefficients.
Scalar augmentation(const Element& u);
/// The n-1 elements e_x - e_base for x != base.
std::vector<Element> augmentation_ideal_basis(const Field& field, std::size_t n, std::size_t basepoint);

struct SubsetMagma {
  std::optional<CayleyTable> table;
  /// First pair (indices into S) whose product leaves S, when not closed.
  std::optional<std::pair<std::size_t, std::size_t>> offending;
};

/// Restricts the product (or the opposite product a.b := b a) to the finite
/// set S. Table entries index into S. Throws input_error on repeated elements.
SubsetMagma subset_magma(const Algebra& a, const std::vector<Element>& s, bool use_opposite);

struct OrientationReport {
  bool closed = false;
  std::optional<CayleyTable> table;
  std::optional<std::pair<std::size_t, std::size_t>> offending;
  CheckReport quandle;
  CheckReport rack;
};

struct IdempotentQuandleReport {
  std::vector<Element> idempotents;
  std::vector<Element> nonzero;
  OrientationReport direct;
  OrientationReport opposite;
};

/// Finds all idempotents, then tests the nonzero ones for closure and the
/// quandle/rack axioms under both product orientations.
IdempotentQuandleReport idempotent_quandle_report(const Algebra& a);

}  // namespace sdb
