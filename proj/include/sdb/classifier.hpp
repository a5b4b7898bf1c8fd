#pragma once

// Brute-force classification of dim-2 structures over small prime fields.
// Tensors are handled in the flattened Tensor2 form (entry (i,j,k) at 4i+2j+k).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdb/finite.hpp"
#include "sdb/tensor.hpp"

namespace sdb {

using finite::Tensor2;

enum class Exec { serial, parallel };

/// Invertible 2x2 matrix over GF(p), row-major (g00, g01, g10, g11).
using Mat2 = std::array<std::uint32_t, 4>;

/// All of GL2(p), in lexicographic order. Cached per p.
const std::vector<Mat2>& general_linear_group(std::uint32_t p);

/// Same conventions as change_basis on Algebra / Coalgebra.
Tensor2 act_algebra(const Tensor2& t, const Mat2& g, std::uint32_t p);
Tensor2 act_coalgebra(const Tensor2& t, const Mat2& g, std::uint32_t p);

/// Lexicographically smallest tensor in the orbit.
Tensor2 canonical_algebra(const Tensor2& t, std::uint32_t p);
Tensor2 canonical_coalgebra(const Tensor2& t, std::uint32_t p);
/// Dim-2 structures over a prime field <= 251.
Tensor2 canonical_form(const Algebra& a);
Tensor2 canonical_form(const Coalgebra& c);

std::size_t algebra_orbit_size(const Tensor2& t, std::uint32_t p);

struct CanonicalClass {
  Tensor2 canonical{};
  std::size_t orbit_size = 0;
  /// Smallest scanned tensor in the class.
  Tensor2 representative{};
  /// Number of scanned tensors in the class.
  std::size_t members = 0;
};

/// Associative dim-2 algebras with no two-sided unit, grouped by canonical
/// form, ordered by canonical tensor. p in {2, 3, 5}.
std::vector<CanonicalClass> enumerate_associative_nonunital(std::uint32_t p, Exec exec = Exec::parallel);

/// The five unit-free associative multiplication tables, cases 1..5.
std::vector<Algebra> associative_nonunital_tables(const Field& field);

struct ComultiplicationType {
  int id = 0;
  Coalgebra coalgebra;
};

/// The five comultiplication types 1..5 over `field`.
std::vector<ComultiplicationType> comultiplication_catalog(const Field& field);

/// Every multiplication (ascending index) consistent and self-distributive
/// with comultiplication type t. p in {2, 3, 5}.
std::vector<Tensor2> enumerate_sd_multiplications(int type, std::uint32_t p, Exec exec = Exec::parallel);

/// Multiplications over GF(p) whose whole carrier satisfies (uv)w = (uw)(vw).
std::vector<Tensor2> enumerate_sd_algebras(std::uint32_t p, Exec exec = Exec::parallel);

struct AuditReport {
  int type = 0;
  std::uint32_t p = 0;
  /// Every family instance lies in the solution set.
  bool sound = false;
  /// Solutions reached by no family instance.
  std::vector<Tensor2> missing_from_families;
  /// Family instances that are not solutions.
  std::vector<Tensor2> unsound_instances;
  /// Number of distinct tensors produced by the families.
  std::size_t family_instances = 0;
  std::size_t solutions = 0;
};

AuditReport verify_family_completeness(int type, std::uint32_t p, Exec exec = Exec::parallel);

struct DualizationCase {
  int algebra_case = 0;
  int expected_type = 0;
  Coalgebra dual;
  /// Catalog type in the same orbit, if any.
  std::optional<int> matched_type;
  /// Basis change carrying the dual onto the matched type.
  std::optional<Mat2> basis_change;
  bool matches_expected() const { return matched_type && *matched_type == expected_type; }
};

/// Dualizes cases 1..5 over GF(p) and locates each dual in the catalog.
/// Expected pairing: 1->2, 2->1, 3->3, 4->4, 5->5.
std::vector<DualizationCase> dualization_report(std::uint32_t p);

/// Throws input_error unless p is 2, 3 or 5.
void require_desk_prime(std::uint32_t p);

}  // namespace sdb
