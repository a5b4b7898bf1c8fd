#pragma once

#include <optional>
#include <vector>

#include "sdb/report.hpp"
#include "sdb/tensor.hpp"

namespace sdb {

// Multilinear identities are checked on basis tuples only, which is enough
// because both sides are linear in every argument. The pointwise
// self-distributive identity (uv)w = (uw)(vw) is quadratic in w, so it is
// checked on every element triple and therefore needs a finite field.
//
// Convention: juxtaposition is the algebra product mul, and the bialgebra
// self-distributive identity reads (a b) c = sum (a c1)(b c2) with
// Delta(c) = sum c1 (x) c2.

/// (e_i e_j) e_k = e_i (e_j e_k) for all basis triples.
CheckReport check_associativity(const Algebra& a);

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every basis vector.
CheckReport check_coassociativity(const Coalgebra& c);

/// tau o Delta = Delta on every basis vector.
CheckReport check_cocommutativity(const Coalgebra& c);

/// Solves (eps (x) id) Delta = id = (id (x) eps) Delta. Returns a counit if one
/// exists over c.field.
std::optional<std::vector<Scalar>> find_counit(const Coalgebra& c);

/// Two-sided unit, found by solving the linear system u e_i = e_i = e_i u.
std::optional<Element> find_unit(const Algebra& a);

/// Delta(e_i e_j) = Delta(e_i) Delta(e_j) with the componentwise product on A (x) A.
CheckReport check_consistency(const Bialgebra& b);

/// (e_i e_j) e_k = sum (e_i c1)(e_j c2) where Delta(e_k) = sum c1 (x) c2.
CheckReport check_sd_bialgebra(const Bialgebra& b);

/// (uv)w = (uw)(vw) for every element triple. Prime fields only; throws
/// unsupported_field otherwise.
CheckReport check_sd_algebra_pointwise(const Algebra& a);

/// (e_i e_j) e_k = 0 for all basis triples.
CheckReport check_cube_zero(const Algebra& a);

/// Every u with u u = u (including 0), in ascending element-code order.
/// Prime fields only.
std::vector<Element> find_idempotents(const Algebra& a);

/// Checks u u = u identically for a parametrised element. Witnesses carry the
/// residual u u - u coordinate by coordinate.
CheckReport verify_idempotent_family(const Algebra& a, const Element& family);

/// Treats the whole carrier GF(p)^n with the algebra product as a magma and
/// checks the rack axioms (bijective right translations, right
/// self-distributivity). Prime fields only.
CheckReport is_rack_carrier(const Algebra& a);

/// Solves the linear system m * x = rhs exactly using fraction-free
/// elimination. Returns one solution (free variables set to zero) or nullopt.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& m,
                                                const std::vector<Scalar>& rhs, const Field& field);

}  // namespace sdb
