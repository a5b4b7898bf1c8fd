#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdb/polynomial.hpp"
#include "sdb/tensor.hpp"

namespace sdb {

/// Parametrised multiplication on the basis (x, y) = (e1, e2), attached to one
/// of the five comultiplication types. Labels read "t<type>-<item>".
struct FamilyDescriptor {
  int comul_type = 0;
  std::string label;
  Algebra mul;  // over Field::params(parameters)
  /// Polynomials in the parameters that must not vanish.
  std::vector<Polynomial> nonzero;

  const Field& field() const noexcept { return mul.field; }
  const std::vector<std::string>& parameters() const { return mul.field.vars(); }
};

/// Every family, in catalog order (type, then item).
const std::vector<FamilyDescriptor>& family_catalog();
std::vector<FamilyDescriptor> family_catalog(int comul_type);
const FamilyDescriptor& find_family(const std::string& label);

/// The comultiplication of the family's type over `field`.
Coalgebra family_coalgebra(int comul_type, const Field& field);

/// Symbolic bialgebra over the family's parameter field.
Bialgebra symbolic_bialgebra(const FamilyDescriptor& f);

/// Concrete bialgebra at a parameter point. Throws input_error on the excluded
/// locus and pole_error when a coefficient has a pole there.
Bialgebra instantiate_family(const FamilyDescriptor& f, const Assignment& point, const Field& target);

struct FamilyInstance {
  Assignment point;
  Bialgebra bialgebra;
};

/// All admissible points over GF(p), in lexicographic order of the parameter
/// values (first parameter most significant). Points on the excluded locus or
/// on a pole are skipped.
std::vector<FamilyInstance> admissible_instances(const FamilyDescriptor& f, std::uint32_t p);

}  // namespace sdb
