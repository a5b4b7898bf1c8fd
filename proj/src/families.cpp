#include "sdb/families.hpp"

#include <array>

#include "sdb/errors.hpp"

namespace sdb {

namespace {

// Products xx, xy, yx, yy, each as (x coefficient, y coefficient).
// Leading minus signs bind to the atom, so -(c^2) is written explicitly.
using Row = std::array<const char*, 2>;
struct Spec {
  int type;
  const char* label;
  std::vector<std::string> vars;
  std::array<Row, 4> products;
  std::vector<const char*> nonzero;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> table = {
      {1, "t1-a", {}, {{{"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}}}, {}},
      {1, "t1-b", {"c"}, {{{"1", "0"}, {"0", "0"}, {"0", "c"}, {"0", "0"}}}, {}},
      {1, "t1-c", {}, {{{"1", "0"}, {"0", "1"}, {"0", "0"}, {"0", "0"}}}, {}},
      {1, "t1-d", {"c"}, {{{"1", "0"}, {"0", "1"}, {"c", "0"}, {"0", "c"}}}, {}},
      {1, "t1-e", {"c", "d"}, {{{"1", "0"}, {"0", "1"}, {"c", "-1"}, {"d", "0"}}}, {}},
      {1, "t1-f", {"d"}, {{{"1", "0"}, {"0", "1"}, {"0", "-1"}, {"d", "0"}}}, {}},
      {1, "t1-g", {"c"}, {{{"1", "0"}, {"0", "1"}, {"0", "c"}, {"0", "0"}}}, {}},
      {1, "t1-h", {"c"}, {{{"1", "0"}, {"c", "0"}, {"c", "0"}, {"c^2", "0"}}}, {}},
      {1, "t1-k", {"c"}, {{{"1", "0"}, {"c/2", "0"}, {"c", "-1"}, {"c^2/2", "-c/2"}}}, {}},
      {1,
       "t1-l",
       {"c1", "c2"},
       {{{"1", "0"}, {"0", "1"}, {"c1", "c2"}, {"-(c1^2*c2)/(1-c2)^2", "c1*(c2+1)/(1-c2)"}}},
       {"1-c2"}},
      {2, "t2-a", {}, {{{"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}}}, {}},
      {2, "t2-b", {"c"}, {{{"1", "0"}, {"0", "0"}, {"0", "c"}, {"0", "0"}}}, {}},
      {2, "t2-c", {"c"}, {{{"1", "0"}, {"c", "0"}, {"c", "0"}, {"c^2", "0"}}}, {}},
      {2, "t2-d", {"b", "c"}, {{{"1", "0"}, {"0", "b"}, {"0", "c"}, {"0", "0"}}}, {}},
      {2,
       "t2-e",
       {"c1", "c2"},
       {{{"1", "0"}, {"c1/(1-c2)", "0"}, {"c1", "c2"}, {"c1^2/(1-c2)", "c1*c2/(1-c2)"}}},
       {"1-c2"}},
      {3, "t3-i", {"b2"}, {{{"0", "0"}, {"0", "b2"}, {"0", "0"}, {"0", "0"}}}, {}},
      {3, "t3-ii", {"c2"}, {{{"1", "0"}, {"0", "0"}, {"0", "c2"}, {"0", "0"}}}, {}},
      {4, "t4-i", {"b"}, {{{"0", "0"}, {"0", "0"}, {"b", "0"}, {"0", "0"}}}, {}},
      {4, "t4-ii", {"c"}, {{{"0", "0"}, {"c", "0"}, {"0", "0"}, {"0", "1"}}}, {}},
      {5, "t5-a", {"c"}, {{{"0", "0"}, {"0", "0"}, {"c", "0"}, {"0", "0"}}}, {}},
      {5, "t5-b", {"b"}, {{{"0", "0"}, {"0", "b"}, {"0", "0"}, {"0", "0"}}}, {}},
      {5, "t5-c", {"c", "d"}, {{{"0", "0"}, {"0", "0"}, {"c", "0"}, {"d", "0"}}}, {"d"}},
      {5, "t5-d", {"d1", "d2"}, {{{"0", "0"}, {"-d2", "-(d2^2)/d1"}, {"0", "0"}, {"d1", "d2"}}}, {"d1"}},
      {5, "t5-e", {"a", "b1", "b2"}, {{{"a", "0"}, {"b1", "b2"}, {"0", "0"}, {"0", "0"}}}, {"a"}},
      {5, "t5-f", {"a1", "a2"}, {{{"a1", "a2"}, {"0", "0"}, {"-(a1^2)/a2", "-a1"}, {"0", "0"}}}, {"a2"}},
      {5,
       "t5-g",
       {"a1", "d1", "d2"},
       {{{"a1", "a1*d2/d1"}, {"-d2", "-(d2^2)/d1"}, {"-a1*d1/d2", "-a1"}, {"d1", "d2"}}},
       {"d1"}},
  };
  return table;
}

FamilyDescriptor build(const Spec& s) {
  const Field field = Field::params(s.vars);
  std::vector<std::vector<std::vector<std::string>>> mul(2, std::vector<std::vector<std::string>>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Row& r = s.products[2 * i + j];
      mul[i][j] = {r[0], r[1]};
    }
  FamilyDescriptor f{s.type, s.label, make_algebra(field, mul), {}};
  for (const char* text : s.nonzero) {
    const Scalar v = parse_scalar(text, field);
    f.nonzero.push_back(v.function().numerator());
  }
  return f;
}

}  // namespace

const std::vector<FamilyDescriptor>& family_catalog() {
  static const std::vector<FamilyDescriptor> catalog = [] {
    std::vector<FamilyDescriptor> out;
    for (const auto& s : specs()) out.push_back(build(s));
    return out;
  }();
  return catalog;
}

std::vector<FamilyDescriptor> family_catalog(int comul_type) {
  if (comul_type < 1 || comul_type > 5) throw input_error("comultiplication type must be 1..5");
  std::vector<FamilyDescriptor> out;
  for (const auto& f : family_catalog()) {
    if (f.comul_type == comul_type) out.push_back(f);
  }
  return out;
}

const FamilyDescriptor& find_family(const std::string& label) {
  for (const auto& f : family_catalog()) {
    if (f.label == label) return f;
  }
  throw input_error("unknown family '" + label + "'");
}

Coalgebra family_coalgebra(int comul_type, const Field& field) {
  Coalgebra c{field, Tensor3(field, 2)};
  const Scalar one = Scalar::one(field);
  switch (comul_type) {
    case 1:  // x -> x(x)x, y -> x(x)y
      c.comul(0, 0, 0) = one;
      c.comul(1, 0, 1) = one;
      break;
    case 2:  // x -> x(x)x, y -> y(x)x
      c.comul(0, 0, 0) = one;
      c.comul(1, 1, 0) = one;
      break;
    case 3:  // x -> x(x)x, y -> 0
      c.comul(0, 0, 0) = one;
      break;
    case 4:  // x -> 0, y -> y(x)y
      c.comul(1, 1, 1) = one;
      break;
    case 5:
      break;
    default:
      throw input_error("comultiplication type must be 1..5");
  }
  return c;
}

Bialgebra symbolic_bialgebra(const FamilyDescriptor& f) {
  return Bialgebra{f.mul, family_coalgebra(f.comul_type, f.field())};
}

Bialgebra instantiate_family(const FamilyDescriptor& f, const Assignment& point, const Field& target) {
  for (const auto& poly : f.nonzero) {
    if (evaluate(poly, f.parameters(), point, target).is_zero()) {
      throw input_error(f.label + ": parameters lie on the excluded locus " + poly.render(f.parameters()) + " = 0");
    }
  }
  Algebra a{target, Tensor3(target, 2)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) a.mul(i, j, k) = evaluate(f.mul.mul(i, j, k), point, target);
  return Bialgebra{std::move(a), family_coalgebra(f.comul_type, target)};
}

std::vector<FamilyInstance> admissible_instances(const FamilyDescriptor& f, std::uint32_t p) {
  const Field target = Field::prime(p);
  const auto& vars = f.parameters();
  std::vector<std::uint32_t> values(vars.size(), 0);
  std::vector<FamilyInstance> out;
  while (true) {
    Assignment point;
    for (std::size_t v = 0; v < vars.size(); ++v) point.emplace(vars[v], Scalar::from_integer(target, values[v]));
    try {
      Bialgebra b = instantiate_family(f, point, target);
      out.push_back({std::move(point), std::move(b)});
    } catch (const input_error&) {
    } catch (const pole_error&) {
    }
    std::size_t pos = vars.size();
    while (pos-- > 0) {
      if (++values[pos] < p) break;
      values[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace sdb
