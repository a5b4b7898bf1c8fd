#include <doctest.h>

#include "sdb/axioms.hpp"
#include "sdb/classifier.hpp"
#include "sdb/errors.hpp"
#include "sdb/quandle.hpp"
#include "support.hpp"

using namespace sdb;
using sdbtest::Gen;
using sdbtest::table2;
using sdbtest::vec;

namespace {

Matrix mat(const Field& f, std::vector<std::vector<std::string>> rows) {
  Matrix m;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (const auto& s : r) row.push_back(parse_scalar(s, f));
    m.push_back(std::move(row));
  }
  return m;
}

Matrix from_mat2(const Field& f, const Mat2& g) {
  return {{Scalar::from_integer(f, static_cast<long>(g[0])), Scalar::from_integer(f, static_cast<long>(g[1]))},
          {Scalar::from_integer(f, static_cast<long>(g[2])), Scalar::from_integer(f, static_cast<long>(g[3]))}};
}

SweedlerTerms terms(const Field& f, std::vector<std::tuple<long, std::size_t, std::size_t>> xs) {
  SweedlerTerms out;
  for (auto [c, l, r] : xs) out.push_back({Scalar::from_integer(f, c), l, r});
  return out;
}

}  // namespace

TEST_SUITE("multiply") {
  TEST_CASE("trivial quandle ring in the basis (t, tau)") {
    const Field q = Field::rational();
    const Algebra t2 = quandle_ring(trivial_quandle(2), q);
    const Algebra a = change_basis(t2, mat(q, {{"1", "0"}, {"1", "-1"}}));
    const Element t = Element::basis(q, 2, 0), tau = Element::basis(q, 2, 1);
    CHECK(multiply(a, t, t) == t);
    CHECK(multiply(a, t, tau).is_zero());
    CHECK(multiply(a, tau, t) == tau);
    CHECK(multiply(a, tau, tau).is_zero());
    // The same products computed in the original basis.
    const Element tt = vec(q, {"1", "0"}), tt2 = vec(q, {"1", "-1"});
    CHECK(multiply(t2, tt, tt2).is_zero());
    CHECK(multiply(t2, tt2, tt) == tt2);
  }

  TEST_CASE("zero annihilates") {
    Gen g(3);
    const Field f = Field::prime(7);
    const Algebra a{f, g.tensor(f, 3)};
    CHECK(multiply(a, Element(f, 3), g.element(f, 3)).is_zero());
  }

  TEST_CASE("(x + alpha y)(x + beta y) = x + alpha y") {
    // Expanding by hand: x*x = x, x*y = 0, y*x = y, y*y = 0.
    const Field f = Field::params({"alpha", "beta"});
    const Algebra a = table2(f, {{"1", "0"}, {"0", "0"}, {"0", "1"}, {"0", "0"}});
    CHECK(multiply(a, vec(f, {"1", "alpha"}), vec(f, {"1", "beta"})) == vec(f, {"1", "alpha"}));
  }

  TEST_CASE("dimension and field mismatch") {
    const Field f = Field::prime(3);
    const Algebra a{f, Tensor3(f, 2)};
    CHECK_THROWS_AS(multiply(a, Element(f, 3), Element(f, 2)), dimension_error);
    CHECK_THROWS_AS(multiply(a, Element(Field::prime(5), 2), Element(f, 2)), field_error);
  }
}

TEST_SUITE("comultiply") {
  const Field q = Field::rational();
  const Coalgebra type1 = comultiplication_catalog(q)[0].coalgebra;

  TEST_CASE("type 1 on y") { CHECK(comultiply(type1, vec(q, {"0", "1"})) == terms(q, {{1, 0, 1}})); }
  TEST_CASE("zero has no terms") { CHECK(comultiply(type1, Element(q, 2)).empty()); }
  TEST_CASE("type 1 on x + y") {
    CHECK(comultiply(type1, vec(q, {"1", "1"})) == terms(q, {{1, 0, 0}, {1, 0, 1}}));
  }
  TEST_CASE("coefficients combine per pair") {
    const Coalgebra gl = group_like_coalgebra(q, 2);
    CHECK(comultiply(gl, vec(q, {"2", "-3"})) == terms(q, {{2, 0, 0}, {-3, 1, 1}}));
  }
}

TEST_SUITE("dualize") {
  const Field q = Field::rational();
  const auto cases = associative_nonunital_tables(q);

  TEST_CASE("case 1 dualizes to f1 -> f1(x)f1, f2 -> f2(x)f1") {
    const Coalgebra c = dualize(cases[0]);
    CHECK(comultiply(c, Element::basis(q, 2, 0)) == terms(q, {{1, 0, 0}}));
    CHECK(comultiply(c, Element::basis(q, 2, 1)) == terms(q, {{1, 1, 0}}));
  }

  TEST_CASE("case 4 dualizes to f1 -> 0, f2 -> f1(x)f1") {
    const Coalgebra c = dualize(cases[3]);
    CHECK(comultiply(c, Element::basis(q, 2, 0)).empty());
    CHECK(comultiply(c, Element::basis(q, 2, 1)) == terms(q, {{1, 0, 0}}));
    // Swapping the basis vectors gives f1 -> f2(x)f2, f2 -> 0.
    const Coalgebra swapped = change_basis(c, mat(q, {{"0", "1"}, {"1", "0"}}));
    CHECK(comultiply(swapped, Element::basis(q, 2, 0)) == terms(q, {{1, 1, 1}}));
    CHECK(comultiply(swapped, Element::basis(q, 2, 1)).empty());
  }

  TEST_CASE("zero algebra") {
    const Coalgebra c = dualize(cases[4]);
    CHECK(c.comul == Tensor3(q, 2));
  }

  TEST_CASE("round trip") {
    Gen g(5);
    for (const Field& f : {Field::rational(), Field::prime(3)}) {
      for (int r = 0; r < 20; ++r) {
        const Algebra a{f, g.tensor(f, 3)};
        CHECK(codualize(dualize(a)) == a);
        const Coalgebra c{f, g.tensor(f, 2)};
        CHECK(dualize(codualize(c)) == c);
      }
    }
  }
}

TEST_SUITE("opposite") {
  const Field q = Field::rational();
  const auto cases = associative_nonunital_tables(q);

  TEST_CASE("involution") {
    Gen g(7);
    const Algebra a{q, g.tensor(q, 3)};
    CHECK(opposite(opposite(a)) == a);
  }
  TEST_CASE("case 1 and case 2 are opposite") { CHECK(opposite(cases[0]) == cases[1]); }
  TEST_CASE("commutative case 4 is fixed") { CHECK(opposite(cases[3]) == cases[3]); }
}

TEST_SUITE("change_basis") {
  TEST_CASE("identity") {
    Gen g(11);
    const Field f = Field::prime(5);
    const Algebra a{f, g.tensor(f, 2)};
    const Coalgebra c{f, g.tensor(f, 2)};
    CHECK(change_basis(a, identity_matrix(f, 2)) == a);
    CHECK(change_basis(c, identity_matrix(f, 2)) == c);
  }

  TEST_CASE("singular matrix") {
    const Field q = Field::rational();
    CHECK_THROWS_AS(change_basis(Algebra{q, Tensor3(q, 2)}, mat(q, {{"1", "2"}, {"2", "4"}})), division_by_zero);
  }

  TEST_CASE("rescaling e2 in case 4 stays in the orbit") {
    const Field f = Field::prime(3);
    const Algebra a = associative_nonunital_tables(f)[3];
    const Algebra b = change_basis(a, mat(f, {{"1", "0"}, {"0", "2"}}));
    CHECK_FALSE(a == b);
    CHECK(canonical_form(a) == canonical_form(b));
  }

  TEST_CASE("group action") {
    Gen g(13);
    for (const Field& f : {Field::rational(), Field::prime(3)}) {
      for (int r = 0; r < 25; ++r) {
        const Matrix x = g.invertible(f, 2), y = g.invertible(f, 2);
        const Algebra a{f, g.tensor(f, 2)};
        const Coalgebra c{f, g.tensor(f, 2)};
        CHECK(change_basis(change_basis(a, x), y) == change_basis(a, matrix_product(y, x)));
        CHECK(change_basis(change_basis(c, x), y) == change_basis(c, matrix_product(y, x)));
      }
    }
  }

  TEST_CASE("matches the finite-field kernel") {
    Gen g(19);
    const std::uint32_t p = 3;
    const Field f = Field::prime(p);
    for (int r = 0; r < 50; ++r) {
      const Algebra a{f, g.tensor(f, 2)};
      const Coalgebra c{f, g.tensor(f, 2)};
      const auto& group = general_linear_group(p);
      const Mat2 m = group[g.index(group.size())];
      const auto t2 = [](const auto& s) { return finite::to_tensor2(finite::FpTensor::from_algebra(s)); };
      CHECK(t2(change_basis(a, from_mat2(f, m))) == act_algebra(t2(a), m, p));
      CHECK(finite::to_tensor2(finite::FpTensor::from_coalgebra(change_basis(c, from_mat2(f, m)))) ==
            act_coalgebra(finite::to_tensor2(finite::FpTensor::from_coalgebra(c)), m, p));
    }
  }

  TEST_CASE("verdicts are basis independent") {
    for (std::uint32_t p : {2u, 3u}) {
      const Field f = Field::prime(p);
      const auto algebras = associative_nonunital_tables(f);
      const auto types = comultiplication_catalog(f);
      for (const auto& m : general_linear_group(p)) {
        const Matrix g = from_mat2(f, m);
        for (const auto& a : algebras) {
          CHECK(check_associativity(change_basis(a, g)).verdict());
          for (const auto& t : types) {
            const Bialgebra b{a, t.coalgebra};
            const Bialgebra moved{change_basis(a, g), change_basis(t.coalgebra, g)};
            CHECK(check_consistency(moved).verdict() == check_consistency(b).verdict());
            CHECK(check_sd_bialgebra(moved).verdict() == check_sd_bialgebra(b).verdict());
          }
        }
        for (const auto& t : types) CHECK(check_coassociativity(change_basis(t.coalgebra, g)).verdict());
      }
    }
  }
}

TEST_SUITE("linearity") {
  TEST_CASE("multiply is bilinear and comultiply is linear") {
    Gen g(31);
    for (const Field& f : {Field::rational(), Field::prime(5), Field::params({"a"})}) {
      const Algebra a{f, g.tensor(f, 2)};
      const Coalgebra c{f, g.tensor(f, 2)};
      for (int r = 0; r < 20; ++r) {
        const Element u = g.element(f, 2), v = g.element(f, 2), w = g.element(f, 2);
        const Scalar s = g.scalar(f);
        CHECK(multiply(a, s * u + v, w) == s * multiply(a, u, w) + multiply(a, v, w));
        CHECK(multiply(a, w, s * u + v) == s * multiply(a, w, u) + multiply(a, w, v));
        // Linearity of Delta, compared coefficientwise.
        const auto grid = [&](const Element& x) {
          std::vector<Scalar> out(4, Scalar::zero(f));
          for (const auto& t : comultiply(c, x)) out[2 * t.left + t.right] = t.coef;
          return out;
        };
        const auto lhs = grid(s * u + v);
        const auto gu = grid(u), gv = grid(v);
        for (std::size_t k = 0; k < 4; ++k) CHECK(lhs[k] == s * gu[k] + gv[k]);
      }
    }
  }
}

TEST_SUITE("group_like_coalgebra") {
  TEST_CASE("dim 1 and dim 2") {
    const Field q = Field::rational();
    CHECK(comultiply(group_like_coalgebra(q, 1), Element::basis(q, 1, 0)) == terms(q, {{1, 0, 0}}));
    const Coalgebra c = group_like_coalgebra(q, 2);
    CHECK(comultiply(c, Element::basis(q, 2, 1)) == terms(q, {{1, 1, 1}}));
  }
  TEST_CASE("paired with the trivial quandle ring") {
    const Field q = Field::rational();
    const Bialgebra b{quandle_ring(trivial_quandle(2), q), group_like_coalgebra(q, 2)};
    CHECK(check_consistency(b).verdict());
  }
}

TEST_SUITE("make_algebra") {
  TEST_CASE("shape and parse errors") {
    const Field q = Field::rational();
    CHECK_THROWS_AS(make_algebra(q, {{{"1"}}, {{"0"}}}), dimension_error);
    CHECK_THROWS_AS(make_algebra(q, {{{"1+"}}}), parse_error);
  }
}
