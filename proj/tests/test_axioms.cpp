#include <doctest.h>

#include "oracle.hpp"
#include "sdb/axioms.hpp"
#include "sdb/classifier.hpp"
#include "sdb/errors.hpp"
#include "sdb/families.hpp"
#include "sdb/quandle.hpp"
#include "support.hpp"

using namespace sdb;
using sdbtest::Gen;
using sdbtest::table2;
using sdbtest::vec;

namespace {

const Field Q = Field::rational();
const Field GF2 = Field::prime(2);
const Field GF3 = Field::prime(3);
const Field GF5 = Field::prime(5);

Coalgebra type(int id, const Field& f) { return family_coalgebra(id, f); }

Algebra case_table(int id, const Field& f) { return associative_nonunital_tables(f)[static_cast<std::size_t>(id - 1)]; }

// x*x = x, x*y = 0, y*x = y, y*y = 0.
Algebra idem_a(const Field& f) { return table2(f, {{"1", "0"}, {"0", "0"}, {"0", "1"}, {"0", "0"}}); }

}  // namespace

TEST_SUITE("associativity") {
  TEST_CASE("case 1 table") { CHECK(check_associativity(case_table(1, Q)).verdict()); }

  TEST_CASE("trivial quandle ring") { CHECK(check_associativity(quandle_ring(trivial_quandle(2), Q)).verdict()); }

  TEST_CASE("x^2 = y, xy = x over GF(3)") {
    // (xx)x = yx = 0 but x(xx) = xy = x.
    const Algebra a = table2(GF3, {{"0", "1"}, {"1", "0"}, {"0", "0"}, {"0", "0"}});
    const CheckReport r = check_associativity(a);
    REQUIRE_FALSE(r.verdict());
    const Witness& w = r.witnesses().front();
    CHECK(w.at == "(e1e1)e1 vs e1(e1e1)");
    CHECK(w.lhs == "0");
    CHECK(w.rhs == "e1");
  }
}

TEST_SUITE("coassociativity") {
  TEST_CASE("all five types") {
    for (int t = 1; t <= 5; ++t) CHECK(check_coassociativity(type(t, Q)).verdict());
  }

  TEST_CASE("x -> x(x)y, y -> 0") {
    // (Delta (x) id)Delta x = Delta x (x) y = x(x)y(x)y, (id (x) Delta)Delta x = x (x) Delta y = 0.
    Coalgebra c{Q, Tensor3(Q, 2)};
    c.comul(0, 0, 1) = Scalar::one(Q);
    const CheckReport r = check_coassociativity(c);
    REQUIRE_FALSE(r.verdict());
    CHECK(r.witnesses().front().at == "Delta on e1");
    CHECK(r.witnesses().front().lhs == "(1)*e1(x)e2(x)e2");
    CHECK(r.witnesses().front().rhs == "0");
  }

  TEST_CASE("zero comultiplication") { CHECK(check_coassociativity(type(5, Q)).verdict()); }
}

TEST_SUITE("counit") {
  TEST_CASE("group-like") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto eps = find_counit(group_like_coalgebra(Q, n));
      REQUIRE(eps);
      for (const auto& v : *eps) CHECK(v.is_one());
    }
  }

  TEST_CASE("none for the five types") {
    for (const Field& f : {Q, GF2, GF3, GF5}) {
      for (int t = 1; t <= 5; ++t) CHECK_FALSE(find_counit(type(t, f)));
    }
  }
}

TEST_SUITE("unit") {
  TEST_CASE("case 3 has none") { CHECK_FALSE(find_unit(case_table(3, Q))); }

  TEST_CASE("trivial quandle ring has none") {
    const Algebra a = quandle_ring(trivial_quandle(2), GF3);
    CHECK_FALSE(find_unit(a));
    // Enumeration over the 9 candidates: t1 is a right unit only.
    int two_sided = 0, right = 0;
    for (long u1 = 0; u1 < 3; ++u1)
      for (long u2 = 0; u2 < 3; ++u2) {
        const Element u = vec(GF3, {std::to_string(u1), std::to_string(u2)});
        bool r_ok = true, l_ok = true;
        for (std::size_t i = 0; i < 2; ++i) {
          const Element e = Element::basis(GF3, 2, i);
          r_ok = r_ok && multiply(a, e, u) == e;
          l_ok = l_ok && multiply(a, u, e) == e;
        }
        right += r_ok;
        two_sided += r_ok && l_ok;
      }
    CHECK(two_sided == 0);
    CHECK(right > 0);
  }

  TEST_CASE("dim 1 idempotent") {
    const Algebra a = make_algebra(Q, {{{"1"}}});
    const auto u = find_unit(a);
    REQUIRE(u);
    CHECK(*u == Element::basis(Q, 1, 0));
  }

  TEST_CASE("product of two fields") {
    const Algebra a = table2(Q, {{"1", "0"}, {"0", "0"}, {"0", "0"}, {"0", "1"}});
    CHECK(find_unit(a) == vec(Q, {"1", "1"}));
  }
}

TEST_SUITE("cocommutativity") {
  TEST_CASE("group-like") { CHECK(check_cocommutativity(group_like_coalgebra(Q, 3)).verdict()); }
  TEST_CASE("type 1 fails at y") {
    const CheckReport r = check_cocommutativity(type(1, Q));
    REQUIRE(r.witnesses().size() == 1);
    CHECK(r.witnesses().front().at == "flip on e2");
  }
  TEST_CASE("zero") { CHECK(check_cocommutativity(type(5, Q)).verdict()); }
}

TEST_SUITE("consistency") {
  TEST_CASE("type 1 with x^2 = x, xy = y, yx = cx, y^2 = cy for all c") {
    const Field f = Field::params({"c"});
    const Algebra a = table2(f, {{"1", "0"}, {"0", "1"}, {"c", "0"}, {"0", "c"}});
    CHECK(check_consistency({a, type(1, f)}).verdict());
  }

  TEST_CASE("type 1 with x^2 = x + y") {
    const Algebra a = table2(Q, {{"1", "1"}, {"0", "0"}, {"0", "0"}, {"0", "0"}});
    CHECK_FALSE(check_consistency({a, type(1, Q)}).verdict());
  }

  TEST_CASE("zero comultiplication is always consistent") {
    Gen g(41);
    for (int r = 0; r < 20; ++r) CHECK(check_consistency({Algebra{Q, g.tensor(Q, 2)}, type(5, Q)}).verdict());
  }
}

TEST_SUITE("sd bialgebra") {
  TEST_CASE("type 1 with x^2 = x, xy = x over GF(3)") {
    const Algebra a = table2(GF3, {{"1", "0"}, {"1", "0"}, {"0", "0"}, {"0", "0"}});
    const CheckReport r = check_sd_bialgebra({a, type(1, GF3)});
    REQUIRE_FALSE(r.verdict());
    // (x y) y = x y = x, while Delta y = x(x)y gives (x x)(y y) = 0.
    bool found = false;
    for (const auto& w : r.witnesses()) found = found || (w.at == "(e1e2)e2" && w.lhs == "e1" && w.rhs == "0");
    CHECK(found);
  }

  TEST_CASE("quandle rings with group-like comultiplication") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& q : enumerate_quandles(n))
        for (const Field& f : {Q, GF2, GF3}) {
          const Bialgebra b{quandle_ring(q, f), group_like_coalgebra(f, n)};
          CHECK(check_sd_bialgebra(b).verdict());
        }
  }

  TEST_CASE("zero comultiplication reduces to cube-zero") {
    for (std::uint32_t p : {2u, 3u}) {
      const Field f = Field::prime(p);
      const Coalgebra zero = type(5, f);
      for (std::uint64_t i = 0; i < finite::tensor2_count(p); ++i) {
        const Algebra a = finite::to_fp(finite::decode_tensor2(i, p), p).to_algebra();
        CHECK(check_sd_bialgebra({a, zero}).verdict() == check_cube_zero(a).verdict());
      }
    }
  }
}

TEST_SUITE("pointwise sd algebra") {
  TEST_CASE("zero algebra") { CHECK(check_sd_algebra_pointwise(Algebra{GF5, Tensor3(GF5, 2)}).verdict()); }

  TEST_CASE("trivial quandle ring over GF(2)") {
    CHECK(check_sd_algebra_pointwise(quandle_ring(trivial_quandle(2), GF2)).verdict());
  }

  TEST_CASE("idempotent algebra over GF(5) fails with an element witness") {
    const Algebra a = idem_a(GF5);
    const CheckReport r = check_sd_algebra_pointwise(a);
    REQUIRE_FALSE(r.verdict());
    CHECK(r.witnesses().front().lhs != r.witnesses().front().rhs);
    CHECK(check_sd_bialgebra({a, type(1, GF5)}).verdict());
  }

  TEST_CASE("non-enumerable fields are rejected") {
    CHECK_THROWS_AS(check_sd_algebra_pointwise(idem_a(Q)), unsupported_field);
    CHECK_THROWS_AS(find_idempotents(idem_a(Q)), unsupported_field);
    CHECK_THROWS_AS(is_rack_carrier(idem_a(Q)), unsupported_field);
  }

  TEST_CASE("sd algebras are right-nilpotent over GF(3): exhaustive") {
    std::size_t sd = 0;
    for (std::uint64_t i = 0; i < finite::tensor2_count(3); ++i) {
      const auto m = finite::to_fp(finite::decode_tensor2(i, 3), 3);
      if (finite::serial::first_sd_violation(finite::carrier_table(m))) continue;
      ++sd;
      CHECK(finite::cube_zero(m));
    }
    CHECK(sd > 1);
  }

  TEST_CASE("sd algebras are right-nilpotent over GF(5): random sample") {
    Gen g(101);
    std::size_t sd = 0;
    for (int r = 0; r < 100000; ++r) {
      finite::Tensor2 t{};
      for (auto& v : t) v = static_cast<std::uint8_t>(g.integer(0, 4));
      const auto m = finite::to_fp(t, 5);
      if (finite::serial::first_sd_violation(finite::carrier_table(m))) continue;
      ++sd;
      CHECK(finite::cube_zero(m));
    }
    MESSAGE("pointwise self-distributive samples: " << sd);
  }
}

TEST_SUITE("cube zero") {
  TEST_CASE("case 1 fails") {
    const CheckReport r = check_cube_zero(case_table(1, Q));
    REQUIRE_FALSE(r.verdict());
    CHECK(r.witnesses().front().at == "(e1e1)e1");
  }
  TEST_CASE("zero algebra") { CHECK(check_cube_zero(case_table(5, Q)).verdict()); }
}

TEST_SUITE("idempotents") {
  TEST_CASE("idempotent algebra over GF(3)") {
    const auto ids = find_idempotents(idem_a(GF3));
    const std::vector<Element> expected = {vec(GF3, {"0", "0"}), vec(GF3, {"1", "0"}), vec(GF3, {"1", "1"}),
                                           vec(GF3, {"1", "2"})};
    CHECK(ids == expected);
  }

  TEST_CASE("trivial quandle ring over GF(2) contains the basis") {
    const auto ids = find_idempotents(quandle_ring(trivial_quandle(2), GF2));
    CHECK(std::find(ids.begin(), ids.end(), vec(GF2, {"1", "0"})) != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), vec(GF2, {"0", "1"})) != ids.end());
  }

  TEST_CASE("matches the naive scan") {
    Gen g(43);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (int r = 0; r < 40; ++r) {
        finite::Tensor2 t{};
        for (auto& v : t) v = static_cast<std::uint8_t>(g.integer(0, p - 1));
        const Algebra a = finite::to_fp(t, p).to_algebra();
        const auto ids = find_idempotents(a);
        const auto naive = oracle::idempotents(oracle::from_flat(t), static_cast<int>(p));
        REQUIRE(ids.size() == naive.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
          CHECK(multiply(a, ids[i], ids[i]) == ids[i]);
          CHECK(ids[i] == vec(a.field, {std::to_string(naive[i][0]), std::to_string(naive[i][1])}));
        }
      }
    }
  }
}

TEST_SUITE("idempotent families") {
  TEST_CASE("x + alpha y") {
    const Field f = Field::params({"alpha"});
    CHECK(verify_idempotent_family(idem_a(f), vec(f, {"1", "alpha"})).verdict());
  }

  TEST_CASE("(1 - alpha c) x + alpha y") {
    const Field f = Field::params({"alpha", "c"});
    const Algebra a = table2(f, {{"1", "0"}, {"0", "1"}, {"c", "0"}, {"0", "c"}});
    CHECK(verify_idempotent_family(a, vec(f, {"1 - alpha*c", "alpha"})).verdict());
  }

  TEST_CASE("alpha y is not idempotent") {
    const Field f = Field::params({"alpha"});
    const CheckReport r = verify_idempotent_family(idem_a(f), vec(f, {"0", "alpha"}));
    REQUIRE(r.witnesses().size() == 1);
    CHECK(r.witnesses().front().at == "coordinate e2 of u*u - u");
    CHECK(r.witnesses().front().lhs == "-alpha");
  }
}

TEST_SUITE("rack carrier") {
  TEST_CASE("zero algebra over GF(5)") { CHECK_FALSE(is_rack_carrier(Algebra{GF5, Tensor3(GF5, 2)}).verdict()); }
  TEST_CASE("dim 1 idempotent over GF(3)") {
    // Right translation by 0 is constant.
    CHECK_FALSE(is_rack_carrier(make_algebra(GF3, {{{"1"}}})).verdict());
  }
}

TEST_SUITE("engine agreement") {
  TEST_CASE("scalar engine and finite kernels agree") {
    Gen g(47);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const Field f = Field::prime(p);
      for (int r = 0; r < 150; ++r) {
        finite::Tensor2 t{};
        for (auto& v : t) v = static_cast<std::uint8_t>(g.integer(0, p - 1));
        const auto m = finite::to_fp(t, p);
        const Algebra a = m.to_algebra();
        CHECK(check_associativity(a).verdict() == finite::associative(m));
        CHECK(check_cube_zero(a).verdict() == finite::cube_zero(m));
        CHECK(find_unit(a).has_value() == finite::has_unit(m));
        const int id = static_cast<int>(g.integer(1, 5));
        const Coalgebra c = type(id, f);
        const auto cm = finite::FpTensor::from_coalgebra(c);
        CHECK(check_consistency({a, c}).verdict() == finite::consistent(m, cm));
        CHECK(check_sd_bialgebra({a, c}).verdict() == finite::sd_bialgebra(m, cm));
        CHECK(finite::serial::first_sd_violation(finite::carrier_table(m)) ==
              finite::parallel::first_sd_violation(finite::carrier_table(m)));
      }
    }
  }
}

TEST_SUITE("solve_linear") {
  TEST_CASE("recovers a planted solution") {
    Gen g(53);
    for (int r = 0; r < 30; ++r) {
      const std::size_t rows = 4, cols = 3;
      std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols));
      std::vector<Scalar> x(cols), rhs(rows, Scalar::zero(Q));
      for (auto& v : x) v = g.rational(Q);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          m[i][j] = g.rational(Q);
          rhs[i] += m[i][j] * x[j];
        }
      const auto sol = solve_linear(m, rhs, Q);
      REQUIRE(sol);
      for (std::size_t i = 0; i < rows; ++i) {
        Scalar acc = Scalar::zero(Q);
        for (std::size_t j = 0; j < cols; ++j) acc += m[i][j] * (*sol)[j];
        CHECK(acc == rhs[i]);
      }
    }
  }

  TEST_CASE("inconsistent system") {
    const Scalar one = Scalar::one(Q), zero = Scalar::zero(Q);
    CHECK_FALSE(solve_linear({{one, one}, {one, one}}, {one, zero}, Q));
  }
}
