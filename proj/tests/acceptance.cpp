// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance        run all criteria
//   acceptance N      run criterion N only
//
// Exit status is 0 when every criterion that ran passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "sdb/axioms.hpp"
#include "sdb/classifier.hpp"
#include "sdb/errors.hpp"
#include "sdb/families.hpp"
#include "sdb/knot.hpp"
#include "sdb/quandle.hpp"

using namespace sdb;

namespace {

struct Result {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail.str("");
    if (!ok) detail << "; ";
    ok = false;
    detail << why;
  }
};

std::string render(const Tensor2& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

Tensor2 flat(const Coalgebra& c) { return finite::to_tensor2(finite::FpTensor::from_coalgebra(c)); }

// 1. Every associative unit-free dim-2 algebra over GF(2), GF(3) matches one of the five tables.
void criterion1(Result& r) {
  std::size_t tensors = 0;
  for (std::uint32_t p : {2u, 3u}) {
    std::set<Tensor2> cases;
    for (const auto& a : associative_nonunital_tables(Field::prime(p))) cases.insert(canonical_form(a));
    for (const auto& cls : enumerate_associative_nonunital(p)) {
      tensors += cls.members;
      if (!cases.count(cls.canonical)) r.fail("GF(" + std::to_string(p) + ") class " + render(cls.canonical) + " unmatched");
    }
  }
  if (r.ok) r.detail << tensors << " associative unit-free tensors, all in the five classes";
}

// 2. Duals of the five tables land on the corresponding types; types are coassociative and counit-free.
void criterion2(Result& r) {
  for (const auto& t : comultiplication_catalog(Field::prime(3))) {
    if (!check_coassociativity(t.coalgebra).verdict()) r.fail("type " + std::to_string(t.id) + " not coassociative");
    if (find_counit(t.coalgebra)) r.fail("type " + std::to_string(t.id) + " has a counit");
  }
  for (const auto& d : dualization_report(3)) {
    if (d.matches_expected()) continue;
    std::string got = d.matched_type ? "type " + std::to_string(*d.matched_type) : "no catalog type";
    r.fail("case " + std::to_string(d.algebra_case) + " dual " + render(flat(d.dual)) + " matches " + got +
           ", expected type " + std::to_string(d.expected_type));
  }
  if (r.ok) r.detail << "all five duals matched";
}

// 3. Families: symbolic consistency + SD + no counit, and at every admissible GF(2), GF(3), GF(5) point.
void criterion3(Result& r) {
  std::size_t points = 0;
  std::set<std::string> bad;
  for (const auto& f : family_catalog()) {
    const Bialgebra b = symbolic_bialgebra(f);
    if (!check_consistency(b).verdict()) bad.insert(f.label + " symbolic consistency");
    if (!check_sd_bialgebra(b).verdict()) bad.insert(f.label + " symbolic sd");
    if (find_counit(b.coalgebra)) bad.insert(f.label + " symbolic counit");
    for (std::uint32_t p : {2u, 3u, 5u}) {
      std::size_t failing = 0, total = 0;
      for (const auto& inst : admissible_instances(f, p)) {
        ++total;
        const bool good = check_consistency(inst.bialgebra).verdict() && check_sd_bialgebra(inst.bialgebra).verdict() &&
                          !find_counit(inst.bialgebra.coalgebra);
        failing += !good;
      }
      points += total;
      if (failing) bad.insert(f.label + " " + std::to_string(failing) + "/" + std::to_string(total) + " points over GF(" +
                              std::to_string(p) + ")");
    }
  }
  for (const auto& b : bad) r.fail(b);
  if (r.ok) r.detail << family_catalog().size() << " families, " << points << " points";
}

// 4. Type 5 over GF(2) complete and sound; types 1-4 over GF(2), GF(3) sound.
void criterion4(Result& r) {
  const AuditReport t5 = verify_family_completeness(5, 2);
  for (const auto& m : t5.missing_from_families) r.fail("type 5 GF(2) solution " + render(m) + " reached by no family");
  for (const auto& u : t5.unsound_instances) r.fail("type 5 GF(2) instance " + render(u) + " is not a solution");
  std::size_t discrepancies = 0;
  for (int t = 1; t <= 4; ++t)
    for (std::uint32_t p : {2u, 3u}) {
      const AuditReport a = verify_family_completeness(t, p);
      discrepancies += a.missing_from_families.size();
      if (!a.sound) {
        r.fail("type " + std::to_string(t) + " GF(" + std::to_string(p) + ") has " +
               std::to_string(a.unsound_instances.size()) + " unsound instances");
      }
    }
  if (r.ok) r.detail << "sound; " << discrepancies << " solutions outside the families listed in the goldens";
}

// 5. Over GF(3), pointwise SD implies cube-zero.
void criterion5(Result& r) {
  std::size_t sd = 0;
  for (std::uint64_t i = 0; i < finite::tensor2_count(3); ++i) {
    const Algebra a = finite::to_fp(finite::decode_tensor2(i, 3), 3).to_algebra();
    if (!check_sd_algebra_pointwise(a).verdict()) continue;
    ++sd;
    if (!check_cube_zero(a).verdict()) r.fail("tensor " + render(finite::decode_tensor2(i, 3)) + " is SD but not cube-zero");
  }
  if (r.ok) r.detail << sd << " of 6561 tensors are pointwise SD, all cube-zero";
}

// 6. Quandles of order <= 3 (from all Cayley tables) give counital SD bialgebras.
void criterion6(Result& r) {
  std::size_t quandles = 0;
  for (std::uint32_t n = 1; n <= 3; ++n) {
    std::vector<std::uint32_t> e(n * n, 0);
    while (true) {
      const CayleyTable t(n, e);
      if (is_quandle(t).verdict()) {
        ++quandles;
        for (const Field& f : {Field::prime(2), Field::prime(3), Field::rational()}) {
          const Bialgebra b{quandle_ring(t, f), group_like_coalgebra(f, n)};
          const auto eps = find_counit(b.coalgebra);
          const bool ones = eps && std::all_of(eps->begin(), eps->end(), [](const Scalar& v) { return v.is_one(); });
          if (!check_consistency(b).verdict() || !check_sd_bialgebra(b).verdict() || !ones)
            r.fail("order " + std::to_string(n) + " quandle over " + f.describe());
        }
      }
      std::size_t pos = e.size();
      while (pos > 0 && ++e[pos - 1] == n) e[--pos] = 0;
      if (pos == 0) break;
    }
  }
  if (r.ok) r.detail << quandles << " labelled quandles over GF(2), GF(3), Q";
}

bool trivial_of_order(const std::optional<CayleyTable>& t, std::size_t n) {
  return t && *t == trivial_quandle(n);
}

// 7. Idempotent quandles in the type-1 examples; no idempotents or rack carriers in type 5.
void criterion7(Result& r) {
  const Field f = Field::prime(5);
  auto table = [&](std::vector<std::vector<std::string>> prod) {
    std::vector<std::vector<std::vector<std::string>>> mul(2, std::vector<std::vector<std::string>>(2));
    for (std::size_t i = 0; i < 4; ++i) mul[i / 2][i % 2] = prod[i];
    return make_algebra(f, mul);
  };
  const IdempotentQuandleReport a = idempotent_quandle_report(table({{"1", "0"}, {"0", "0"}, {"0", "1"}, {"0", "0"}}));
  std::vector<Element> expected;
  for (long al = 0; al < 5; ++al) {
    Element u(f, 2);
    u[0] = Scalar::one(f);
    u[1] = Scalar::from_integer(f, al);
    expected.push_back(u);
  }
  if (a.nonzero != expected) r.fail("x^2 = x, yx = y: nonzero idempotents are not {x + ay}");
  if (!trivial_of_order(a.direct.table, 5)) r.fail("x^2 = x, yx = y: direct product is not T5");
  const IdempotentQuandleReport b = idempotent_quandle_report(table({{"1", "0"}, {"0", "1"}, {"1", "0"}, {"0", "1"}}));
  if (!trivial_of_order(b.opposite.table, 5)) r.fail("c = 1 family: opposite product is not T5");
  std::size_t points = 0;
  for (const auto& fam : family_catalog(5)) {
    std::size_t with_idem = 0, racks = 0, total = 0;
    for (const auto& inst : admissible_instances(fam, 5)) {
      ++total;
      with_idem += find_idempotents(inst.bialgebra.algebra).size() != 1;
      racks += is_rack_carrier(inst.bialgebra.algebra).verdict();
    }
    points += total;
    if (with_idem) r.fail(fam.label + ": " + std::to_string(with_idem) + "/" + std::to_string(total) + " points have a nonzero idempotent");
    if (racks) r.fail(fam.label + ": " + std::to_string(racks) + "/" + std::to_string(total) + " points carry a rack");
  }
  if (r.ok) r.detail << "T5 in both orientations; " << points << " type-5 points idempotent-free";
}

std::uint64_t brute(const PDCode& pd, const CayleyTable& q) {
  std::vector<std::array<int, 4>> x;
  for (const auto& c : pd.crossings) x.push_back({int(c[0]), int(c[1]), int(c[2]), int(c[3])});
  std::vector<std::vector<int>> t(q.order(), std::vector<int>(q.order()));
  for (std::size_t i = 0; i < q.order(); ++i)
    for (std::size_t j = 0; j < q.order(); ++j) t[i][j] = int(q(i, j));
  return oracle::colorings(x, t);
}

// 8. Knot coloring counts, each confirmed by brute force.
void criterion8(Result& r) {
  const PDCode trefoil{{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}};
  const PDCode eight{{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}};
  struct Case {
    std::string name;
    const PDCode* pd;
    CayleyTable q;
    std::uint64_t want;
  };
  std::vector<Case> cases = {{"trefoil/D3", &trefoil, dihedral_quandle(3), 9},
                             {"figure-eight/D3", &eight, dihedral_quandle(3), 3},
                             {"figure-eight/D5", &eight, dihedral_quandle(5), 25}};
  for (std::size_t n = 1; n <= 5; ++n) cases.push_back({"trefoil/T" + std::to_string(n), &trefoil, trivial_quandle(n), n});
  for (const auto& c : cases) {
    const std::uint64_t got = count_colorings(Diagram(*c.pd), c.q);
    const std::uint64_t oracle = brute(*c.pd, c.q);
    if (got != c.want || oracle != c.want)
      r.fail(c.name + ": got " + std::to_string(got) + ", oracle " + std::to_string(oracle) + ", want " + std::to_string(c.want));
  }
  if (r.ok) r.detail << cases.size() << " counts confirmed";
}

// 9. Library routines against naive reimplementations, >= 100 random cases each.
void criterion9(Result& r) {
  std::mt19937_64 rng(2024);
  auto rand = [&](std::uint32_t n) { return static_cast<std::uint32_t>(rng() % n); };
  auto tensor = [&](std::uint32_t p) {
    Tensor2 t{};
    for (auto& v : t) v = static_cast<std::uint8_t>(rand(p));
    return t;
  };
  const std::uint32_t primes[] = {2, 3, 5};
  std::size_t idem = 0, col = 0, sd = 0;
  for (int i = 0; i < 150; ++i) {
    const std::uint32_t p = primes[rand(3)];
    const Tensor2 t = tensor(p);
    const auto got = find_idempotents(finite::to_fp(t, p).to_algebra());
    const auto want = oracle::idempotents(oracle::from_flat(t), int(p));
    bool same = got.size() == want.size();
    for (std::size_t k = 0; same && k < got.size(); ++k) {
      const auto v = finite::from_element(got[k]);
      same = int(v[0]) == want[k][0] && int(v[1]) == want[k][1];
    }
    if (!same) r.fail("idempotents differ on " + render(t));
    ++idem;
  }
  std::vector<CayleyTable> qs;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& q : enumerate_quandles(n)) qs.push_back(q);
  qs.push_back(dihedral_quandle(5));
  for (int i = 0; i < 150; ++i) {
    const std::size_t crossings = rand(4);
    std::vector<std::uint32_t> slots;
    for (std::uint32_t l = 1; l <= 2 * crossings; ++l) slots.insert(slots.end(), {l, l});
    std::shuffle(slots.begin(), slots.end(), rng);
    PDCode pd;
    for (std::size_t c = 0; c < crossings; ++c) pd.crossings.push_back({slots[4 * c], slots[4 * c + 1], slots[4 * c + 2], slots[4 * c + 3]});
    const CayleyTable& q = qs[rand(static_cast<std::uint32_t>(qs.size()))];
    if (count_colorings(Diagram(pd), q) != brute(pd, q)) r.fail("colorings differ");
    ++col;
  }
  for (int t = 1; t <= 5; ++t)
    for (std::uint32_t p : {2u, 3u})
      if (enumerate_sd_multiplications(t, p) != oracle::sd_multiplications(t, int(p)))
        r.fail("sd multiplications differ for type " + std::to_string(t) + " GF(" + std::to_string(p) + ")");
  for (int i = 0; i < 150; ++i) {
    const int t = 1 + int(rand(5));
    const std::uint32_t p = 2 + rand(2);
    const Tensor2 x = tensor(p);
    const auto sols = enumerate_sd_multiplications(t, p);
    if (std::binary_search(sols.begin(), sols.end(), x) != oracle::sd_bialgebra_solution(oracle::from_flat(x), t, int(p)))
      r.fail("sd membership differs on " + render(x));
    ++sd;
  }
  if (r.ok) r.detail << idem << " idempotent, " << col << " coloring, " << sd << " sd-membership cases";
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Result&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "associative unit-free classification", 10, criterion1},
      {2, "dual coalgebras and comultiplication catalog", 1, criterion2},
      {3, "family soundness", 30, criterion3},
      {4, "completeness audit", 60, criterion4},
      {5, "pointwise SD implies cube-zero over GF(3)", 60, criterion5},
      {6, "quandle rings are counital SD bialgebras", 10, criterion6},
      {7, "idempotent quandles", 30, criterion7},
      {8, "knot coloring counts", 5, criterion8},
      {9, "oracle equivalence", 60, criterion9},
  };
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 9) {
      std::cerr << "usage: acceptance [1-9]\n";
      return 2;
    }
  }
  bool all_ok = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Result r;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) r.fail("took longer than the " + std::to_string(int(c.budget_s)) + " s budget");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (r.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << timing << "): " << r.detail.str()
              << "\n";
    all_ok = all_ok && r.ok;
  }
  return all_ok ? 0 : 1;
}
