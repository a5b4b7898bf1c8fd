#include "sdb/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "sdb/errors.hpp"
#include "sdb/families.hpp"

namespace sdb {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1;
  for (std::uint32_t e = p - 2, b = a % p; e; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

Mat2 inverse(const Mat2& g, std::uint32_t p) {
  const std::uint32_t det = (g[0] * g[3] + p * p - g[1] * g[2] % p) % p;
  const std::uint32_t d = inv_mod(det, p);
  return {g[3] * d % p, (p - g[1]) % p * d % p, (p - g[2]) % p * d % p, g[0] * d % p};
}

std::uint32_t at(const Mat2& m, std::size_t r, std::size_t c) { return m[2 * r + c]; }

template <class Scan>
std::vector<std::uint64_t> scan(Exec exec, std::uint32_t p, Scan&& pred) {
  return exec == Exec::serial ? finite::serial::scan_tensors2(p, pred) : finite::parallel::scan_tensors2(p, pred);
}

Tensor2 tensor2_of(const Algebra& a) { return finite::to_tensor2(finite::FpTensor::from_algebra(a)); }
Tensor2 tensor2_of(const Coalgebra& c) { return finite::to_tensor2(finite::FpTensor::from_coalgebra(c)); }

std::uint32_t field_prime(const Field& f) {
  if (!f.is_prime()) throw unsupported_field("canonical forms need a prime field, got " + f.describe());
  return static_cast<std::uint32_t>(f.characteristic());
}

}  // namespace

void require_desk_prime(std::uint32_t p) {
  if (p != 2 && p != 3 && p != 5) throw input_error("p must be 2, 3 or 5, got " + std::to_string(p));
}

const std::vector<Mat2>& general_linear_group(std::uint32_t p) {
  static std::mutex lock;
  static std::map<std::uint32_t, std::vector<Mat2>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& group = cache[p];
  if (group.empty()) {
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c)
          for (std::uint32_t d = 0; d < p; ++d) {
            if ((a * d + p * p - b * c % p) % p != 0) group.push_back({a, b, c, d});
          }
  }
  return group;
}

Tensor2 act_algebra(const Tensor2& t, const Mat2& g, std::uint32_t p) {
  const Mat2 h = inverse(g, p);
  Tensor2 out{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        std::uint32_t sum = 0;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
              sum += at(g, a, i) * at(g, b, j) % p * t[4 * i + 2 * j + k] % p * at(h, k, c) % p;
            }
        out[4 * a + 2 * b + c] = static_cast<std::uint8_t>(sum % p);
      }
  return out;
}

Tensor2 act_coalgebra(const Tensor2& t, const Mat2& g, std::uint32_t p) {
  const Mat2 h = inverse(g, p);
  Tensor2 out{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        std::uint32_t sum = 0;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
              sum += at(g, a, i) * t[4 * i + 2 * j + k] % p * at(h, j, b) % p * at(h, k, c) % p;
            }
        out[4 * a + 2 * b + c] = static_cast<std::uint8_t>(sum % p);
      }
  return out;
}

Tensor2 canonical_algebra(const Tensor2& t, std::uint32_t p) {
  Tensor2 best = t;
  for (const auto& g : general_linear_group(p)) best = std::min(best, act_algebra(t, g, p));
  return best;
}

Tensor2 canonical_coalgebra(const Tensor2& t, std::uint32_t p) {
  Tensor2 best = t;
  for (const auto& g : general_linear_group(p)) best = std::min(best, act_coalgebra(t, g, p));
  return best;
}

Tensor2 canonical_form(const Algebra& a) { return canonical_algebra(tensor2_of(a), field_prime(a.field)); }
Tensor2 canonical_form(const Coalgebra& c) { return canonical_coalgebra(tensor2_of(c), field_prime(c.field)); }

std::size_t algebra_orbit_size(const Tensor2& t, std::uint32_t p) {
  std::set<Tensor2> orbit;
  for (const auto& g : general_linear_group(p)) orbit.insert(act_algebra(t, g, p));
  return orbit.size();
}

std::vector<CanonicalClass> enumerate_associative_nonunital(std::uint32_t p, Exec exec) {
  require_desk_prime(p);
  general_linear_group(p);
  const auto hits = scan(exec, p, [p](const Tensor2& t) {
    const auto m = finite::to_fp(t, p);
    return finite::associative(m) && !finite::has_unit(m);
  });
  std::map<Tensor2, CanonicalClass> classes;
  for (auto index : hits) {
    const Tensor2 t = finite::decode_tensor2(index, p);
    const Tensor2 canon = canonical_algebra(t, p);
    auto& cls = classes[canon];
    if (cls.members++ == 0) {
      cls.canonical = canon;
      cls.representative = t;
      cls.orbit_size = algebra_orbit_size(t, p);
    }
  }
  std::vector<CanonicalClass> out;
  for (auto& [_, cls] : classes) out.push_back(cls);
  return out;
}

std::vector<Algebra> associative_nonunital_tables(const Field& field) {
  const std::string z = "0", o = "1";
  using T = std::vector<std::vector<std::vector<std::string>>>;
  const std::vector<T> tables = {
      {{{o, z}, {z, z}}, {{z, o}, {z, z}}},  // e1e1=e1, e2e1=e2
      {{{o, z}, {z, o}}, {{z, z}, {z, z}}},  // e1e1=e1, e1e2=e2
      {{{o, z}, {z, z}}, {{z, z}, {z, z}}},  // e1e1=e1
      {{{z, o}, {z, z}}, {{z, z}, {z, z}}},  // e1e1=e2
      {{{z, z}, {z, z}}, {{z, z}, {z, z}}},
  };
  std::vector<Algebra> out;
  for (const auto& t : tables) out.push_back(make_algebra(field, t));
  return out;
}

std::vector<ComultiplicationType> comultiplication_catalog(const Field& field) {
  std::vector<ComultiplicationType> out;
  for (int id = 1; id <= 5; ++id) out.push_back({id, family_coalgebra(id, field)});
  return out;
}

std::vector<Tensor2> enumerate_sd_multiplications(int type, std::uint32_t p, Exec exec) {
  require_desk_prime(p);
  const auto comul = finite::FpTensor::from_coalgebra(family_coalgebra(type, Field::prime(p)));
  const auto hits = scan(exec, p, [p, &comul](const Tensor2& t) {
    const auto m = finite::to_fp(t, p);
    return finite::consistent(m, comul) && finite::sd_bialgebra(m, comul);
  });
  std::vector<Tensor2> out;
  out.reserve(hits.size());
  for (auto index : hits) out.push_back(finite::decode_tensor2(index, p));
  return out;
}

std::vector<Tensor2> enumerate_sd_algebras(std::uint32_t p, Exec exec) {
  require_desk_prime(p);
  const auto hits = scan(exec, p, [p](const Tensor2& t) {
    return !finite::serial::first_sd_violation(finite::carrier_table(finite::to_fp(t, p))).has_value();
  });
  std::vector<Tensor2> out;
  for (auto index : hits) out.push_back(finite::decode_tensor2(index, p));
  return out;
}

AuditReport verify_family_completeness(int type, std::uint32_t p, Exec exec) {
  require_desk_prime(p);
  AuditReport report;
  report.type = type;
  report.p = p;
  const auto solutions = enumerate_sd_multiplications(type, p, exec);
  const std::set<Tensor2> s(solutions.begin(), solutions.end());
  std::set<Tensor2> f;
  for (const auto& fam : family_catalog(type)) {
    for (const auto& inst : admissible_instances(fam, p)) f.insert(tensor2_of(inst.bialgebra.algebra));
  }
  std::set_difference(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(report.missing_from_families));
  std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(report.unsound_instances));
  report.sound = report.unsound_instances.empty();
  report.family_instances = f.size();
  report.solutions = s.size();
  return report;
}

std::vector<DualizationCase> dualization_report(std::uint32_t p) {
  const Field field = Field::prime(p);
  const auto catalog = comultiplication_catalog(field);
  const auto tables = associative_nonunital_tables(field);
  const int expected[] = {2, 1, 3, 4, 5};
  std::vector<DualizationCase> out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    DualizationCase dc{static_cast<int>(i + 1), expected[i], dualize(tables[i]), std::nullopt, std::nullopt};
    const Tensor2 dual = tensor2_of(dc.dual);
    const Tensor2 canon = canonical_coalgebra(dual, p);
    for (const auto& type : catalog) {
      const Tensor2 target = tensor2_of(type.coalgebra);
      if (canonical_coalgebra(target, p) != canon) continue;
      // Prefer the expected type when several catalog entries share an orbit.
      if (dc.matched_type && type.id != dc.expected_type) continue;
      dc.matched_type = type.id;
      for (const auto& g : general_linear_group(p)) {
        if (act_coalgebra(dual, g, p) == target) {
          dc.basis_change = g;
          break;
        }
      }
    }
    out.push_back(std::move(dc));
  }
  return out;
}

}  // namespace sdb
