#include "sdb/finite.hpp"

#include <limits>

#include "sdb/errors.hpp"

namespace sdb::finite {

namespace {

void require_prime_small(const Field& field, std::size_t dim) {
  if (!field.is_prime()) throw unsupported_field("needs a prime field, got " + field.describe());
  if (field.characteristic() > 251) throw unsupported_field("residues must fit in a byte");
  if (dim == 0 || dim > max_dim) throw dimension_error("finite kernels support 1 <= dim <= 4");
}

FpTensor from_tensor(const Field& field, const Tensor3& t) {
  require_prime_small(field, t.dim());
  FpTensor out(static_cast<std::uint32_t>(field.characteristic()), static_cast<std::uint32_t>(t.dim()));
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k) out.set(i, j, k, static_cast<std::uint32_t>(t(i, j, k).residue()));
  return out;
}

Tensor3 to_tensor(const FpTensor& t, const Field& field) {
  Tensor3 out(field, t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k) out(i, j, k) = Scalar::from_integer(field, static_cast<long>(t(i, j, k)));
  return out;
}

Vec basis_vec(std::size_t i) {
  Vec v{};
  v[i] = 1;
  return v;
}

}  // namespace

FpTensor::FpTensor(std::uint32_t p, std::uint32_t dim) : p_(p), dim_(dim) {
  if (dim > max_dim) throw dimension_error("finite kernels support dim <= 4");
}

FpTensor FpTensor::from_algebra(const Algebra& a) { return from_tensor(a.field, a.mul); }
FpTensor FpTensor::from_coalgebra(const Coalgebra& c) { return from_tensor(c.field, c.comul); }

Algebra FpTensor::to_algebra() const {
  const Field field = Field::prime(p_);
  return Algebra{field, to_tensor(*this, field)};
}

Coalgebra FpTensor::to_coalgebra() const {
  const Field field = Field::prime(p_);
  return Coalgebra{field, to_tensor(*this, field)};
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

Tensor2 decode_tensor2(std::uint64_t index, std::uint32_t p) {
  Tensor2 t{};
  for (int pos = 7; pos >= 0; --pos) {
    t[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(index % p);
    index /= p;
  }
  return t;
}

std::uint64_t encode_tensor2(const Tensor2& t, std::uint32_t p) {
  std::uint64_t index = 0;
  for (auto v : t) index = index * p + v;
  return index;
}

FpTensor to_fp(const Tensor2& t, std::uint32_t p) {
  FpTensor out(p, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) out.set(i, j, k, t[4 * i + 2 * j + k]);
  return out;
}

Tensor2 to_tensor2(const FpTensor& t) {
  if (t.dim() != 2) throw dimension_error("expected a dim-2 tensor");
  Tensor2 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) out[4 * i + 2 * j + k] = static_cast<std::uint8_t>(t(i, j, k));
  return out;
}

Vec decode_element(std::uint64_t code, std::uint32_t p, std::uint32_t dim) {
  Vec v{};
  for (std::uint32_t i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

std::uint64_t encode_element(const Vec& v, std::uint32_t p, std::uint32_t dim) {
  std::uint64_t code = 0;
  for (std::uint32_t i = dim; i-- > 0;) code = code * p + v[i];
  return code;
}

Element to_element(const Vec& v, const Field& field, std::uint32_t dim) {
  Element e(field, dim);
  for (std::uint32_t i = 0; i < dim; ++i) e[i] = Scalar::from_integer(field, static_cast<long>(v[i]));
  return e;
}

Vec from_element(const Element& e) {
  if (e.dim() > max_dim) throw dimension_error("finite kernels support dim <= 4");
  Vec v{};
  for (std::size_t i = 0; i < e.dim(); ++i) v[i] = static_cast<std::uint32_t>(e[i].residue());
  return v;
}

Vec product(const FpTensor& mul, const Vec& u, const Vec& v) {
  const std::uint32_t n = mul.dim();
  const std::uint32_t p = mul.p();
  Vec r{};
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!u[i]) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!v[j]) continue;
      const std::uint32_t w = u[i] * v[j];
      for (std::uint32_t k = 0; k < n; ++k) r[k] += w * mul(i, j, k);
    }
  }
  for (std::uint32_t k = 0; k < n; ++k) r[k] %= p;
  return r;
}

CayleyTable carrier_table(const FpTensor& mul) {
  const std::uint64_t size = ipow(mul.p(), mul.dim());
  if (size > 4096) throw unsupported_field("carrier of " + std::to_string(size) + " elements is too large to tabulate");
  std::vector<Vec> elems(size);
  for (std::uint64_t x = 0; x < size; ++x) elems[x] = decode_element(x, mul.p(), mul.dim());
  std::vector<std::uint32_t> table(size * size);
  for (std::uint64_t x = 0; x < size; ++x)
    for (std::uint64_t y = 0; y < size; ++y)
      table[x * size + y] = static_cast<std::uint32_t>(encode_element(product(mul, elems[x], elems[y]), mul.p(), mul.dim()));
  return CayleyTable(size, std::move(table));
}

bool associative(const FpTensor& mul) {
  const std::uint32_t n = mul.dim();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k) {
        const Vec ei = basis_vec(i), ej = basis_vec(j), ek = basis_vec(k);
        if (product(mul, product(mul, ei, ej), ek) != product(mul, ei, product(mul, ej, ek))) return false;
      }
  return true;
}

bool cube_zero(const FpTensor& mul) {
  const std::uint32_t n = mul.dim();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k) {
        if (product(mul, product(mul, basis_vec(i), basis_vec(j)), basis_vec(k)) != Vec{}) return false;
      }
  return true;
}

bool consistent(const FpTensor& mul, const FpTensor& comul) {
  const std::uint32_t n = mul.dim();
  const std::uint32_t p = mul.p();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      // Delta(e_i e_j) and Delta(e_i) Delta(e_j) as n x n coefficient grids.
      std::array<std::uint32_t, max_dim * max_dim> lhs{}, rhs{};
      for (std::uint32_t k = 0; k < n; ++k) {
        if (!mul(i, j, k)) continue;
        for (std::uint32_t a = 0; a < n; ++a)
          for (std::uint32_t b = 0; b < n; ++b) lhs[a * n + b] += mul(i, j, k) * comul(k, a, b);
      }
      for (std::uint32_t l = 0; l < n; ++l)
        for (std::uint32_t r = 0; r < n; ++r) {
          if (!comul(i, l, r)) continue;
          for (std::uint32_t l2 = 0; l2 < n; ++l2)
            for (std::uint32_t r2 = 0; r2 < n; ++r2) {
              const std::uint32_t w = comul(i, l, r) * comul(j, l2, r2) % p;
              if (!w) continue;
              for (std::uint32_t s = 0; s < n; ++s) {
                if (!mul(l, l2, s)) continue;
                for (std::uint32_t t = 0; t < n; ++t) rhs[s * n + t] += w * mul(l, l2, s) * mul(r, r2, t);
              }
            }
        }
      for (std::uint32_t c = 0; c < n * n; ++c) {
        if (lhs[c] % p != rhs[c] % p) return false;
      }
    }
  return true;
}

bool sd_bialgebra(const FpTensor& mul, const FpTensor& comul) {
  const std::uint32_t n = mul.dim();
  const std::uint32_t p = mul.p();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k) {
        const Vec lhs = product(mul, product(mul, basis_vec(i), basis_vec(j)), basis_vec(k));
        Vec rhs{};
        for (std::uint32_t l = 0; l < n; ++l)
          for (std::uint32_t r = 0; r < n; ++r) {
            const std::uint32_t w = comul(k, l, r);
            if (!w) continue;
            const Vec term = product(mul, product(mul, basis_vec(i), basis_vec(l)), product(mul, basis_vec(j), basis_vec(r)));
            for (std::uint32_t s = 0; s < n; ++s) rhs[s] = (rhs[s] + w * term[s]) % p;
          }
        if (lhs != rhs) return false;
      }
  return true;
}

bool has_unit(const FpTensor& mul) {
  const std::uint32_t n = mul.dim();
  const std::uint64_t size = ipow(mul.p(), n);
  for (std::uint64_t code = 0; code < size; ++code) {
    const Vec u = decode_element(code, mul.p(), n);
    bool unit = true;
    for (std::uint32_t i = 0; i < n && unit; ++i) {
      unit = product(mul, u, basis_vec(i)) == basis_vec(i) && product(mul, basis_vec(i), u) == basis_vec(i);
    }
    if (unit) return true;
  }
  return false;
}

namespace {

std::optional<std::array<std::uint32_t, 2>> first_violation_at(const CayleyTable& t, std::uint32_t x) {
  const auto n = static_cast<std::uint32_t>(t.order());
  for (std::uint32_t y = 0; y < n; ++y) {
    const std::uint32_t xy = t(x, y);
    for (std::uint32_t z = 0; z < n; ++z) {
      if (t(xy, z) != t(t(x, z), t(y, z))) return std::array<std::uint32_t, 2>{y, z};
    }
  }
  return std::nullopt;
}

}  // namespace

namespace serial {

std::optional<Triple> first_sd_violation(const CayleyTable& t) {
  for (std::uint32_t x = 0; x < t.order(); ++x) {
    if (auto yz = first_violation_at(t, x)) return Triple{x, (*yz)[0], (*yz)[1]};
  }
  return std::nullopt;
}

std::vector<std::uint64_t> idempotents(const FpTensor& mul) {
  std::vector<std::uint64_t> out;
  const std::uint64_t size = ipow(mul.p(), mul.dim());
  for (std::uint64_t code = 0; code < size; ++code) {
    const Vec u = decode_element(code, mul.p(), mul.dim());
    if (product(mul, u, u) == u) out.push_back(code);
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::optional<Triple> first_sd_violation(const CayleyTable& t) {
  const auto n = static_cast<std::int64_t>(t.order());
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best = none;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (std::int64_t x = 0; x < n; ++x) {
    if (auto yz = first_violation_at(t, static_cast<std::uint32_t>(x))) {
      const std::uint64_t code = (static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(n) + (*yz)[0]) *
                                     static_cast<std::uint64_t>(n) + (*yz)[1];
      best = std::min(best, code);
    }
  }
  if (best == none) return std::nullopt;
  const auto un = static_cast<std::uint64_t>(n);
  return Triple{static_cast<std::uint32_t>(best / (un * un)), static_cast<std::uint32_t>(best / un % un),
                static_cast<std::uint32_t>(best % un)};
}

std::vector<std::uint64_t> idempotents(const FpTensor& mul) {
  const auto size = static_cast<std::int64_t>(ipow(mul.p(), mul.dim()));
  std::vector<std::vector<std::uint64_t>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t code = 0; code < size; ++code) {
      const Vec u = decode_element(static_cast<std::uint64_t>(code), mul.p(), mul.dim());
      if (product(mul, u, u) == u) local.push_back(static_cast<std::uint64_t>(code));
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& local : per_thread) out.insert(out.end(), local.begin(), local.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parallel

}  // namespace sdb::finite
