#pragma once

// Enumeration kernels over small prime fields.
//
// Every scan comes in two flavours: a plain serial loop kept as the reference
// implementation, and an OpenMP version that partitions the index space
// statically and merges per-thread results. Both return results in ascending
// index order, so their outputs are byte-identical.

#include <omp.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdb/magma.hpp"
#include "sdb/tensor.hpp"

namespace sdb::finite {

inline constexpr std::size_t max_dim = 4;

/// Element coordinates over GF(p) (only the first `dim` entries are used).
using Vec = std::array<std::uint32_t, max_dim>;

/// Structure tensor over GF(p) with dim <= 4, stored inline.
class FpTensor {
 public:
  FpTensor() = default;
  FpTensor(std::uint32_t p, std::uint32_t dim);
  static FpTensor from_algebra(const Algebra& a);
  static FpTensor from_coalgebra(const Coalgebra& c);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, std::uint32_t v) {
    data_[(i * dim_ + j) * dim_ + k] = static_cast<std::uint8_t>(v % p_);
  }

  Algebra to_algebra() const;
  Coalgebra to_coalgebra() const;

  friend bool operator==(const FpTensor&, const FpTensor&) = default;

 private:
  std::uint32_t p_ = 2;
  std::uint32_t dim_ = 0;
  std::array<std::uint8_t, max_dim * max_dim * max_dim> data_{};
};

/// Flattened dim-2 tensor: entry (i, j, k) at position 4i + 2j + k.
using Tensor2 = std::array<std::uint8_t, 8>;

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);
inline std::uint64_t tensor2_count(std::uint32_t p) { return ipow(p, 8); }

/// Index order equals lexicographic order of the flattened tensor:
/// entry 0 is the most significant base-p digit.
Tensor2 decode_tensor2(std::uint64_t index, std::uint32_t p);
std::uint64_t encode_tensor2(const Tensor2& t, std::uint32_t p);
FpTensor to_fp(const Tensor2& t, std::uint32_t p);
Tensor2 to_tensor2(const FpTensor& t);

/// Elements of GF(p)^n are coded in base p with the e_1 coefficient as the
/// least significant digit.
Vec decode_element(std::uint64_t code, std::uint32_t p, std::uint32_t dim);
std::uint64_t encode_element(const Vec& v, std::uint32_t p, std::uint32_t dim);
Element to_element(const Vec& v, const Field& field, std::uint32_t dim);
Vec from_element(const Element& e);

Vec product(const FpTensor& mul, const Vec& u, const Vec& v);

/// Multiplication table of the whole carrier GF(p)^n (p^n elements).
CayleyTable carrier_table(const FpTensor& mul);

// Basis-level checks of multilinear identities.
bool associative(const FpTensor& mul);
bool cube_zero(const FpTensor& mul);
bool consistent(const FpTensor& mul, const FpTensor& comul);
bool sd_bialgebra(const FpTensor& mul, const FpTensor& comul);
/// Two-sided unit by enumeration of the carrier.
bool has_unit(const FpTensor& mul);

/// Smallest (x, y, z) in lexicographic order with (xy)z != (xz)(yz).
using Triple = std::array<std::uint32_t, 3>;

namespace serial {

template <class Pred>
std::vector<std::uint64_t> scan_tensors2(std::uint32_t p, Pred&& pred) {
  std::vector<std::uint64_t> hits;
  const std::uint64_t total = tensor2_count(p);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (pred(decode_tensor2(i, p))) hits.push_back(i);
  }
  return hits;
}

std::optional<Triple> first_sd_violation(const CayleyTable& t);
std::vector<std::uint64_t> idempotents(const FpTensor& mul);

}  // namespace serial

namespace parallel {

template <class Pred>
std::vector<std::uint64_t> scan_tensors2(std::uint32_t p, Pred&& pred) {
  const std::int64_t total = static_cast<std::int64_t>(tensor2_count(p));
  std::vector<std::vector<std::uint64_t>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      if (pred(decode_tensor2(static_cast<std::uint64_t>(i), p))) local.push_back(static_cast<std::uint64_t>(i));
    }
  }
  std::vector<std::uint64_t> hits;
  for (auto& local : per_thread) hits.insert(hits.end(), local.begin(), local.end());
  std::sort(hits.begin(), hits.end());
  return hits;
}

std::optional<Triple> first_sd_violation(const CayleyTable& t);
std::vector<std::uint64_t> idempotents(const FpTensor& mul);

}  // namespace parallel

}  // namespace sdb::finite
