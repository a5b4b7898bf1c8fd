#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sdb {

/// Finite magma on {0, ..., n-1}: table[x * n + y] = x * y.
class CayleyTable {
 public:
  CayleyTable() = default;
  /// Throws input_error if the table is not n x n or has an entry >= n.
  CayleyTable(std::size_t n, std::vector<std::uint32_t> table);

  std::size_t order() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t x, std::size_t y) const { return table_[x * n_ + y]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return table_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
};

}  // namespace sdb
