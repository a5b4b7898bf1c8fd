#include "sdb/magma.hpp"

#include <algorithm>
#include <string>

#include "sdb/errors.hpp"

namespace sdb {

CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint32_t> table) : n_(n), table_(std::move(table)) {
  if (table_.size() != n_ * n_) {
    throw input_error("Cayley table of order " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                      " entries, got " + std::to_string(table_.size()));
  }
  if (std::any_of(table_.begin(), table_.end(), [&](std::uint32_t v) { return v >= n_; })) {
    throw input_error("Cayley table entry out of range [0, " + std::to_string(n_) + ")");
  }
}

}  // namespace sdb
