#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sdb {

/// Counterexample to an identity: where it failed and both sides rendered.
struct Witness {
  std::string at;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of an axiom check. verdict is false exactly when witnesses is
/// nonempty; at most `witness_limit` witnesses are kept.
class CheckReport {
 public:
  static constexpr std::size_t witness_limit = 16;

  bool verdict() const noexcept { return witnesses_.empty(); }
  explicit operator bool() const noexcept { return verdict(); }
  const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }
  bool full() const noexcept { return witnesses_.size() >= witness_limit; }

  void fail(Witness w) {
    if (!full()) witnesses_.push_back(std::move(w));
  }
  /// Concatenates another report's witnesses (respecting the limit).
  void merge(const CheckReport& other) {
    for (const auto& w : other.witnesses_) fail(w);
  }

 private:
  std::vector<Witness> witnesses_;
};

}  // namespace sdb
