#pragma once

// Planar-diagram codes and quandle coloring counts.
//
// Convention: a crossing (a, b, c, d) lists its four edges counterclockwise
// starting from the incoming under-edge a; c is the outgoing under-edge and
// b, d are the over-edges. A coloring chi satisfies chi(b) = chi(d) and
// chi(c) = chi(a) * chi(b) at every crossing.
//
//            d
//            |
//     a -----|-----> c        trefoil: [[1,4,2,5],[3,6,4,1],[5,2,6,3]]
//            |
//            b

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sdb/magma.hpp"

namespace sdb {

using Crossing = std::array<std::uint32_t, 4>;

struct PDCode {
  std::vector<Crossing> crossings;
};

/// Validated diagram. Edges are relabelled 0..edges-1.
class Diagram {
 public:
  explicit Diagram(PDCode pd);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t edges() const noexcept { return edges_; }
  /// Orbits of a ~ c (under-strand) and b ~ d (over-strand); an empty diagram
  /// has one component by convention.
  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<Crossing> crossings_;  // zero-based labels
  std::size_t edges_ = 0;
  std::size_t components_ = 1;
};

/// Parses {"pd": [[a,b,c,d], ...]} and checks that labels 1..2N each occur
/// exactly twice. Throws input_error.
PDCode parse_pd(const std::string& text);

/// Number of proper colorings. Throws input_error when q is not a quandle.
/// The empty diagram has |Q| colorings (one free arc).
std::uint64_t count_colorings(const Diagram& d, const CayleyTable& q);

namespace serial {
std::uint64_t count_colorings(const Diagram& d, const CayleyTable& q);
}

}  // namespace sdb
