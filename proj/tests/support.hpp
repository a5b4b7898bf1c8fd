#pragma once

// Shared helpers for the test binaries: fixture paths, hand-rolled random
// generators and small constructors.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sdb/tensor.hpp"

namespace sdbtest {

using namespace sdb;

inline std::string fixture(const std::string& name) { return std::string(SDB_FIXTURE_DIR) + "/" + name; }
inline std::string golden(const std::string& name) { return std::string(SDB_GOLDEN_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar rational(const Field& f) {
    return Scalar::from_rational(f, mpq_class(integer(-9, 9), integer(1, 6)));
  }

  /// Small random rational function: ratio of two polynomials of degree <= 2.
  Scalar params(const Field& f) {
    const auto poly = [&] {
      Scalar s = Scalar::zero(f);
      for (int t = 0; t < 3; ++t) {
        Scalar term = Scalar::from_integer(f, integer(-3, 3));
        for (std::size_t v = 0; v < f.vars().size(); ++v) {
          term *= Scalar::variable(f, v).pow(static_cast<std::uint32_t>(integer(0, 2)));
        }
        s += term;
      }
      return s;
    };
    Scalar den = poly();
    while (den.is_zero()) den = poly();
    return poly() / den;
  }

  Scalar scalar(const Field& f) {
    switch (f.kind()) {
      case Field::Kind::prime:
        return Scalar::from_integer(f, integer(0, static_cast<long>(f.characteristic()) - 1));
      case Field::Kind::rational:
        return rational(f);
      case Field::Kind::params:
        return params(f);
    }
    return Scalar::zero(f);
  }

  Element element(const Field& f, std::size_t n) {
    Element e(f, n);
    for (std::size_t i = 0; i < n; ++i) e[i] = scalar(f);
    return e;
  }

  Tensor3 tensor(const Field& f, std::size_t n) {
    Tensor3 t(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t(i, j, k) = scalar(f);
    return t;
  }

  /// Random invertible matrix (rejection sampling).
  Matrix invertible(const Field& f, std::size_t n) {
    while (true) {
      Matrix g(n, std::vector<Scalar>(n, Scalar::zero(f)));
      for (auto& row : g)
        for (auto& v : row) v = scalar(f);
      try {
        invert(g);
        return g;
      } catch (const std::exception&) {
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Dim-2 algebra over `field` from products (xx, xy, yx, yy) given as
/// (x, y) coefficient strings.
inline Algebra table2(const Field& field, std::vector<std::vector<std::string>> products) {
  std::vector<std::vector<std::vector<std::string>>> mul(2, std::vector<std::vector<std::string>>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) mul[i][j] = products[2 * i + j];
  return make_algebra(field, mul);
}

inline Element vec(const Field& field, std::vector<std::string> coeffs) {
  Element e(field, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) e[i] = parse_scalar(coeffs[i], field);
  return e;
}

}  // namespace sdbtest
