#include "sdb/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sdb/axioms.hpp"
#include "sdb/errors.hpp"

namespace sdb {

namespace {

std::string tuple(std::initializer_list<std::size_t> xs) {
  std::string out = "(";
  for (auto x : xs) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + ")";
}

void check_q2(const CayleyTable& t, CheckReport& report) {
  const std::size_t n = t.order();
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<std::size_t> preimage(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t z = t(x, y);
      if (preimage[z] != n) {
        report.fail({"Q2 y=" + std::to_string(y) + " x=" + tuple({preimage[z], x}),
                     std::to_string(preimage[z]) + "*" + std::to_string(y) + "=" + std::to_string(z),
                     std::to_string(x) + "*" + std::to_string(y) + "=" + std::to_string(z)});
        break;
      }
      preimage[z] = x;
    }
  }
}

void check_q3(const CayleyTable& t, CheckReport& report) {
  const std::size_t n = t.order();
  for (std::size_t x = 0; x < n && !report.full(); ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto lhs = t(t(x, y), z);
        const auto rhs = t(t(x, z), t(y, z));
        if (lhs != rhs) report.fail({"Q3 " + tuple({x, y, z}), std::to_string(lhs), std::to_string(rhs)});
      }
}

}  // namespace

CheckReport is_quandle(const CayleyTable& t) {
  CheckReport report;
  for (std::size_t x = 0; x < t.order(); ++x) {
    if (t(x, x) != x) report.fail({"Q1 " + tuple({x}), std::to_string(t(x, x)), std::to_string(x)});
  }
  check_q2(t, report);
  check_q3(t, report);
  return report;
}

CheckReport is_rack(const CayleyTable& t) {
  CheckReport report;
  check_q2(t, report);
  check_q3(t, report);
  return report;
}

CayleyTable trivial_quandle(std::size_t n) {
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<std::uint32_t>(x);
  return CayleyTable(n, std::move(table));
}

CayleyTable dihedral_quandle(std::size_t n) {
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<std::uint32_t>((2 * y + n - x) % n);
  return CayleyTable(n, std::move(table));
}

std::vector<CayleyTable> enumerate_quandles(std::size_t n) {
  if (n == 0 || n > 5) throw input_error("enumerate_quandles supports orders 1..5");
  // For each column y, every permutation of {0..n-1} fixing y.
  std::vector<std::vector<std::vector<std::uint32_t>>> columns(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
      if (perm[y] == y) columns[y].push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<CayleyTable> out;
  std::vector<std::size_t> choice(n, 0);
  std::vector<std::uint32_t> table(n * n);
  while (true) {
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) table[x * n + y] = columns[y][choice[y]][x];
    CayleyTable t(n, table);
    if (is_quandle(t).verdict()) out.push_back(std::move(t));
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++choice[pos] < columns[pos].size()) break;
      choice[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.begin(), out.end(),
            [](const CayleyTable& a, const CayleyTable& b) { return a.entries() < b.entries(); });
  return out;
}

Algebra quandle_ring(const CayleyTable& t, const Field& field) {
  const std::size_t n = t.order();
  Algebra a{field, Tensor3(field, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.mul(i, j, t(i, j)) = Scalar::one(field);
  return a;
}

Scalar augmentation(const Element& u) {
  if (u.dim() == 0) throw dimension_error("augmentation of an empty element");
  Scalar sum = Scalar::zero(u[0].field());
  for (const auto& c : u.coeffs()) sum += c;
  return sum;
}

std::vector<Element> augmentation_ideal_basis(const Field& field, std::size_t n, std::size_t basepoint) {
  if (basepoint >= n) throw dimension_error("basepoint out of range");
  std::vector<Element> out;
  const Element base = Element::basis(field, n, basepoint);
  for (std::size_t x = 0; x < n; ++x) {
    if (x != basepoint) out.push_back(Element::basis(field, n, x) - base);
  }
  return out;
}

SubsetMagma subset_magma(const Algebra& a, const std::vector<Element>& s, bool use_opposite) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s[i] == s[j]) throw input_error("subset_magma: repeated element " + s[i].render());
    }
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element prod = use_opposite ? multiply(a, s[j], s[i]) : multiply(a, s[i], s[j]);
      const auto it = std::find(s.begin(), s.end(), prod);
      if (it == s.end()) return {std::nullopt, std::make_pair(i, j)};
      table[i * n + j] = static_cast<std::uint32_t>(it - s.begin());
    }
  return {CayleyTable(n, std::move(table)), std::nullopt};
}

namespace {

OrientationReport orientation(const Algebra& a, const std::vector<Element>& s, bool use_opposite) {
  OrientationReport out;
  SubsetMagma m = subset_magma(a, s, use_opposite);
  out.offending = m.offending;
  if (m.table) {
    out.closed = true;
    out.quandle = is_quandle(*m.table);
    out.rack = is_rack(*m.table);
    out.table = std::move(m.table);
  } else {
    const auto [i, j] = *m.offending;
    const Element prod = use_opposite ? multiply(a, s[j], s[i]) : multiply(a, s[i], s[j]);
    Witness w{"closure " + s[i].render() + " , " + s[j].render(), prod.render(), "outside the set"};
    out.quandle.fail(w);
    out.rack.fail(w);
  }
  return out;
}

}  // namespace

IdempotentQuandleReport idempotent_quandle_report(const Algebra& a) {
  IdempotentQuandleReport r;
  r.idempotents = find_idempotents(a);
  for (const auto& u : r.idempotents) {
    if (!u.is_zero()) r.nonzero.push_back(u);
  }
  r.direct = orientation(a, r.nonzero, false);
  r.opposite = orientation(a, r.nonzero, true);
  return r;
}

}  // namespace sdb
