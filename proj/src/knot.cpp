#include "sdb/knot.hpp"

#include <omp.h>

#include <json.hpp>
#include <numeric>

#include "sdb/errors.hpp"
#include "sdb/quandle.hpp"

namespace sdb {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Search state: one color per over-arc class, propagated through the
// under-strand relation c = a * b.
class ColoringSearch {
 public:
  ColoringSearch(const Diagram& d, const CayleyTable& q) : q_(q) {
    UnionFind uf(d.edges());
    for (const auto& x : d.crossings()) uf.unite(x[1], x[3]);
    std::vector<std::size_t> id(d.edges(), npos);
    for (std::size_t e = 0; e < d.edges(); ++e) {
      const auto r = uf.find(e);
      if (id[r] == npos) id[r] = classes_++;
      id[e] = id[r];
    }
    for (const auto& x : d.crossings()) rel_.push_back({id[x[0]], id[x[1]], id[x[2]]});
    color_.assign(classes_, npos);
  }

  std::size_t classes() const { return classes_; }

  /// Colorings with class 0 fixed to `first` (or all, when there are no classes).
  std::uint64_t count_with_first(std::size_t first) {
    if (classes_ == 0) return 1;
    std::vector<std::size_t> trail;
    std::uint64_t total = 0;
    if (assign(0, first, trail)) total = dfs();
    undo(trail, 0);
    return total;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Relation {
    std::size_t a, b, c;
  };

  bool assign(std::size_t cls, std::size_t color, std::vector<std::size_t>& trail) {
    color_[cls] = color;
    trail.push_back(cls);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : rel_) {
        if (color_[r.a] == npos || color_[r.b] == npos) continue;
        const std::size_t v = q_(color_[r.a], color_[r.b]);
        if (color_[r.c] == npos) {
          color_[r.c] = v;
          trail.push_back(r.c);
          changed = true;
        } else if (color_[r.c] != v) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::vector<std::size_t>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      color_[trail.back()] = npos;
      trail.pop_back();
    }
  }

  std::uint64_t dfs() {
    std::size_t next = 0;
    while (next < classes_ && color_[next] != npos) ++next;
    if (next == classes_) return 1;
    std::uint64_t total = 0;
    std::vector<std::size_t> trail;
    for (std::size_t v = 0; v < q_.order(); ++v) {
      if (assign(next, v, trail)) total += dfs();
      undo(trail, 0);
    }
    return total;
  }

  const CayleyTable& q_;
  std::size_t classes_ = 0;
  std::vector<Relation> rel_;
  std::vector<std::size_t> color_;
};

void require_quandle(const CayleyTable& q) {
  if (q.order() == 0) throw input_error("coloring quandle is empty");
  const CheckReport r = is_quandle(q);
  if (!r.verdict()) throw input_error("coloring table is not a quandle: " + r.witnesses().front().at);
}

}  // namespace

Diagram::Diagram(PDCode pd) {
  const std::size_t n = pd.crossings.size();
  edges_ = 2 * n;
  std::vector<int> seen(edges_ + 1, 0);
  for (const auto& x : pd.crossings)
    for (auto label : x) {
      if (label == 0 || label > edges_) {
        throw input_error("PD label " + std::to_string(label) + " outside 1.." + std::to_string(edges_));
      }
      ++seen[label];
    }
  for (std::size_t l = 1; l <= edges_; ++l) {
    if (seen[l] != 2) {
      throw input_error("PD label " + std::to_string(l) + " occurs " + std::to_string(seen[l]) + " times");
    }
  }
  UnionFind uf(edges_);
  for (auto x : pd.crossings) {
    for (auto& label : x) --label;
    uf.unite(x[0], x[2]);
    uf.unite(x[1], x[3]);
    crossings_.push_back(x);
  }
  if (edges_ > 0) {
    components_ = 0;
    for (std::size_t e = 0; e < edges_; ++e) components_ += uf.find(e) == e;
  }
}

PDCode parse_pd(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("malformed PD JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("pd") || !j["pd"].is_array()) {
    throw input_error("PD JSON must be an object with an array field \"pd\"");
  }
  PDCode pd;
  for (std::size_t i = 0; i < j["pd"].size(); ++i) {
    const auto& x = j["pd"][i];
    if (!x.is_array() || x.size() != 4) throw input_error("pd[" + std::to_string(i) + "] is not a 4-tuple");
    Crossing c{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!x[k].is_number_integer() || x[k].get<long long>() < 1) {
        throw input_error("pd[" + std::to_string(i) + "][" + std::to_string(k) + "] is not a positive integer");
      }
      c[k] = static_cast<std::uint32_t>(x[k].get<long long>());
    }
    pd.crossings.push_back(c);
  }
  Diagram check(pd);
  (void)check;
  return pd;
}

namespace serial {

std::uint64_t count_colorings(const Diagram& d, const CayleyTable& q) {
  require_quandle(q);
  if (d.edges() == 0) return q.order();
  ColoringSearch search(d, q);
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < q.order(); ++v) total += search.count_with_first(v);
  return total;
}

}  // namespace serial

std::uint64_t count_colorings(const Diagram& d, const CayleyTable& q) {
  require_quandle(q);
  if (d.edges() == 0) return q.order();
  const auto n = static_cast<std::int64_t>(q.order());
  std::uint64_t total = 0;
#pragma omp parallel
  {
    ColoringSearch search(d, q);
#pragma omp for schedule(dynamic) reduction(+ : total)
    for (std::int64_t v = 0; v < n; ++v) total += search.count_with_first(static_cast<std::size_t>(v));
  }
  return total;
}

}  // namespace sdb
