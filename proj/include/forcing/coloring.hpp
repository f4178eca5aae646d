// Proper-coloring machinery: extension counting for partial colorings,
// chromatic number, partition counting (number of colorings up to color
// permutation), unique-colorability tests, factor-induced colorings and the
// G_k family.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "forcing/errors.hpp"
#include "forcing/graph.hpp"

namespace forcing {

// Total assignment of colors 1..s. Improper colorings are representable;
// properness is a predicate, not an invariant.
struct Coloring {
  int s = 0;
  std::vector<int> colors;

  Coloring() = default;
  Coloring(int s_, std::vector<int> colors_) : s(s_), colors(std::move(colors_)) {
    if (s < 0) throw precondition_error("color budget must be non-negative");
    for (int c : colors)
      if (c < 1 || c > s) throw precondition_error("coloring entry outside 1..s");
  }
};

// Assignment of colors 1..s on a subset of the vertices. Colors outside 1..s
// are rejected at construction since no proper s-coloring could extend them.
struct PartialColoring {
  int n = 0;
  int s = 0;
  std::vector<int> colors;  // size n; 0 means unassigned

  PartialColoring() = default;
  PartialColoring(int n_, int s_) : n(n_), s(s_), colors(static_cast<std::size_t>(n_), 0) {
    if (n < 0) throw precondition_error("vertex count must be non-negative");
    if (s < 1) throw precondition_error("color budget must be at least 1");
  }

  void assign(int v, int color) {
    if (v < 0 || v >= n) throw precondition_error("vertex out of range");
    if (color < 1 || color > s) throw precondition_error("color outside 1..s");
    colors[static_cast<std::size_t>(v)] = color;
  }

  int color_of(int v) const { return colors[static_cast<std::size_t>(v)]; }

  std::uint64_t domain() const {
    std::uint64_t d = 0;
    for (int v = 0; v < n; ++v)
      if (colors[static_cast<std::size_t>(v)] != 0) d |= std::uint64_t{1} << v;
    return d;
  }
};

inline bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order())
    throw precondition_error("coloring length does not match graph order");
  for (auto [u, v] : g.edges())
    if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)])
      return false;
  return true;
}

// Partition of V(G) into independent sets, blocks ordered by smallest member.
struct ColorPartition {
  std::vector<VertexSet> blocks;
  friend bool operator==(const ColorPartition&, const ColorPartition&) = default;
};

inline ColorPartition partition_from_coloring(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw precondition_error("partition requires a proper coloring");
  std::vector<VertexSet> blocks;
  std::vector<int> block_of_color(static_cast<std::size_t>(c.s) + 1, -1);
  for (int v = 0; v < g.order(); ++v) {
    int col = c.colors[static_cast<std::size_t>(v)];
    int& b = block_of_color[static_cast<std::size_t>(col)];
    if (b < 0) {
      b = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(b)].add(v);
  }
  // First occurrence order equals order by smallest member.
  return ColorPartition{std::move(blocks)};
}

namespace detail {

// Backtracking search over proper s-colorings extending a partial coloring.
// Vertices are branched in a static order (degree descending, index
// ascending); before each branch, vertices whose feasible color set became a
// singleton are assigned immediately. Visits extensions in a deterministic
// order.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int s, Budget* budget)
      : g_(&g), n_(g.order()), s_(s), budget_(budget) {
    if (s < 1) throw precondition_error("color budget must be at least 1");
    if (s > 64) throw capacity_error("more than 64 colors are not supported");
    for (int v = 0; v < n_; ++v) order_[static_cast<std::size_t>(v)] = v;
    std::sort(order_.begin(), order_.begin() + n_, [&g](int a, int b) {
      int da = g.degree(a), db = g.degree(b);
      return da != db ? da > db : a < b;
    });
  }

  // visit receives a pointer to n colors (values 1..s) and returns false to
  // stop the search. Returns false iff the visitor stopped it.
  template <class Visitor>
  bool run(const PartialColoring& p, Visitor&& visit) {
    if (p.n != n_ || p.s != s_)
      throw precondition_error("partial coloring does not match search dimensions");
    std::uint64_t full = s_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s_) - 1;
    for (int v = 0; v < n_; ++v) {
      feasible_[static_cast<std::size_t>(v)] = full;
      assigned_[static_cast<std::size_t>(v)] = 0;
    }
    trail_.clear();
    unassigned_ = n_;
    for (int v = 0; v < n_; ++v) {
      int c = p.color_of(v);
      if (c == 0) continue;
      if (!((feasible_[static_cast<std::size_t>(v)] >> (c - 1)) & 1u)) return true;  // no extension
      if (!place(v, c)) return true;
    }
    return explore(visit);
  }

 private:
  bool place(int v, int c) {
    charge();
    assigned_[static_cast<std::size_t>(v)] = c;
    --unassigned_;
    std::uint64_t bit = std::uint64_t{1} << (c - 1);
    std::uint64_t affected = 0;
    bool ok = true;
    for (std::uint64_t m = g_->neighbors(v); m != 0; m &= m - 1) {
      int u = std::countr_zero(m);
      if (assigned_[static_cast<std::size_t>(u)] != 0) continue;
      if (feasible_[static_cast<std::size_t>(u)] & bit) {
        feasible_[static_cast<std::size_t>(u)] &= ~bit;
        affected |= std::uint64_t{1} << u;
        if (feasible_[static_cast<std::size_t>(u)] == 0) ok = false;
      }
    }
    trail_.push_back({v, c, affected});
    return ok;
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [v, c, affected] = trail_.back();
      trail_.pop_back();
      std::uint64_t bit = std::uint64_t{1} << (c - 1);
      for (std::uint64_t m = affected; m != 0; m &= m - 1)
        feasible_[static_cast<std::size_t>(std::countr_zero(m))] |= bit;
      assigned_[static_cast<std::size_t>(v)] = 0;
      ++unassigned_;
    }
  }

  template <class Visitor>
  bool explore(Visitor&& visit) {
    std::size_t mark = trail_.size();
    // Assign forced vertices until none remain.
    for (;;) {
      int forced = -1;
      for (int i = 0; i < n_; ++i) {
        int v = order_[static_cast<std::size_t>(i)];
        if (assigned_[static_cast<std::size_t>(v)] == 0 &&
            std::has_single_bit(feasible_[static_cast<std::size_t>(v)])) {
          forced = v;
          break;
        }
      }
      if (forced < 0) break;
      int c = std::countr_zero(feasible_[static_cast<std::size_t>(forced)]) + 1;
      if (!place(forced, c)) {
        unwind(mark);
        return true;
      }
    }
    if (unassigned_ == 0) {
      bool keep = visit(static_cast<const std::uint8_t*>(assigned_.data()));
      unwind(mark);
      return keep;
    }
    int branch = -1;
    for (int i = 0; i < n_; ++i) {
      int v = order_[static_cast<std::size_t>(i)];
      if (assigned_[static_cast<std::size_t>(v)] == 0) {
        branch = v;
        break;
      }
    }
    std::uint64_t options = feasible_[static_cast<std::size_t>(branch)];
    for (std::uint64_t m = options; m != 0; m &= m - 1) {
      int c = std::countr_zero(m) + 1;
      std::size_t sub = trail_.size();
      if (place(branch, c)) {
        if (!explore(visit)) {
          unwind(mark);
          return false;
        }
      }
      unwind(sub);
    }
    unwind(mark);
    return true;
  }

  void charge() {
    if (budget_ != nullptr) budget_->charge();
  }

  const Graph* g_;
  int n_;
  int s_;
  Budget* budget_;
  std::array<int, Graph::kMaxVertices> order_{};
  std::array<std::uint64_t, Graph::kMaxVertices> feasible_{};
  std::array<std::uint8_t, Graph::kMaxVertices> assigned_{};
  struct TrailEntry {
    int vertex;
    int color;
    std::uint64_t affected;
  };
  std::vector<TrailEntry> trail_;
  int unassigned_ = 0;
};

}  // namespace detail

// Number of proper p.s-colorings of g extending p, truncated at cap
// (cap = 0 means unbounded). If capture is non-null, the first extension
// found is stored there whenever the count is at least 1.
inline std::uint64_t count_extensions(const Graph& g, const PartialColoring& p,
                                      std::uint64_t cap = 0, Budget* budget = nullptr,
                                      Coloring* capture = nullptr) {
  Budget local;
  detail::ColoringSearch search(g, p.s, budget != nullptr ? budget : &local);
  std::uint64_t count = 0;
  search.run(p, [&](const std::uint8_t* colors) {
    if (count == 0 && capture != nullptr) {
      capture->s = p.s;
      capture->colors.assign(colors, colors + g.order());
    }
    ++count;
    return cap == 0 || count < cap;
  });
  return count;
}

// Flat list of colorings (count * n color bytes).
struct ColoringList {
  int n = 0;
  int s = 0;
  std::vector<std::uint8_t> flat;

  std::size_t size() const { return flat.size() / static_cast<std::size_t>(n); }
  const std::uint8_t* at(std::size_t i) const { return flat.data() + i * static_cast<std::size_t>(n); }
};

// All proper s-colorings of g, or nullopt once more than max_count exist.
inline std::optional<ColoringList> enumerate_colorings(const Graph& g, int s,
                                                       std::size_t max_count,
                                                       Budget* budget = nullptr) {
  if (g.order() < 1) throw precondition_error("coloring enumeration requires a vertex");
  Budget local;
  detail::ColoringSearch search(g, s, budget != nullptr ? budget : &local);
  ColoringList list;
  list.n = g.order();
  list.s = s;
  std::size_t count = 0;
  bool complete = search.run(PartialColoring(g.order(), s), [&](const std::uint8_t* colors) {
    if (count == max_count) return false;
    ++count;
    list.flat.insert(list.flat.end(), colors, colors + g.order());
    return true;
  });
  if (!complete) return std::nullopt;
  return list;
}

inline bool is_bipartite(const Graph& g) {
  std::array<int, Graph::kMaxVertices> side{};
  for (int start = 0; start < g.order(); ++start) {
    if (side[static_cast<std::size_t>(start)] != 0) continue;
    side[static_cast<std::size_t>(start)] = 1;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (std::uint64_t m = g.neighbors(v); m != 0; m &= m - 1) {
        int u = std::countr_zero(m);
        if (side[static_cast<std::size_t>(u)] == 0) {
          side[static_cast<std::size_t>(u)] = -side[static_cast<std::size_t>(v)];
          queue.push_back(u);
        } else if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Chromatic number; 0 for the empty graph, 1 iff nonempty with no edges.
inline int chromatic_number(const Graph& g, Budget* budget = nullptr) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  if (is_bipartite(g)) return 2;
  for (int s = 3;; ++s) {
    if (count_extensions(g, PartialColoring(g.order(), s), 1, budget) > 0) return s;
  }
}

namespace detail {

// Counts proper chi(g)-colorings in canonical color-introduction order (the
// first occurrence of color i precedes the first occurrence of color i+1),
// which counts partitions into independent sets directly.
inline std::uint64_t count_canonical_colorings(const Graph& g, int s, std::uint64_t cap,
                                               Budget* budget) {
  Budget local;
  Budget* b = budget != nullptr ? budget : &local;
  int n = g.order();
  std::array<std::uint8_t, Graph::kMaxVertices> color{};
  std::uint64_t count = 0;
  // Plain backtracking in natural vertex order; the canonical constraint
  // caps vertex v's color at (max color used so far) + 1.
  auto rec = [&](auto&& self, int v, int used) -> bool {
    b->charge();
    if (v == n) {
      ++count;
      return cap == 0 || count < cap;
    }
    std::uint64_t taken = 0;
    for (std::uint64_t m = g.neighbors(v) & ((std::uint64_t{1} << v) - 1); m != 0; m &= m - 1)
      taken |= std::uint64_t{1} << (color[static_cast<std::size_t>(std::countr_zero(m))] - 1);
    int limit = used < s ? used + 1 : s;
    for (int c = 1; c <= limit; ++c) {
      if ((taken >> (c - 1)) & 1u) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (!self(self, v + 1, c > used ? c : used)) return false;
    }
    return true;
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace detail

// Theta(g): number of partitions of V into chi(g) independent sets.
inline std::uint64_t count_partitions(const Graph& g, Budget* budget = nullptr) {
  if (g.order() < 1) throw precondition_error("count_partitions requires at least one vertex");
  int s = chromatic_number(g, budget);
  return detail::count_canonical_colorings(g, s, 0, budget);
}

inline bool is_uniquely_colorable(const Graph& g, Budget* budget = nullptr) {
  if (g.order() < 1) throw precondition_error("uniquely-colorable test requires a vertex");
  int s = chromatic_number(g, budget);
  return detail::count_canonical_colorings(g, s, 2, budget) == 1;
}

inline bool in_u3col(const Graph& g, Budget* budget = nullptr) {
  if (g.order() < 1) throw precondition_error("U3COL test requires a vertex");
  if (chromatic_number(g, budget) != 3) return false;
  return detail::count_canonical_colorings(g, 3, 2, budget) == 1;
}

enum class Factor { left, right };

// Lifts a proper coloring of one factor to the categorical product g.h,
// constant along the other factor's coordinate.
inline Coloring induced_coloring(const Coloring& factor_coloring, Factor which, const Graph& g,
                                 const Graph& h) {
  const Graph& factor = which == Factor::left ? g : h;
  if (!is_proper(factor, factor_coloring))
    throw precondition_error("induced coloring requires a proper factor coloring");
  std::vector<int> colors(static_cast<std::size_t>(g.order()) * h.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      colors[static_cast<std::size_t>(a * h.order() + b)] =
          which == Factor::left ? factor_coloring.colors[static_cast<std::size_t>(a)]
                                : factor_coloring.colors[static_cast<std::size_t>(b)];
  return Coloring(factor_coloring.s, std::move(colors));
}

// G_k: k copies of the prism K3 x K2 sharing the two distinguished vertices
// u and v. 4k+2 vertices, 3-chromatic; Theta = 2^(k-1)+1 and the pair {u,v}
// is forcing. Vertex 0 is u, vertex 1 is v; copy i adds vertices
// 2+4i..5+4i (w, m, t, b).
inline Graph gk_family(int k) {
  if (k < 1) throw precondition_error("gk_family requires k >= 1");
  std::vector<std::pair<int, int>> e;
  int u = 0, v = 1;
  for (int i = 0; i < k; ++i) {
    int w = 2 + 4 * i, m = 3 + 4 * i, t = 4 + 4 * i, b = 5 + 4 * i;
    // triangle u,w,m; triangle t,b,v; rungs u-t, w-b, m-v
    e.insert(e.end(), {{u, w}, {u, m}, {w, m}, {t, b}, {t, v}, {b, v}, {u, t}, {w, b}, {m, v}});
  }
  return Graph(4 * k + 2, std::span<const std::pair<int, int>>(e));
}

}  // namespace forcing
