// Simple undirected graphs on at most 64 vertices, stored as symmetric
// adjacency bit rows. Values are immutable after construction; every
// "modifying" operation returns a new graph.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forcing/errors.hpp"

namespace forcing {

// Subset of the vertices of some host graph, as a bit mask. Bit v set means
// vertex v is in the set. The host's vertex count bounds the valid bits.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : bits(mask) {}

  bool contains(int v) const { return (bits >> v) & 1u; }
  void add(int v) { bits |= std::uint64_t{1} << v; }
  void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  // Smallest member; undefined on the empty set.
  int smallest() const { return std::countr_zero(bits); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = bits; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : n_(checked_order(n)) {}

  Graph(int n, std::span<const std::pair<int, int>> edges) : n_(checked_order(n)) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : n_(checked_order(n)) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }

  std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  // Mask with bits 0..n-1 set.
  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  // Edges in lexicographic order (u < v; sorted by u, then v).
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
      std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
      for (std::uint64_t m = higher; m != 0; m &= m - 1)
        out.emplace_back(u, u + 1 + std::countr_zero(m));
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  static int checked_order(int n) {
    if (n < 0) throw precondition_error("vertex count must be non-negative");
    if (n > kMaxVertices)
      throw capacity_error("graph exceeds the " + std::to_string(kMaxVertices) +
                           "-vertex limit");
    return n;
  }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw precondition_error("edge endpoint out of range");
    if (u == v) throw precondition_error("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// ---- standard constructions ----

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::span<const std::pair<int, int>>(e));
}

inline Graph cycle(int n) {
  if (n < 3) throw precondition_error("cycle requires at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::span<const std::pair<int, int>>(e));
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::span<const std::pair<int, int>>(e));
}

// m disjoint edges {2i, 2i+1} on 2m vertices.
inline Graph matching(int m) {
  if (m < 0) throw precondition_error("matching requires m >= 0");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * m, std::span<const std::pair<int, int>>(e));
}

// ---- products and combinations ----
//
// Product vertex (a, b) gets index a*h.order() + b, so layer extraction is
// arithmetic. Both products check the 64-vertex capacity.

namespace detail {
inline int product_order(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.order()) * h.order();
  if (n > Graph::kMaxVertices)
    throw capacity_error("product graph exceeds the 64-vertex limit");
  return static_cast<int>(n);
}
}  // namespace detail

// Cartesian product: (a,b) ~ (a',b') iff a=a' and bb' in E(h), or b=b' and
// aa' in E(g).
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  int hn = h.order();
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < hn; ++b) {
      for (int b2 = b + 1; b2 < hn; ++b2)
        if (h.adjacent(b, b2)) e.emplace_back(a * hn + b, a * hn + b2);
      for (int a2 = a + 1; a2 < g.order(); ++a2)
        if (g.adjacent(a, a2)) e.emplace_back(a * hn + b, a2 * hn + b);
    }
  return Graph(detail::product_order(g, h), std::span<const std::pair<int, int>>(e));
}

// Categorical product: (a,b) ~ (a',b') iff aa' in E(g) and bb' in E(h).
inline Graph categorical_product(const Graph& g, const Graph& h) {
  int hn = h.order();
  std::vector<std::pair<int, int>> e;
  for (auto [a, a2] : g.edges())
    for (auto [b, b2] : h.edges()) {
      e.emplace_back(a * hn + b, a2 * hn + b2);
      e.emplace_back(a * hn + b2, a2 * hn + b);
    }
  return Graph(detail::product_order(g, h), std::span<const std::pair<int, int>>(e));
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.order()) + h.order();
  if (n > Graph::kMaxVertices)
    throw capacity_error("disjoint union exceeds the 64-vertex limit");
  std::vector<std::pair<int, int>> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(g.order() + u, g.order() + v);
  return Graph(static_cast<int>(n), std::span<const std::pair<int, int>>(e));
}

inline Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.order(), std::span<const std::pair<int, int>>(e));
}

// Connected components, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((seen >> v) & 1u) continue;
    std::uint64_t comp = std::uint64_t{1} << v;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m != 0; m &= m - 1)
        next |= g.neighbors(std::countr_zero(m));
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(VertexSet{comp});
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return connected_components(g).size() == 1;
}

}  // namespace forcing
