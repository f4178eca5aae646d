// Deterministic enumeration of labeled graphs on up to 7 vertices, with the
// standard premise filters, plus the seeded linear congruential generator
// used for reproducible random sampling (documented in the README).
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "forcing/coloring.hpp"
#include "forcing/errors.hpp"
#include "forcing/graph.hpp"

namespace forcing {

// x -> x * 6364136223846793005 + 1442695040888963407; draws take the top 31
// bits. Fixed here so reports are reproducible across implementations.
struct Lcg {
  std::uint64_t state = 0;

  explicit Lcg(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }

  // Uniform-ish draw in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) { return (next() >> 33) % bound; }
};

// Edge-mask bit order matches graph6: bit b corresponds to the b-th pair
// (i, j), i < j, in column-major order (j ascending, i ascending within j).
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if ((mask >> b) & 1u) edges.emplace_back(i, j);
  return Graph(n, std::span<const std::pair<int, int>>(edges));
}

inline std::uint64_t edge_mask_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

namespace detail {
constexpr int kMaxEnumerationOrder = 7;

inline void check_enumeration_order(int max_n) {
  if (max_n < 1) throw precondition_error("enumeration requires max_n >= 1");
  if (max_n > kMaxEnumerationOrder)
    throw capacity_error("labeled enumeration is capped at 7 vertices");
}
}  // namespace detail

// Number of labeled graphs on 1..max_n vertices.
inline std::uint64_t labeled_graph_count(int max_n) {
  detail::check_enumeration_order(max_n);
  std::uint64_t total = 0;
  for (int n = 1; n <= max_n; ++n) total += edge_mask_count(n);
  return total;
}

// The index-th labeled graph, in order: vertex count ascending, edge mask
// ascending. Pure, so enumeration parallelizes by index range.
inline Graph labeled_graph_at(int max_n, std::uint64_t index) {
  detail::check_enumeration_order(max_n);
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t block = edge_mask_count(n);
    if (index < block) return graph_from_edge_mask(n, index);
    index -= block;
  }
  throw precondition_error("labeled graph index out of range");
}

using GraphPredicate = std::function<bool(const Graph&)>;

namespace filters {
inline bool any(const Graph&) { return true; }
inline bool connected(const Graph& g) { return is_connected(g); }
inline bool nonempty(const Graph& g) { return g.edge_count() > 0; }
inline bool chromatic_at_least_3(const Graph& g) {
  return g.edge_count() > 0 && !is_bipartite(g);
}
inline bool bipartite_with_edge(const Graph& g) {
  return g.edge_count() > 0 && is_bipartite(g);
}
inline bool contains_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if ((g.neighbors(u) & g.neighbors(v)) != 0) return true;
  return false;
}
}  // namespace filters

// All labeled graphs on 1..max_n vertices passing the filter, in
// deterministic order.
inline void enumerate_graphs(int max_n, const GraphPredicate& filter,
                             const std::function<void(const Graph&)>& visit) {
  std::uint64_t total = labeled_graph_count(max_n);
  for (std::uint64_t i = 0; i < total; ++i) {
    Graph g = labeled_graph_at(max_n, i);
    if (!filter || filter(g)) visit(g);
  }
}

}  // namespace forcing
