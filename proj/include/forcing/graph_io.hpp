// graph6 and DIMACS col import/export.
//
// graph6 layout: order n as one byte 63+n when n <= 62, otherwise 126
// followed by three bytes carrying 18 big-endian bits (each byte 63+6 bits);
// then the upper triangle x(i,j), i<j, in column-major order (j=1..n-1,
// i=0..j-1), packed 6 bits per byte big-endian, zero-padded, each byte
// offset by 63.
#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forcing/errors.hpp"
#include "forcing/graph.hpp"

namespace forcing {

inline Graph parse_graph6(std::string_view text) {
  // Strip one trailing newline so raw geng/showg lines parse as-is.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw parse_error("empty graph6 string", 0);

  std::size_t pos = 0;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw parse_error("truncated graph6 string", text.size());
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw parse_error("graph6 character out of range", i);
    return c;
  };

  long long n = 0;
  if (byte_at(0) == 126) {
    if (text.size() >= 2 && byte_at(1) == 126)
      throw parse_error("graph6 orders beyond 258047 are not supported", 1);
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (byte_at(i) - 63);
    pos = 4;
  } else {
    n = byte_at(0) - 63;
    pos = 1;
  }
  if (n > Graph::kMaxVertices)
    throw capacity_error("graph6 order " + std::to_string(n) + " exceeds the 64-vertex limit");

  int order = static_cast<int>(n);
  std::size_t nbits = static_cast<std::size_t>(order) * (order - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < pos + nbytes) throw parse_error("truncated graph6 bit payload", text.size());
  if (text.size() > pos + nbytes)
    throw parse_error("trailing characters after graph6 payload", pos + nbytes);

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int b = byte_at(pos + bit / 6) - 63;
      if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  // Padding bits must be zero.
  for (; bit < nbytes * 6; ++bit) {
    int b = byte_at(pos + bit / 6) - 63;
    if ((b >> (5 - bit % 6)) & 1)
      throw parse_error("nonzero padding bit in graph6 payload", pos + bit / 6);
  }
  return Graph(order, std::span<const std::pair<int, int>>(edges));
}

inline std::string emit_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3f)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3f)));
    out.push_back(static_cast<char>(63 + (n & 0x3f)));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// DIMACS col format: optional "c" comment lines, one "p edge <n> <m>" line,
// then "e <u> <v>" lines with 1-based endpoints.
inline Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long nn = -1, mm = -1;
      if (!(ls >> kind >> nn >> mm) || (kind != "edge" && kind != "col"))
        throw parse_error("malformed DIMACS problem line", line_start);
      if (n >= 0) throw parse_error("duplicate DIMACS problem line", line_start);
      if (nn < 0 || nn > Graph::kMaxVertices)
        throw capacity_error("DIMACS order exceeds the 64-vertex limit");
      n = static_cast<int>(nn);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw parse_error("DIMACS edge before problem line", line_start);
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw parse_error("malformed DIMACS edge line", line_start);
      if (u < 1 || v < 1 || u > n || v > n)
        throw parse_error("DIMACS edge endpoint out of range", line_start);
      if (u != v) edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw parse_error("unrecognized DIMACS line", line_start);
  }
  if (n < 0) throw parse_error("missing DIMACS problem line", 0);
  return Graph(n, std::span<const std::pair<int, int>>(edges));
}

inline std::string emit_dimacs(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace forcing
