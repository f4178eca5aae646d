// Forcing chromatic number F(G): smallest vertex set admitting a partial
// coloring with a unique proper chi(G)-extension. Also the maximum size of an
// inclusion-minimal forcing set fF(G), the logarithmic greedy construction,
// and the forcing-pair recognition reduction.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "forcing/coloring.hpp"
#include "forcing/errors.hpp"
#include "forcing/graph.hpp"

namespace forcing {

struct ForcingCertificate {
  VertexSet defining_set;
  PartialColoring partial;  // on defining_set, with s = chi(g)
  Coloring forced;          // the unique proper extension
};

struct ForcingNumber {
  int value = 0;
  ForcingCertificate certificate;
};

namespace detail {

// Per-graph search context. When the full list of proper chi-colorings is
// small enough we answer "is D forcing" by projection multiplicities over
// that list; otherwise we fall back to enumerating canonical patterns on D
// and counting extensions with cap 2.
class ForcingContext {
 public:
  static constexpr std::size_t kListCap = 8192;

  ForcingContext(const Graph& g, Budget* budget) : g_(&g), budget_(budget) {
    if (g.order() < 1) throw precondition_error("forcing search requires at least one vertex");
    s_ = chromatic_number(g, budget);
    list_ = enumerate_colorings(g, s_, kListCap, budget);
  }

  int chi() const { return s_; }

  // Patterns on D are enumerated up to global color permutation by fixing
  // the canonical introduction order of colors along D's vertices in
  // ascending index order (restricted growth strings). The certificate is
  // the lexicographically least forcing pattern.
  std::optional<ForcingCertificate> test(std::uint64_t d) const {
    if (budget_ != nullptr) budget_->charge();
    return list_.has_value() ? test_by_list(d) : test_by_patterns(d);
  }

 private:
  std::optional<ForcingCertificate> test_by_list(std::uint64_t d) const {
    const ColoringList& list = *list_;
    std::vector<int> dverts = VertexSet{d}.members();
    std::size_t count = list.size();
    // Sort coloring indices by their projection onto d; runs of length one
    // are the uniquely-projecting colorings.
    std::vector<std::uint32_t> idx(count);
    for (std::uint32_t i = 0; i < count; ++i) idx[i] = i;
    auto proj_less = [&](std::uint32_t a, std::uint32_t b) {
      const std::uint8_t* ca = list.at(a);
      const std::uint8_t* cb = list.at(b);
      for (int v : dverts) {
        if (ca[v] != cb[v]) return ca[v] < cb[v];
      }
      return false;
    };
    auto proj_equal = [&](std::uint32_t a, std::uint32_t b) {
      const std::uint8_t* ca = list.at(a);
      const std::uint8_t* cb = list.at(b);
      for (int v : dverts)
        if (ca[v] != cb[v]) return false;
      return true;
    };
    std::sort(idx.begin(), idx.end(), proj_less);

    bool have_best = false;
    std::vector<int> best_pattern;
    std::uint32_t best_index = 0;
    for (std::size_t i = 0; i < count;) {
      std::size_t j = i + 1;
      while (j < count && proj_equal(idx[i], idx[j])) ++j;
      if (j - i == 1) {
        std::vector<int> pattern = canonical_pattern(list.at(idx[i]), dverts);
        if (!have_best || pattern < best_pattern) {
          have_best = true;
          best_pattern = std::move(pattern);
          best_index = idx[i];
        }
      }
      i = j;
    }
    if (!have_best) return std::nullopt;
    return build_certificate(d, dverts, best_pattern, list.at(best_index));
  }

  // Canonical relabeling of the colors a coloring takes on d's vertices.
  static std::vector<int> canonical_pattern(const std::uint8_t* colors,
                                            const std::vector<int>& dverts) {
    std::vector<int> relabel(65, 0);
    std::vector<int> pattern;
    pattern.reserve(dverts.size());
    int next = 0;
    for (int v : dverts) {
      int& r = relabel[colors[v]];
      if (r == 0) r = ++next;
      pattern.push_back(r);
    }
    return pattern;
  }

  ForcingCertificate build_certificate(std::uint64_t d, const std::vector<int>& dverts,
                                       const std::vector<int>& pattern,
                                       const std::uint8_t* source) const {
    // Extend the canonical relabeling of colors on D to a full permutation
    // of 1..s and apply it to the source coloring.
    std::vector<int> sigma(static_cast<std::size_t>(s_) + 1, 0);
    std::vector<bool> used(static_cast<std::size_t>(s_) + 1, false);
    for (std::size_t i = 0; i < dverts.size(); ++i) {
      int from = source[dverts[i]], to = pattern[i];
      sigma[static_cast<std::size_t>(from)] = to;
      used[static_cast<std::size_t>(to)] = true;
    }
    int next = 1;
    for (int c = 1; c <= s_; ++c) {
      if (sigma[static_cast<std::size_t>(c)] != 0) continue;
      while (used[static_cast<std::size_t>(next)]) ++next;
      sigma[static_cast<std::size_t>(c)] = next;
      used[static_cast<std::size_t>(next)] = true;
    }
    PartialColoring partial(g_->order(), s_);
    for (std::size_t i = 0; i < dverts.size(); ++i) partial.assign(dverts[i], pattern[i]);
    std::vector<int> forced(static_cast<std::size_t>(g_->order()));
    for (int v = 0; v < g_->order(); ++v)
      forced[static_cast<std::size_t>(v)] = sigma[source[v]];
    return ForcingCertificate{VertexSet{d}, std::move(partial), Coloring(s_, std::move(forced))};
  }

  std::optional<ForcingCertificate> test_by_patterns(std::uint64_t d) const {
    std::vector<int> dverts = VertexSet{d}.members();
    std::vector<int> pattern(dverts.size(), 0);
    return pattern_rec(d, dverts, pattern, 0, 0);
  }

  std::optional<ForcingCertificate> pattern_rec(std::uint64_t d, const std::vector<int>& dverts,
                                                std::vector<int>& pattern, std::size_t pos,
                                                int used) const {
    if (pos == dverts.size()) {
      PartialColoring partial(g_->order(), s_);
      for (std::size_t i = 0; i < dverts.size(); ++i) partial.assign(dverts[i], pattern[i]);
      Coloring forced;
      if (count_extensions(*g_, partial, 2, budget_, &forced) == 1)
        return ForcingCertificate{VertexSet{d}, std::move(partial), std::move(forced)};
      return std::nullopt;
    }
    int limit = used < s_ ? used + 1 : s_;
    for (int c = 1; c <= limit; ++c) {
      // Skip patterns already improper on D.
      bool clash = false;
      for (std::size_t i = 0; i < pos && !clash; ++i)
        clash = pattern[i] == c && g_->adjacent(dverts[i], dverts[pos]);
      if (clash) continue;
      pattern[pos] = c;
      if (auto cert = pattern_rec(d, dverts, pattern, pos + 1, c > used ? c : used))
        return cert;
    }
    return std::nullopt;
  }

  const Graph* g_;
  int s_ = 0;
  Budget* budget_;
  std::optional<ColoringList> list_;
};

// Lexicographic enumeration of size-k subsets of 0..n-1. Returns false when
// exhausted.
inline bool first_combination(std::vector<int>& comb, int n, int k) {
  if (k > n) return false;
  comb.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
  return true;
}

inline bool next_combination(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[static_cast<std::size_t>(i)] < n - k + i) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

inline std::uint64_t mask_of(const std::vector<int>& comb) {
  std::uint64_t m = 0;
  for (int v : comb) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace detail

// Does d admit a partial coloring with exactly one proper chi(g)-extension?
inline std::optional<ForcingCertificate> is_forcing_set(const Graph& g, VertexSet d,
                                                        Budget* budget = nullptr) {
  if ((d.bits & ~g.vertex_mask()) != 0)
    throw precondition_error("candidate set contains vertices outside the graph");
  Budget local;
  detail::ForcingContext ctx(g, budget != nullptr ? budget : &local);
  return ctx.test(d.bits);
}

// First forcing set of exactly the given size in lexicographic order, if any.
inline std::optional<ForcingCertificate> forcing_set_of_size(const Graph& g, int k,
                                                             Budget* budget = nullptr) {
  Budget local;
  Budget* b = budget != nullptr ? budget : &local;
  detail::ForcingContext ctx(g, b);
  std::vector<int> comb;
  if (!detail::first_combination(comb, g.order(), k)) return std::nullopt;
  do {
    if (auto cert = ctx.test(detail::mask_of(comb))) return cert;
  } while (detail::next_combination(comb, g.order()));
  return std::nullopt;
}

// F(g) with a witness certificate. Subsets are searched in ascending size,
// lexicographic within a size; the first hit wins.
inline ForcingNumber forcing_chromatic_number(const Graph& g, Budget* budget = nullptr) {
  Budget local;
  Budget* b = budget != nullptr ? budget : &local;
  detail::ForcingContext ctx(g, b);
  for (int k = 0; k <= g.order(); ++k) {
    std::vector<int> comb;
    if (!detail::first_combination(comb, g.order(), k)) break;
    do {
      if (auto cert = ctx.test(detail::mask_of(comb))) return ForcingNumber{k, std::move(*cert)};
    } while (detail::next_combination(comb, g.order()));
  }
  // Unreachable: the full vertex set always forces (a complete coloring is
  // its own unique extension).
  throw error("internal error: no forcing set found");
}

// Largest size of an inclusion-minimal forcing set among sets of size at
// most size_cap (forcing sets are upward closed, so a minimal set is one
// whose one-element removals all fail to force).
inline int max_minimal_forcing(const Graph& g, int size_cap = 8, Budget* budget = nullptr) {
  Budget local;
  Budget* b = budget != nullptr ? budget : &local;
  detail::ForcingContext ctx(g, b);
  int n = g.order();
  int cap = size_cap < n ? size_cap : n;

  std::unordered_map<std::uint64_t, bool> memo;
  auto forcing = [&](std::uint64_t d) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    bool f = ctx.test(d).has_value();
    memo.emplace(d, f);
    return f;
  };

  if (forcing(0)) return 0;  // unique coloring overall (chi = 1)
  int best = -1;
  for (int k = 1; k <= cap; ++k) {
    std::vector<int> comb;
    if (!detail::first_combination(comb, n, k)) break;
    do {
      std::uint64_t d = detail::mask_of(comb);
      if (!forcing(d)) continue;
      bool minimal = true;
      for (int v : comb) {
        if (forcing(d & ~(std::uint64_t{1} << v))) {
          minimal = false;
          break;
        }
      }
      if (minimal && k > best) best = k;
    } while (detail::next_combination(comb, n));
  }
  if (best < 0)
    throw budget_error("no forcing set within the size cap; fF exceeds " +
                           std::to_string(cap),
                       cap + 1, std::nullopt);
  return best;
}

// The halving construction: start from the list of all proper
// chi-colorings; repeatedly pick the first vertex where the surviving
// colorings disagree, pin it to its least frequent color there (smallest
// color on ties), and keep only the colorings that agree. Yields a
// certificate with |D| <= floor(log2(chi! * Theta)).
inline ForcingCertificate greedy_forcing_set(const Graph& g, Budget* budget = nullptr) {
  if (g.order() < 1) throw precondition_error("greedy construction requires a vertex");
  Budget local;
  Budget* b = budget != nullptr ? budget : &local;
  int s = chromatic_number(g, b);
  auto list = enumerate_colorings(g, s, std::size_t{1} << 22, b);
  if (!list.has_value())
    throw capacity_error("too many proper colorings for the greedy construction");

  std::vector<std::uint32_t> live(list->size());
  for (std::uint32_t i = 0; i < live.size(); ++i) live[i] = i;
  PartialColoring partial(g.order(), s);
  VertexSet dset;
  while (live.size() > 1) {
    int pick = -1;
    for (int v = 0; v < g.order() && pick < 0; ++v) {
      std::uint8_t c0 = list->at(live[0])[v];
      for (std::uint32_t i : live)
        if (list->at(i)[v] != c0) {
          pick = v;
          break;
        }
    }
    // pick >= 0: distinct colorings must disagree somewhere.
    std::array<std::uint32_t, 65> freq{};
    for (std::uint32_t i : live) ++freq[list->at(i)[pick]];
    int chosen = 0;
    for (int c = 1; c <= s; ++c)
      if (freq[static_cast<std::size_t>(c)] > 0 &&
          (chosen == 0 || freq[static_cast<std::size_t>(c)] < freq[static_cast<std::size_t>(chosen)]))
        chosen = c;
    partial.assign(pick, chosen);
    dset.add(pick);
    std::vector<std::uint32_t> next;
    for (std::uint32_t i : live)
      if (list->at(i)[pick] == chosen) next.push_back(i);
    live = std::move(next);
  }
  const std::uint8_t* survivor = list->at(live[0]);
  std::vector<int> forced(survivor, survivor + g.order());
  return ForcingCertificate{dset, std::move(partial), Coloring(s, std::move(forced))};
}

// Forcing-pair recognition instance: the graph together with the
// lexicographically first edge. Edgeless inputs map to the fixed instance
// (2K2, {0,1}), whose pair does not force: the untouched second component
// always keeps two extensions.
struct RecognitionInstance {
  Graph graph;
  int u = 0;
  int v = 0;
};

inline RecognitionInstance recognition_reduction(const Graph& g) {
  if (g.edge_count() == 0) return RecognitionInstance{matching(2), 0, 1};
  auto e = g.edges().front();
  return RecognitionInstance{g, e.first, e.second};
}

}  // namespace forcing
