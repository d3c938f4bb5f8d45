#pragma once

// Shared random generators and definition-level reference implementations for
// the unit and acceptance suites. The references here are deliberately
// independent of the library's implementation paths: full enumeration with no
// pruning, and a backtracker with no propagation.

#include <optional>
#include <random>
#include <vector>

#include "olc/core.hpp"
#include "olc/patterns.hpp"

namespace testgen {

using Rng = std::mt19937;

inline olc::OrderedGraph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution edge(p);
  olc::OrderedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

inline olc::ColorList random_list(Rng& rng, int kmax, int min_size, int max_size) {
  std::uniform_int_distribution<int> size_dist(min_size, std::min(max_size, kmax));
  const int size = size_dist(rng);
  std::vector<int> colors(kmax);
  for (int c = 0; c < kmax; ++c) colors[c] = c + 1;
  std::shuffle(colors.begin(), colors.end(), rng);
  colors.resize(size);
  return olc::normalized_list(std::move(colors));
}

inline std::vector<olc::ColorList> random_lists(Rng& rng, int n, int kmax, int min_size,
                                                int max_size) {
  std::vector<olc::ColorList> lists;
  for (int v = 0; v < n; ++v) lists.push_back(random_list(rng, kmax, min_size, max_size));
  return lists;
}

inline olc::Instance random_instance(Rng& rng, int n, double p, int kmax, int min_size = 1,
                                     int max_size = 100) {
  return olc::Instance{random_graph(n, p, rng),
                       random_lists(rng, n, kmax, min_size, std::min(max_size, kmax)),
                       std::nullopt};
}

// Fork-free ordered graphs built directly: each vertex's forward neighborhood
// is a random subset of some later vertex's bag, hence a clique.
inline olc::OrderedGraph random_fork_free_graph(int n, Rng& rng, double keep = 0.6,
                                                double attach = 0.8) {
  olc::OrderedGraph g(n);
  std::vector<std::vector<int>> bag(n);
  std::bernoulli_distribution keep_dist(keep);
  std::bernoulli_distribution attach_dist(attach);
  for (int v = n - 1; v >= 0; --v) {
    bag[v] = {v};
    if (v == n - 1 || !attach_dist(rng)) continue;
    std::uniform_int_distribution<int> pick(v + 1, n - 1);
    const int w = pick(rng);
    std::vector<int> fwd;
    for (int u : bag[w])
      if (keep_dist(rng)) fwd.push_back(u);
    if (fwd.empty()) fwd.push_back(w);
    for (int u : fwd) {
      g.add_edge(v, u);
      bag[v].push_back(u);
    }
  }
  return g;
}

// Rejection sampler for graphs avoiding all given patterns (and, optionally,
// K5). Returns the first hit; lowers n if the cap is exhausted.
inline olc::OrderedGraph sample_pattern_free(Rng& rng, int n, double p,
                                             const std::vector<olc::Pattern>& avoid,
                                             bool k5_free, int attempts = 20000) {
  for (int round = 0; round < attempts; ++round) {
    auto g = random_graph(n, p, rng);
    bool ok = true;
    for (const auto& pat : avoid)
      if (olc::find_induced(g, pat)) {
        ok = false;
        break;
      }
    if (ok && k5_free && olc::contains_clique(g, 5)) ok = false;
    if (ok) return g;
  }
  if (n <= 1) throw std::runtime_error("sample_pattern_free: exhausted attempts");
  return sample_pattern_free(rng, n - 1, p, avoid, k5_free, attempts);
}

// Definition-level reference: enumerate every |V(p)|-subset in lexicographic
// order and test order-isomorphism outright. No pruning.
inline std::optional<std::vector<olc::Vertex>> brute_find_induced(const olc::OrderedGraph& g,
                                                                  const olc::Pattern& p) {
  const int m = p.graph.size();
  const int n = g.size();
  if (m > n) return std::nullopt;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    bool match = true;
    for (int i = 0; i < m && match; ++i)
      for (int j = i + 1; j < m && match; ++j)
        match = g.has_edge(idx[i], idx[j]) == p.graph.has_edge(i, j);
    if (match) return std::vector<olc::Vertex>(idx.begin(), idx.end());
    int pos = m - 1;
    while (pos >= 0 && idx[pos] == n - m + pos) --pos;
    if (pos < 0) return std::nullopt;
    ++idx[pos];
    for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// Reference solver: plain backtracking in index order, colors ascending, no
// propagation of any kind.
inline std::optional<olc::Coloring> plain_backtracker(const olc::Instance& inst) {
  const int n = inst.size();
  olc::Coloring col(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (olc::Color c : inst.lists[v]) {
      bool ok = true;
      for (olc::Vertex u : inst.graph.neighbors(v))
        if (u < v && col[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[v] = c;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0)) return col;
  return std::nullopt;
}

// Enumerates all list colorings of inst (index order), invoking fn on each.
template <class Fn>
void for_each_coloring(const olc::Instance& inst, Fn&& fn) {
  const int n = inst.size();
  olc::Coloring col(n, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      fn(static_cast<const olc::Coloring&>(col));
      return;
    }
    for (olc::Color c : inst.lists[v]) {
      bool ok = true;
      for (olc::Vertex u : inst.graph.neighbors(v))
        if (u < v && col[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[v] = c;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace testgen
