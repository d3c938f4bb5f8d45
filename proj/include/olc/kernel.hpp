#pragma once

#include <deque>
#include <utility>
#include <vector>

#include "olc/core.hpp"

// Exhaustive application of the two reduction rules:
//   (R1) a vertex with an empty list -> NO,
//   (R2) a vertex v with list {a}: remove a from all neighbor lists, drop v.
// Singleton vertices are processed in a FIFO queue seeded in index order, so
// the removal trace is deterministic.

namespace olc {

struct ReducedInstance {
  bool no = false;
  Instance original;
  Instance instance;                             // surviving vertices, lists of size >= 2
  std::vector<std::pair<Vertex, Color>> trace;   // (R2) removals in order
  std::vector<Vertex> index_map;                 // surviving index -> original index
};

inline ReducedInstance kernelize(const Instance& inst) {
  inst.validate();
  const int n = inst.size();
  ReducedInstance out;
  out.original = inst;

  auto lists = inst.lists;
  std::vector<char> alive(n, 1);
  std::vector<char> queued(n, 0);
  std::deque<Vertex> q;
  for (Vertex v = 0; v < n; ++v) {
    if (lists[v].empty()) {
      out.no = true;
      return out;
    }
    if (lists[v].size() == 1) {
      q.push_back(v);
      queued[v] = 1;
    }
  }

  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop_front();
    const Color a = lists[v].front();
    alive[v] = 0;
    out.trace.emplace_back(v, a);
    for (Vertex u : inst.graph.neighbors(v)) {
      if (!alive[u]) continue;
      if (!list_erase(lists[u], a)) continue;
      if (lists[u].empty()) {
        out.no = true;
        return out;
      }
      if (lists[u].size() == 1 && !queued[u]) {
        q.push_back(u);
        queued[u] = 1;
      }
    }
  }

  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) out.index_map.push_back(v);
  std::vector<ColorList> kept;
  kept.reserve(out.index_map.size());
  for (Vertex v : out.index_map) kept.push_back(lists[v]);
  out.instance = Instance{inst.graph.induced(out.index_map), std::move(kept), inst.k};
  return out;
}

// Merges the forced colors back into a proper coloring of the original.
inline Coloring lift(const ReducedInstance& red, const Coloring& col) {
  if (red.no) throw PreconditionError("lift: reduction returned NO");
  if (!is_proper(red.instance, col))
    throw PreconditionError("lift: coloring is not proper on the reduced instance");
  Coloring full(red.original.size(), 0);
  for (std::size_t i = 0; i < red.index_map.size(); ++i) full[red.index_map[i]] = col[i];
  for (const auto& [v, a] : red.trace) full[v] = a;
  if (!is_proper(red.original, full))
    throw InternalError("lift: merged coloring is improper on the original instance");
  return full;
}

}  // namespace olc
