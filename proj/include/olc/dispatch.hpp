#pragma once

#include <optional>
#include <string>
#include <utility>

#include "olc/core.hpp"
#include "olc/easy_solvers.hpp"
#include "olc/ljj4.hpp"
#include "olc/oracle.hpp"
#include "olc/patterns.hpp"
#include "olc/single_edge.hpp"

// Route selection for `solve --algo auto`: two-list when all lists have size
// at most 2, chordal when fork-free, clique-matching when complete, then the
// structured solvers when their pattern-freeness and palette checks pass,
// and the exact oracle otherwise.

namespace olc {

struct AutoResult {
  std::optional<Coloring> coloring;
  std::string route;
};

inline AutoResult solve_auto(const Instance& inst) {
  inst.validate();
  const int n = inst.size();

  bool all_two = true;
  Color max_color = 0;
  for (const auto& l : inst.lists) {
    all_two = all_two && l.size() <= 2;
    if (!l.empty()) max_color = std::max(max_color, l.back());
  }
  if (all_two) return {solve_two_lists(inst), "two-list"};

  if (is_free(inst.graph, fork())) return {solve_fork_free(inst), "chordal"};

  bool complete = true;
  for (Vertex u = 0; u < n && complete; ++u)
    for (Vertex v = u + 1; v < n && complete; ++v) complete = inst.graph.has_edge(u, v);
  if (complete && n > 0) return {solve_clique_unbounded(inst), "clique-matching"};

  if (max_color <= 4 && is_free(inst.graph, padded_edge(1)))
    return {solve_single_edge_free(inst, std::max<Color>(max_color, 1), 1), "single-edge"};

  if (max_color <= 4 && is_free(inst.graph, padded_fork(1)))
    return {solve4_padded_fork_free(inst, 1), "ljj4"};

  return {solve_exact(inst), "oracle"};
}

}  // namespace olc
