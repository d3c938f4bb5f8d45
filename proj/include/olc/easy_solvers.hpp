#pragma once

#include <map>
#include <optional>
#include <vector>

#include "olc/core.hpp"
#include "olc/patterns.hpp"

// The three polynomial solvers used as primitives elsewhere:
//   solve_two_lists        - lists of size <= 2, via 2-SAT over an implication graph
//   solve_fork_free        - fork-free ordered graphs, DP over the clique tree
//   solve_clique_unbounded - complete graphs, vertex-color bipartite matching

namespace olc {

namespace detail {

// Kosaraju strongly-connected components. Component ids follow the
// topological order of the condensation: sources small, sinks large.
inline std::vector<int> scc_components(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> radj(n);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) radj[v].push_back(u);

  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    // iterative DFS recording finish order
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < adj[u].size()) {
        const int v = adj[u][i++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(n, -1);
  int next = 0;
  for (int idx = n - 1; idx >= 0; --idx) {
    const int s = order[idx];
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : radj[u]) {
        if (comp[v] == -1) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

// 2-SAT encoding: one boolean per vertex, true = the smaller color of its
// list; for each edge and each shared color, a not-both clause. Solved by
// strongly-connected-component analysis of the implication graph.
inline std::optional<Coloring> solve_two_lists(const Instance& inst) {
  inst.validate();
  const int n = inst.size();
  for (const auto& l : inst.lists)
    if (l.size() > 2)
      throw PreconditionError("solve_two_lists: a list has more than 2 colors");
  for (const auto& l : inst.lists)
    if (l.empty()) return std::nullopt;

  // Node 2v = "x_v false", 2v+1 = "x_v true".
  std::vector<std::vector<int>> imp(2 * n);
  auto node = [](Vertex v, bool val) { return 2 * v + (val ? 1 : 0); };
  auto add_clause = [&](int a, int b) {
    imp[a ^ 1].push_back(b);
    imp[b ^ 1].push_back(a);
  };

  // Literal meaning "v is colored c": +node, constant true, or constant false.
  enum class Lit { True, False, Var };
  auto lit_for = [&](Vertex v, Color c, int& out_node) {
    const auto& l = inst.lists[v];
    if (!list_contains(l, c)) return Lit::False;
    if (l.size() == 1) return Lit::True;
    out_node = node(v, c == l.front());
    return Lit::Var;
  };

  bool unsat = false;
  for (Vertex u = 0; u < n && !unsat; ++u) {
    for (Vertex v : inst.graph.neighbors(u)) {
      if (v <= u) continue;
      for (Color c : list_intersect(inst.lists[u], inst.lists[v])) {
        int nu = 0, nv = 0;
        const Lit lu = lit_for(u, c, nu);
        const Lit lv = lit_for(v, c, nv);
        if (lu == Lit::True && lv == Lit::True) {
          unsat = true;  // two adjacent forced vertices share the color
          break;
        }
        if (lu == Lit::True && lv == Lit::Var) add_clause(nv ^ 1, nv ^ 1);
        else if (lv == Lit::True && lu == Lit::Var) add_clause(nu ^ 1, nu ^ 1);
        else if (lu == Lit::Var && lv == Lit::Var) add_clause(nu ^ 1, nv ^ 1);
      }
      if (unsat) break;
    }
  }
  if (unsat) return std::nullopt;

  const auto comp = detail::scc_components(imp);
  Coloring col(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto& l = inst.lists[v];
    if (l.size() == 1) {
      col[v] = l.front();
      continue;
    }
    if (comp[node(v, true)] == comp[node(v, false)]) return std::nullopt;
    const bool val = comp[node(v, true)] > comp[node(v, false)];
    col[v] = val ? l.front() : l.back();
  }
  if (!is_proper(inst, col)) throw InternalError("solve_two_lists: improper witness");
  return col;
}

// List coloring of a fork-free ordered graph. The index order read forward is
// a perfect elimination ordering: each bag {v} + N+(v) is a clique. DP runs
// over the clique tree where the parent of v is its earliest forward neighbor.
inline std::optional<Coloring> solve_fork_free(const Instance& inst) {
  inst.validate();
  if (auto w = find_induced(inst.graph, fork()))
    throw PatternError("solve_fork_free: graph is not fork-free", *w);
  const int n = inst.size();
  if (n == 0) return Coloring{};

  std::vector<std::vector<Vertex>> bag(n);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v = 0; v < n; ++v) {
    auto fwd = inst.graph.forward_neighbors(v);
    bag[v].push_back(v);
    bag[v].insert(bag[v].end(), fwd.begin(), fwd.end());
    for (std::size_t i = 1; i < bag[v].size(); ++i)
      for (std::size_t j = i + 1; j < bag[v].size(); ++j)
        if (!inst.graph.has_edge(bag[v][i], bag[v][j]))
          throw InternalError("solve_fork_free: forward neighborhood is not a clique");
    if (!fwd.empty()) {
      parent[v] = fwd.front();
      children[fwd.front()].push_back(v);
    }
  }

  using Assign = std::vector<Color>;  // colors aligned with bag order
  // For child u: tail assignment (bag[u] minus u) -> a workable color of u.
  std::vector<std::map<Assign, Color>> summary(n);

  for (Vertex v = 0; v < n; ++v) {
    std::map<Assign, char> table;
    Assign cur(bag[v].size(), 0);
    // Enumerate proper list assignments of the bag: a clique, so colors must
    // be pairwise distinct.
    auto enumerate = [&](auto&& self, std::size_t pos) -> void {
      if (pos == bag[v].size()) {
        for (Vertex u : children[v]) {
          Assign tail(bag[u].size() - 1);
          for (std::size_t i = 1; i < bag[u].size(); ++i) {
            const auto it = std::find(bag[v].begin(), bag[v].end(), bag[u][i]);
            tail[i - 1] = cur[it - bag[v].begin()];
          }
          if (!summary[u].count(tail)) return;
        }
        table.emplace(cur, 1);
        return;
      }
      for (Color c : inst.lists[bag[v][pos]]) {
        bool clash = false;
        for (std::size_t i = 0; i < pos && !clash; ++i) clash = cur[i] == c;
        if (clash) continue;
        cur[pos] = c;
        self(self, pos + 1);
      }
    };
    enumerate(enumerate, 0);
    if (parent[v] != -1 && table.empty()) return std::nullopt;
    for (const auto& [assign, ok] : table) {
      Assign tail(assign.begin() + 1, assign.end());
      summary[v].emplace(std::move(tail), assign.front());
    }
    if (parent[v] == -1 && summary[v].empty()) return std::nullopt;
  }

  // Extract a witness root-down.
  Coloring col(n, 0);
  std::vector<char> colored(n, 0);
  auto fill = [&](auto&& self, Vertex v) -> void {
    Assign tail(bag[v].size() - 1);
    for (std::size_t i = 1; i < bag[v].size(); ++i) tail[i - 1] = col[bag[v][i]];
    const auto it = summary[v].find(tail);
    if (it == summary[v].end()) throw InternalError("solve_fork_free: lost DP entry");
    col[v] = it->second;
    colored[v] = 1;
    for (Vertex u : children[v]) self(self, u);
  };
  for (Vertex v = n - 1; v >= 0; --v)
    if (parent[v] == -1 && !colored[v]) fill(fill, v);
  if (!is_proper(inst, col)) throw InternalError("solve_fork_free: improper witness");
  return col;
}

// Unbounded-palette list coloring of a complete graph: a proper coloring is a
// system of distinct representatives, i.e. a saturating matching in the
// vertex-color bipartite graph, found by augmenting paths.
inline std::optional<Coloring> solve_clique_unbounded(const Instance& inst) {
  inst.validate();
  const int n = inst.size();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!inst.graph.has_edge(u, v))
        throw PreconditionError("solve_clique_unbounded: graph is not complete");

  std::vector<Color> palette;
  for (const auto& l : inst.lists) palette.insert(palette.end(), l.begin(), l.end());
  palette = normalized_list(std::move(palette));
  const int pc = static_cast<int>(palette.size());
  auto color_index = [&](Color c) {
    return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) -
                            palette.begin());
  };

  std::vector<int> match_color(pc, -1);  // color slot -> vertex
  std::vector<char> visited(pc, 0);
  auto augment = [&](auto&& self, Vertex v) -> bool {
    for (Color c : inst.lists[v]) {
      const int ci = color_index(c);
      if (visited[ci]) continue;
      visited[ci] = 1;
      if (match_color[ci] == -1 || self(self, match_color[ci])) {
        match_color[ci] = v;
        return true;
      }
    }
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, v)) return std::nullopt;
  }

  Coloring col(n, 0);
  for (int ci = 0; ci < pc; ++ci)
    if (match_color[ci] != -1) col[match_color[ci]] = palette[ci];
  if (!is_proper(inst, col)) throw InternalError("solve_clique_unbounded: improper witness");
  return col;
}

}  // namespace olc
