#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "olc/core.hpp"

// Catalog of the forbidden ordered patterns and detection of induced ordered
// subgraphs and cliques. Detection is plain enumeration over increasing
// tuples; witnesses are lexicographically smallest, so error messages and
// tests are deterministic.

namespace olc {

struct Pattern {
  std::string name;
  OrderedGraph graph;
};

// l+2 vertices, single edge spanning l middle vertices: (0, l+1).
inline Pattern edge_span(int l) {
  if (l < 0) throw InputError("edge_span: l must be non-negative");
  OrderedGraph g(l + 2);
  g.add_edge(0, l + 1);
  return {"edge-span:" + std::to_string(l), std::move(g)};
}

// 3l+2 vertices, single edge (l, 2l+1): l isolated vertices before, between
// and after the edge.
inline Pattern padded_edge(int l) {
  if (l < 0) throw InputError("padded_edge: l must be non-negative");
  OrderedGraph g(3 * l + 2);
  g.add_edge(l, 2 * l + 1);
  return {"padded-edge:" + std::to_string(l), std::move(g)};
}

// First vertex adjacent to two later, mutually non-adjacent vertices.
inline Pattern fork() {
  OrderedGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  return {"fork", std::move(g)};
}

// Fork plus one trailing isolated vertex.
inline Pattern fork_tail() {
  OrderedGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  return {"fork-tail", std::move(g)};
}

// l isolated vertices, then a fork: edges (l, l+1), (l, l+2).
inline Pattern padded_fork(int l) {
  if (l < 0) throw InputError("padded_fork: l must be non-negative");
  OrderedGraph g(l + 3);
  g.add_edge(l, l + 1);
  g.add_edge(l, l + 2);
  return {"padded-fork:" + std::to_string(l), std::move(g)};
}

// Edge 0-3 nested over edge 1-2.
inline Pattern nested_pair() {
  OrderedGraph g(4);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  return {"nested-pair", std::move(g)};
}

inline Pattern reverse(const Pattern& p) {
  return {"rev(" + p.name + ")", p.graph.reversed()};
}

// Names accepted by the CLI: fork, fork-tail, nested-pair, edge-span:L,
// padded-edge:L, padded-fork:L.
inline Pattern pattern_from_name(const std::string& name) {
  if (name == "fork") return fork();
  if (name == "fork-tail") return fork_tail();
  if (name == "nested-pair") return nested_pair();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    int l = -1;
    try {
      std::size_t used = 0;
      l = std::stoi(name.substr(colon + 1), &used);
      if (used != name.size() - colon - 1) l = -1;
    } catch (const std::exception&) {
      l = -1;
    }
    if (l >= 0) {
      if (head == "edge-span") return edge_span(l);
      if (head == "padded-edge") return padded_edge(l);
      if (head == "padded-fork") return padded_fork(l);
    }
  }
  throw InputError("unknown pattern name: " + name);
}

// Lexicographically smallest strictly increasing tuple inducing a copy of p,
// or nothing iff g is p-free.
inline std::optional<std::vector<Vertex>> find_induced(const OrderedGraph& g, const Pattern& p) {
  const int m = p.graph.size();
  const int n = g.size();
  if (m > n) return std::nullopt;
  std::vector<Vertex> w(m);
  auto rec = [&](auto&& self, int d, int start) -> bool {
    for (Vertex v = start; v <= n - (m - d); ++v) {
      bool ok = true;
      for (int e = 0; e < d && ok; ++e)
        ok = g.has_edge(w[e], v) == p.graph.has_edge(e, d);
      if (!ok) continue;
      w[d] = v;
      if (d + 1 == m || self(self, d + 1, v + 1)) return true;
    }
    return false;
  };
  if (m == 0) return std::vector<Vertex>{};
  if (rec(rec, 0, 0)) return w;
  return std::nullopt;
}

inline bool is_free(const OrderedGraph& g, const Pattern& p) {
  return !find_induced(g, p).has_value();
}

// An s-clique if one exists (lexicographically smallest), else nothing.
inline std::optional<std::vector<Vertex>> contains_clique(const OrderedGraph& g, int s) {
  if (s < 1) throw PreconditionError("contains_clique: size must be at least 1");
  const int n = g.size();
  if (s > n) return std::nullopt;
  std::vector<Vertex> w(s);
  auto rec = [&](auto&& self, int d, int start) -> bool {
    for (Vertex v = start; v <= n - (s - d); ++v) {
      bool ok = true;
      for (int e = 0; e < d && ok; ++e) ok = g.has_edge(w[e], v);
      if (!ok) continue;
      w[d] = v;
      if (d + 1 == s || self(self, d + 1, v + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0, 0)) return w;
  return std::nullopt;
}

// Dedicated nested-pair detector, O(m^2) over edge pairs. Used to certify
// large gadget graphs where the generic tuple enumeration is too slow; a
// property test keeps it in agreement with find_induced.
inline std::optional<std::array<Vertex, 4>> find_nested_pair(const OrderedGraph& g) {
  const auto es = g.edges();
  for (const auto& [a, d] : es) {
    for (const auto& [b, c] : es) {
      if (a < b && c < d && !g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, d) &&
          !g.has_edge(c, d))
        return std::array<Vertex, 4>{a, b, c, d};
    }
  }
  return std::nullopt;
}

}  // namespace olc
