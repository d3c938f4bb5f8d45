#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Ordered graphs, list-coloring instances and colorings.
//
// Vertices are the indices 0..n-1 and the index order IS the linear order:
// u precedes v iff u < v. All values are immutable after construction and
// safe to share read-only across threads.

namespace olc {

using Vertex = int;
using Color = int;

// Admissible colors of a vertex, sorted ascending, duplicate-free.
using ColorList = std::vector<Color>;

// One color per vertex.
using Coloring = std::vector<Color>;

// Malformed user-supplied data: files, formulas, graph constructions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver or builder was invoked outside its documented precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violation witnessed by a forbidden induced pattern.
class PatternError : public PreconditionError {
 public:
  PatternError(const std::string& what, std::vector<Vertex> w)
      : PreconditionError(what), witness(std::move(w)) {}
  std::vector<Vertex> witness;
};

// A branch-bookkeeping invariant failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A deadline given to a long-running search expired.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool list_contains(const ColorList& l, Color c) {
  return std::binary_search(l.begin(), l.end(), c);
}

// Removes c if present; returns whether the list shrank.
inline bool list_erase(ColorList& l, Color c) {
  auto it = std::lower_bound(l.begin(), l.end(), c);
  if (it != l.end() && *it == c) {
    l.erase(it);
    return true;
  }
  return false;
}

inline ColorList normalized_list(ColorList l) {
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  return l;
}

inline ColorList list_intersect(const ColorList& a, const ColorList& b) {
  ColorList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline bool lists_intersect(const ColorList& a, const ColorList& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    (*i < *j) ? ++i : ++j;
  }
  return false;
}

class OrderedGraph {
 public:
  OrderedGraph() = default;
  explicit OrderedGraph(int n) : adj_(n >= 0 ? n : throw InputError("negative vertex count")) {}

  static OrderedGraph build(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    OrderedGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int size() const { return static_cast<int>(adj_.size()); }

  int edge_count() const {
    int m = 0;
    for (const auto& a : adj_) m += static_cast<int>(a.size());
    return m / 2;
  }

  // Duplicate pairs collapse; either endpoint order is accepted.
  void add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
      throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool has_edge(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  std::vector<Vertex> forward_neighbors(Vertex v) const {
    check_vertex(v);
    auto it = std::upper_bound(adj_[v].begin(), adj_[v].end(), v);
    return std::vector<Vertex>(it, adj_[v].end());
  }

  std::vector<Vertex> backward_neighbors(Vertex v) const {
    check_vertex(v);
    auto it = std::upper_bound(adj_[v].begin(), adj_[v].end(), v);
    return std::vector<Vertex>(adj_[v].begin(), it);
  }

  int forward_degree(Vertex v) const {
    auto it = std::upper_bound(adj_[v].begin(), adj_[v].end(), v);
    return static_cast<int>(adj_[v].end() - it);
  }

  // Edge pairs with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Subgraph induced by a strictly increasing vertex list; relative order kept.
  OrderedGraph induced(const std::vector<Vertex>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] < 0 || vs[i] >= size()) throw InputError("induced: vertex out of range");
      if (i > 0 && vs[i] <= vs[i - 1])
        throw InputError("induced: vertex list must be strictly increasing");
    }
    OrderedGraph g(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (has_edge(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  // Reverses the linear order: vertex i maps to n-1-i.
  OrderedGraph reversed() const {
    const int n = size();
    OrderedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : adj_[u])
        if (u < v) g.add_edge(n - 1 - u, n - 1 - v);
    return g;
  }

  bool operator==(const OrderedGraph&) const = default;

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= size()) throw InputError("vertex out of range: " + std::to_string(v));
  }
  static void insert_sorted(std::vector<Vertex>& a, Vertex v) {
    a.insert(std::upper_bound(a.begin(), a.end(), v), v);
  }

  std::vector<std::vector<Vertex>> adj_;
};

// An ordered graph plus one color list per vertex. The optional k bounds the
// color universe; solvers that need lists within [k] validate it themselves.
struct Instance {
  OrderedGraph graph;
  std::vector<ColorList> lists;
  std::optional<int> k;

  int size() const { return graph.size(); }

  void validate() const {
    if (static_cast<int>(lists.size()) != graph.size())
      throw InputError("instance: list count differs from vertex count");
    for (const auto& l : lists) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] < 1) throw InputError("instance: colors must be positive integers");
        if (i > 0 && l[i] <= l[i - 1])
          throw InputError("instance: lists must be sorted and duplicate-free");
        if (k && l[i] > *k) throw InputError("instance: color exceeds declared bound k");
      }
    }
  }

  bool operator==(const Instance&) const = default;
};

inline Instance make_instance(OrderedGraph g, std::vector<ColorList> lists,
                              std::optional<int> k = std::nullopt) {
  for (auto& l : lists) l = normalized_list(std::move(l));
  Instance inst{std::move(g), std::move(lists), k};
  inst.validate();
  return inst;
}

namespace detail {

// Visits independent subsets of `candidates` with size in [min_size, max_size],
// ordered by size then lexicographically. The visitor returns false to stop.
template <class Fn>
void for_each_independent_subset(const OrderedGraph& g, const std::vector<Vertex>& candidates,
                                 int min_size, int max_size, Fn&& visit) {
  std::vector<Vertex> cur;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t start, int want) -> void {
    if (stop) return;
    if (want == 0) {
      if (!visit(static_cast<const std::vector<Vertex>&>(cur))) stop = true;
      return;
    }
    for (std::size_t i = start; i + want <= candidates.size() && !stop; ++i) {
      const Vertex v = candidates[i];
      bool ok = true;
      for (Vertex u : cur)
        if (g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      self(self, i + 1, want - 1);
      cur.pop_back();
    }
  };
  for (int size = min_size; size <= max_size && !stop; ++size) rec(rec, 0, size);
}

}  // namespace detail

// True iff every vertex gets a color from its list and no edge is monochromatic.
inline bool is_proper(const Instance& inst, const Coloring& col) {
  if (col.size() != inst.lists.size())
    throw InputError("coloring length differs from instance size");
  const int n = inst.size();
  for (Vertex v = 0; v < n; ++v)
    if (!list_contains(inst.lists[v], col[v])) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : inst.graph.neighbors(u))
      if (u < v && col[u] == col[v]) return false;
  return true;
}

}  // namespace olc
