#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "olc/core.hpp"
#include "olc/easy_solvers.hpp"
#include "olc/oracle.hpp"
#include "olc/patterns.hpp"

// List 4-Coloring on padded_fork(l)-free ordered graphs.
//
// Pipeline: K5 check, then a branch where some color is used on at most l-1
// vertices (handed to a pluggable 3-color subsolver), then four phases:
//   1. guess the first l vertices of each color, prune, reduce, classify
//      forward neighbors as safe/dangerous and vertices as bad/good;
//   2. small Good set: guess it entirely and finish with the 2-list solver;
//      otherwise guess colors on D and its forward neighborhood;
//   3. per surviving prefix list X, branch on how colors of X appear;
//   4. guess colors on the safe forward neighbors of the frozen U-sets,
//      delete the prefix edges between complementary lists, certify the
//      result fork-free and finish with the chordal solver.
//
// All claims the correctness argument relies on are asserted per branch,
// never assumed; a violation throws InternalError.

namespace olc {

// Binomial upper bound C(s+t-2, s-1) on the Ramsey number Ram(s, t). Every
// claim that uses Ram(5, l) as a sufficiency threshold stays valid for any
// upper bound.
inline int ramsey_upper(int s, int t) {
  if (s < 1 || t < 1) throw PreconditionError("ramsey_upper: arguments must be positive");
  const int n = s + t - 2;
  const int k = s - 1;
  std::int64_t num = 1;
  for (int i = 1; i <= k; ++i) num = num * (n - k + i) / i;
  if (num > 1'000'000'000) throw PreconditionError("ramsey_upper: bound too large");
  return static_cast<int>(num);
}

// Forward-neighbor classification w.r.t. frozen post-Phase-1 lists: a forward
// neighbor is safe when the lists intersect, dangerous when disjoint; a
// vertex is bad when it has at least 3l+4 dangerous forward neighbors.
struct NeighborClassification {
  std::vector<std::vector<Vertex>> safe;
  std::vector<std::vector<Vertex>> dangerous;
  std::vector<char> bad;
  std::vector<Vertex> good;  // ascending
};

using Sub3Solver = std::function<std::optional<Coloring>(const Instance&)>;

// Branch counters, mainly for tests and diagnostics.
struct Ljj4Stats {
  long long small_color_branches = 0;
  long long phase1_tuples = 0;
  long long phase2_small_guesses = 0;
  long long phase2_guesses = 0;
  long long phase3_group_guesses = 0;
  long long phase3_i1 = 0;
  long long phase3_i2 = 0;
  long long phase4_guesses = 0;
};

namespace detail {

using Branch = SearchState;

inline Branch branch_from(const Instance& inst) {
  Branch b;
  b.g = &inst.graph;
  b.lists = inst.lists;
  b.alive.assign(inst.size(), 1);
  b.fixed.assign(inst.size(), 0);
  b.alive_count = inst.size();
  return b;
}

inline bool branch_set_to(Branch& b, Vertex v, Color c, std::deque<Vertex>& seeds) {
  if (!b.alive[v]) return b.fixed[v] == c;
  if (!list_contains(b.lists[v], c)) return false;
  b.lists[v] = {c};
  seeds.push_back(v);
  return true;
}

inline bool branch_remove(Branch& b, Vertex v, Color c, std::deque<Vertex>& seeds) {
  if (!b.alive[v]) return b.fixed[v] != c;
  if (!list_erase(b.lists[v], c)) return true;
  if (b.lists[v].empty()) return false;
  if (b.lists[v].size() == 1) seeds.push_back(v);
  return true;
}

inline std::vector<Vertex> alive_vertices(const Branch& b) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(b.alive.size()); ++v)
    if (b.alive[v]) out.push_back(v);
  return out;
}

inline Instance branch_subinstance(const OrderedGraph& g, const Branch& b,
                                   std::vector<Vertex>& kept) {
  kept = alive_vertices(b);
  std::vector<ColorList> lists;
  lists.reserve(kept.size());
  for (Vertex v : kept) lists.push_back(b.lists[v]);
  return Instance{g.induced(kept), std::move(lists), std::nullopt};
}

inline Coloring merge_branch(const Instance& top, const Branch& b,
                             const std::vector<Vertex>& kept, const Coloring& sub) {
  Coloring full = b.fixed;
  for (std::size_t i = 0; i < kept.size(); ++i) full[kept[i]] = sub[i];
  if (!is_proper(top, full)) throw InternalError("ljj4: merged witness is improper");
  return full;
}

// Claim audit: the three vertices of any induced fork have no common color.
inline void audit_common_color(const OrderedGraph& g, const Branch& b) {
  const auto alive = alive_vertices(b);
  for (std::size_t ix = 0; ix < alive.size(); ++ix) {
    const Vertex x = alive[ix];
    for (std::size_t iy = ix + 1; iy < alive.size(); ++iy) {
      const Vertex y = alive[iy];
      if (!g.has_edge(x, y)) continue;
      for (std::size_t iz = iy + 1; iz < alive.size(); ++iz) {
        const Vertex z = alive[iz];
        if (!g.has_edge(x, z) || g.has_edge(y, z)) continue;
        if (!list_intersect(list_intersect(b.lists[x], b.lists[y]), b.lists[z]).empty())
          throw InternalError("ljj4: fork with a common color survived Phase 1");
      }
    }
  }
}

inline NeighborClassification classify_branch(const OrderedGraph& g, const Branch& b, int l) {
  const int n = g.size();
  NeighborClassification cls;
  cls.safe.resize(n);
  cls.dangerous.resize(n);
  cls.bad.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!b.alive[v]) continue;
    for (Vertex u : g.forward_neighbors(v)) {
      if (!b.alive[u]) continue;
      if (lists_intersect(b.lists[v], b.lists[u]))
        cls.safe[v].push_back(u);
      else
        cls.dangerous[v].push_back(u);
    }
    if (static_cast<int>(cls.safe[v].size()) > 12)
      throw InternalError("ljj4: vertex has more than 12 safe forward neighbors");
    cls.bad[v] = static_cast<int>(cls.dangerous[v].size()) >= 3 * l + 4;
    if (cls.bad[v] && b.lists[v].size() != 2)
      throw InternalError("ljj4: bad vertex whose list size is not 2");
    if (!cls.bad[v] &&
        static_cast<int>(cls.safe[v].size() + cls.dangerous[v].size()) > 3 * l + 15)
      throw InternalError("ljj4: good vertex with more than 3l+15 forward neighbors");
    if (!cls.bad[v]) cls.good.push_back(v);
  }
  return cls;
}

// Claim audit: a bad vertex is non-adjacent to fewer than Ram(5,l) earlier
// bad vertices with a different list.
inline void audit_bad_non_neighbors(const OrderedGraph& g, const Branch& b,
                                    const NeighborClassification& cls, int ram) {
  const int n = g.size();
  for (Vertex v = 0; v < n; ++v) {
    if (!b.alive[v] || !cls.bad[v]) continue;
    int non_neighbors = 0;
    for (Vertex u = 0; u < v; ++u) {
      if (!b.alive[u] || !cls.bad[u]) continue;
      if (b.lists[u] == b.lists[v]) continue;
      if (!g.has_edge(u, v)) ++non_neighbors;
    }
    if (non_neighbors > ram - 1)
      throw InternalError("ljj4: bad vertex with too many earlier bad non-neighbors");
  }
}

// Enumerates c: S -> colors with c(v) drawn from the branch lists, vertices
// in index order and colors ascending. Branches where two adjacent guessed
// vertices coincide are skipped (they propagate to NO). Dead vertices keep
// their forced color. The callback returns false to stop.
template <class Fn>
bool guess_colorings(const OrderedGraph& g, const Branch& base, const std::vector<Vertex>& s,
                     Fn&& fn) {
  std::vector<Color> choice(s.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == s.size()) {
      Branch b = base;
      std::deque<Vertex> seeds;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!b.alive[s[i]]) continue;
        b.lists[s[i]] = {choice[i]};
        seeds.push_back(s[i]);
      }
      if (!propagate(b, std::move(seeds))) return true;
      return fn(b);
    }
    const Vertex v = s[pos];
    const ColorList options = base.alive[v] ? base.lists[v] : ColorList{base.fixed[v]};
    for (Color c : options) {
      bool clash = false;
      for (std::size_t i = 0; i < pos && !clash; ++i)
        clash = choice[i] == c && g.has_edge(s[i], v);
      if (clash) continue;
      choice[pos] = c;
      if (!self(self, pos + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

struct I2Sets {
  std::vector<Vertex> first;   // U_{X,i} for the smaller color i of X
  std::vector<Vertex> second;  // U_{X,j}
};

struct PhaseContext {
  const Instance* top = nullptr;
  const OrderedGraph* g = nullptr;
  int ell = 0;
  std::vector<char> in_p;                 // frozen prefix membership
  std::vector<Vertex> pfrozen;
  std::map<ColorList, I2Sets> chosen;     // X -> (I2) sets in force
  Ljj4Stats* stats = nullptr;
};

inline std::optional<Coloring> phase4(PhaseContext& ctx, const Branch& b3);

// Nested branching over the prefix groups P_X computed on (G_2, L_2).
inline std::optional<Coloring> phase3(PhaseContext& ctx, const Branch& b2) {
  // Group the surviving prefix vertices by their (size-2) list.
  std::map<ColorList, std::vector<Vertex>> groups;
  for (Vertex v : ctx.pfrozen) {
    if (!b2.alive[v]) continue;
    if (b2.lists[v].size() != 2)
      throw InternalError("ljj4: prefix vertex without a size-2 list at Phase 3");
    groups[b2.lists[v]].push_back(v);
  }
  // Bipartiteness check: each P_X carries two colors only.
  for (const auto& [x, verts] : groups) {
    std::map<Vertex, int> side;
    for (Vertex start : verts) {
      if (side.count(start)) continue;
      side[start] = 0;
      std::deque<Vertex> q{start};
      while (!q.empty()) {
        const Vertex u = q.front();
        q.pop_front();
        for (Vertex w : verts) {
          if (w == u || !ctx.g->has_edge(u, w)) continue;
          auto it = side.find(w);
          if (it == side.end()) {
            side[w] = side[u] ^ 1;
            q.push_back(w);
          } else if (it->second == side[u]) {
            return std::nullopt;  // odd cycle on a two-color group: reject
          }
        }
      }
    }
  }

  std::vector<std::pair<ColorList, std::vector<Vertex>>> order(groups.begin(), groups.end());
  std::optional<Coloring> result;

  auto process = [&](auto&& self, std::size_t gi, const Branch& b) -> bool {
    if (result) return false;
    if (gi == order.size()) {
      result = phase4(ctx, b);
      return !result;
    }
    const auto& [x, pverts] = order[gi];
    const Color ci = x[0], cj = x[1];

    if (static_cast<int>(pverts.size()) < 2 * ctx.ell) {
      // Guess the whole group.
      return guess_colorings(*ctx.g, b, pverts, [&](Branch& nb) {
        if (ctx.stats) ++ctx.stats->phase3_group_guesses;
        return self(self, gi + 1, nb);
      });
    }

    // (I1): color iota appears on at most ell-1 group vertices.
    for (Color iota : {ci, cj}) {
      bool keep = true;
      for_each_independent_subset(
          *ctx.g, pverts, 0, ctx.ell - 1, [&](const std::vector<Vertex>& u) {
            if (ctx.stats) ++ctx.stats->phase3_i1;
            Branch nb = b;
            std::deque<Vertex> seeds;
            bool ok = true;
            std::vector<char> in_u(ctx.g->size(), 0);
            for (Vertex v : u) in_u[v] = 1;
            for (Vertex v : u) ok = ok && branch_set_to(nb, v, iota, seeds);
            for (Vertex v : pverts)
              if (ok && !in_u[v]) ok = ok && branch_remove(nb, v, iota, seeds);
            if (ok && propagate(nb, std::move(seeds))) {
              if (!self(self, gi + 1, nb)) {
                keep = false;
                return false;
              }
            }
            return true;
          });
      if (!keep) return false;
    }

    // (I2): both colors appear at least ell times; guess the first l-blocks.
    bool keep = true;
    for_each_independent_subset(
        *ctx.g, pverts, ctx.ell, ctx.ell, [&](const std::vector<Vertex>& ui) {
          std::vector<Vertex> rest;
          for (Vertex v : pverts)
            if (std::find(ui.begin(), ui.end(), v) == ui.end()) rest.push_back(v);
          for_each_independent_subset(
              *ctx.g, rest, ctx.ell, ctx.ell, [&](const std::vector<Vertex>& uj) {
                if (ctx.stats) ++ctx.stats->phase3_i2;
                Branch nb = b;
                std::deque<Vertex> seeds;
                bool ok = true;
                for (Vertex v : ui) ok = ok && branch_set_to(nb, v, ci, seeds);
                for (Vertex v : uj) ok = ok && branch_set_to(nb, v, cj, seeds);
                const Vertex last_i = ui.back(), last_j = uj.back();
                for (Vertex v : pverts) {
                  if (!ok) break;
                  if (v < last_i && std::find(ui.begin(), ui.end(), v) == ui.end())
                    ok = branch_remove(nb, v, ci, seeds);
                  if (!ok) break;
                  if (v < last_j && std::find(uj.begin(), uj.end(), v) == uj.end())
                    ok = branch_remove(nb, v, cj, seeds);
                }
                if (ok && propagate(nb, std::move(seeds))) {
                  ctx.chosen[x] = I2Sets{ui, uj};
                  const bool cont = self(self, gi + 1, nb);
                  ctx.chosen.erase(x);
                  if (!cont) {
                    keep = false;
                    return false;
                  }
                }
                return true;
              });
          return keep;
        });
    return keep;
  };

  process(process, 0, b2);
  return result;
}

inline std::optional<Coloring> phase4(PhaseContext& ctx, const Branch& b3) {
  const OrderedGraph& g = *ctx.g;

  // Claim audit: surviving prefix lists are pairwise equal or disjoint and at
  // most two distinct lists appear.
  std::vector<ColorList> plists;
  for (Vertex v : ctx.pfrozen) {
    if (!b3.alive[v]) continue;
    if (std::find(plists.begin(), plists.end(), b3.lists[v]) == plists.end())
      plists.push_back(b3.lists[v]);
  }
  for (std::size_t i = 0; i < plists.size(); ++i)
    for (std::size_t j = i + 1; j < plists.size(); ++j)
      if (lists_intersect(plists[i], plists[j]))
        throw InternalError("ljj4: distinct intersecting lists on the prefix at Phase 4");
  if (plists.size() > 2)
    throw InternalError("ljj4: more than two distinct lists on the prefix at Phase 4");

  // Y: safe forward neighbors (lists intersecting X, w.r.t. L3) of the first
  // U-block of each surviving prefix list.
  std::set<Vertex> yset;
  for (const auto& x : plists) {
    const auto it = ctx.chosen.find(x);
    if (it == ctx.chosen.end())
      throw InternalError("ljj4: surviving prefix list without an (I2) branch");
    for (Vertex v : it->second.first)
      for (Vertex u : g.forward_neighbors(v))
        if (b3.alive[u] && lists_intersect(b3.lists[u], x)) yset.insert(u);
  }
  const std::vector<Vertex> y(yset.begin(), yset.end());

  // Complementary list pairs eligible for edge deletion.
  std::vector<std::pair<ColorList, ColorList>> pairs;
  for (const auto& x : plists) {
    ColorList comp;
    for (Color c = 1; c <= 4; ++c)
      if (!list_contains(x, c)) comp.push_back(c);
    auto pr = x < comp ? std::make_pair(x, comp) : std::make_pair(comp, x);
    if (std::find(pairs.begin(), pairs.end(), pr) == pairs.end()) pairs.push_back(pr);
  }

  std::optional<Coloring> result;
  guess_colorings(g, b3, y, [&](Branch& b4) {
    if (ctx.stats) ++ctx.stats->phase4_guesses;
    std::vector<Vertex> kept = alive_vertices(b4);
    std::vector<int> pos(g.size(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) pos[kept[i]] = static_cast<int>(i);
    OrderedGraph sg(static_cast<int>(kept.size()));
    for (Vertex u : kept) {
      for (Vertex v : g.neighbors(u)) {
        if (v < u || pos[v] < 0) continue;
        bool removed = false;
        if (ctx.in_p[u] || ctx.in_p[v]) {
          for (const auto& [x, xc] : pairs) {
            if ((b4.lists[u] == x && b4.lists[v] == xc) ||
                (b4.lists[u] == xc && b4.lists[v] == x)) {
              removed = true;
              break;
            }
          }
        }
        if (!removed) sg.add_edge(pos[u], pos[v]);
      }
    }
    if (find_induced(sg, fork()))
      throw InternalError("ljj4: Phase-4 graph is not fork-free");
    std::vector<ColorList> lists;
    lists.reserve(kept.size());
    for (Vertex v : kept) lists.push_back(b4.lists[v]);
    auto sub = solve_fork_free(Instance{std::move(sg), std::move(lists), std::nullopt});
    if (!sub) return true;
    result = merge_branch(*ctx.top, b4, kept, *sub);
    return false;
  });
  return result;
}

}  // namespace detail

// Classification of a kernelized Phase-1 branch; asserts the claim bounds.
inline NeighborClassification classify_neighbors(const Instance& inst, int ell) {
  inst.validate();
  if (ell < 1) throw PreconditionError("classify_neighbors: ell must be at least 1");
  for (const auto& l : inst.lists) {
    if (l.size() < 2 || l.back() > 4)
      throw PreconditionError(
          "classify_neighbors: expects a kernelized branch with lists of size >= 2 within [4]");
  }
  auto b = detail::branch_from(inst);
  return detail::classify_branch(inst.graph, b, ell);
}

// List 4-Coloring for padded_fork(ell)-free ordered graphs. sub3 solves the
// residual List 3-Coloring instances of the small-color branch; it defaults
// to the exact oracle.
inline std::optional<Coloring> solve4_padded_fork_free(const Instance& inst, int ell,
                                                       Sub3Solver sub3 = {},
                                                       Ljj4Stats* stats = nullptr) {
  inst.validate();
  if (ell < 1) throw PreconditionError("solve4_padded_fork_free: ell must be at least 1");
  for (const auto& l : inst.lists)
    if (!l.empty() && l.back() > 4)
      throw PreconditionError("solve4_padded_fork_free: lists must be subsets of [4]");
  if (auto w = find_induced(inst.graph, padded_fork(ell)))
    throw PatternError("solve4_padded_fork_free: graph contains padded_fork(" +
                           std::to_string(ell) + ")",
                       *w);
  if (!sub3) sub3 = [](const Instance& sub) { return solve_exact(sub); };

  const OrderedGraph& g = inst.graph;
  const int n = inst.size();
  if (contains_clique(g, 5)) return std::nullopt;

  // Some color i is used on at most ell-1 vertices: delete its class, strip
  // the color, and solve the 3-color residue.
  for (Color i = 1; i <= 4; ++i) {
    std::vector<Vertex> carriers;
    for (Vertex v = 0; v < n; ++v)
      if (list_contains(inst.lists[v], i)) carriers.push_back(v);
    std::optional<Coloring> res;
    auto try_class = [&](const std::vector<Vertex>& u) {
      if (stats) ++stats->small_color_branches;
      std::vector<char> in_u(n, 0);
      for (Vertex v : u) in_u[v] = 1;
      std::vector<Vertex> kept;
      for (Vertex v = 0; v < n; ++v)
        if (!in_u[v]) kept.push_back(v);
      std::vector<ColorList> lists;
      lists.reserve(kept.size());
      for (Vertex v : kept) {
        ColorList l = inst.lists[v];
        list_erase(l, i);
        lists.push_back(std::move(l));
      }
      auto sub = sub3(Instance{g.induced(kept), std::move(lists), std::nullopt});
      if (!sub) return true;
      Coloring full(n, i);
      for (std::size_t idx = 0; idx < kept.size(); ++idx) full[kept[idx]] = (*sub)[idx];
      if (!is_proper(inst, full))
        throw PreconditionError("solve4_padded_fork_free: sub3 returned an improper coloring");
      res = full;
      return false;
    };
    detail::for_each_independent_subset(g, carriers, 0, ell - 1, try_class);
    if (res) return res;
  }

  // Phase 1: guess the first ell vertices of each color.
  const int ram = ramsey_upper(5, ell);
  std::vector<std::vector<Vertex>> carriers(4);
  for (Vertex v = 0; v < n; ++v)
    for (Color c : inst.lists[v]) carriers[c - 1].push_back(v);

  std::vector<std::vector<Vertex>> a(4);
  std::vector<char> used(n, 0);
  std::optional<Coloring> answer;

  auto run_phases = [&]() -> bool {  // false stops the tuple enumeration
    if (stats) ++stats->phase1_tuples;
    auto b = detail::branch_from(inst);
    std::deque<Vertex> seeds;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (Vertex v : a[i]) {
        ok = detail::branch_set_to(b, v, i + 1, seeds);
        if (!ok) break;
      }
    for (int i = 0; i < 4 && ok; ++i) {
      const Vertex last = a[i].back();
      for (Vertex v = 0; v < last && ok; ++v)
        if (std::find(a[i].begin(), a[i].end(), v) == a[i].end())
          ok = detail::branch_remove(b, v, i + 1, seeds);
    }
    if (!ok || !detail::propagate(b, std::move(seeds))) return true;

    detail::audit_common_color(g, b);
    auto cls = detail::classify_branch(g, b, ell);
    detail::audit_bad_non_neighbors(g, b, cls, ram);

    if (static_cast<int>(cls.good.size()) < ram) {
      // Phase 2, small case: guess all good vertices, then Edwards.
      const bool cont = detail::guess_colorings(g, b, cls.good, [&](detail::Branch& b2) {
        if (stats) ++stats->phase2_small_guesses;
        std::vector<Vertex> kept;
        auto sub = detail::branch_subinstance(g, b2, kept);
        for (const auto& l : sub.lists)
          if (l.size() != 2)
            throw InternalError("ljj4: non-2-list vertex after guessing all good vertices");
        auto col = solve_two_lists(sub);
        if (!col) return true;
        answer = detail::merge_branch(inst, b2, kept, *col);
        return false;
      });
      return cont;
    }

    // Phase 2, large case: guess colors on D and its forward neighborhood.
    std::vector<Vertex> d(cls.good.begin(), cls.good.begin() + ram);
    const Vertex max_d = d.back();
    std::set<Vertex> dplus_set(d.begin(), d.end());
    for (Vertex v : d)
      for (Vertex u : g.forward_neighbors(v))
        if (b.alive[u]) dplus_set.insert(u);
    const std::vector<Vertex> dplus(dplus_set.begin(), dplus_set.end());

    detail::PhaseContext ctx;
    ctx.top = &inst;
    ctx.g = &g;
    ctx.ell = ell;
    ctx.in_p.assign(n, 0);
    ctx.stats = stats;
    for (Vertex v = 0; v < max_d; ++v)
      if (b.alive[v]) {
        ctx.in_p[v] = 1;
        ctx.pfrozen.push_back(v);
      }

    return detail::guess_colorings(g, b, dplus, [&](detail::Branch& b2) {
      if (stats) ++stats->phase2_guesses;
      if (auto col = detail::phase3(ctx, b2)) {
        answer = *col;
        return false;
      }
      return true;
    });
  };

  auto place = [&](auto&& self, int slot) -> bool {
    if (slot == 4) return run_phases();
    bool keep = true;
    std::vector<Vertex> cands;
    for (Vertex v : carriers[slot])
      if (!used[v]) cands.push_back(v);
    std::vector<Vertex> cur;
    auto rec = [&](auto&& inner, std::size_t start, int want) -> void {
      if (!keep) return;
      if (want == 0) {
        a[slot] = cur;
        keep = self(self, slot + 1);
        a[slot].clear();
        return;
      }
      for (std::size_t i = start; i + want <= cands.size() && keep; ++i) {
        const Vertex v = cands[i];
        bool indep = true;
        for (Vertex u : cur)
          if (g.has_edge(u, v)) {
            indep = false;
            break;
          }
        if (!indep) continue;
        cur.push_back(v);
        used[v] = 1;
        inner(inner, i + 1, want - 1);
        used[v] = 0;
        cur.pop_back();
      }
    };
    rec(rec, 0, ell);
    return keep;
  };
  place(place, 0);

  return answer;
}

}  // namespace olc
