#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "olc/core.hpp"
#include "olc/oracle.hpp"
#include "olc/patterns.hpp"

// Compiles a 3-CNF formula into a fork_tail-free List 4-Coloring instance.
//
// Blocks in order: Z (one occurrence-checker vertex per variable occurrence),
// Y (one {3,4} vertex per occurrence), C (a_j, b_j, c_j, d_j per clause), X
// (one {1,2} vertex per variable). X and Y form a complete bipartite graph;
// each z is joined to its variable's x and its occurrence's y; each clause's
// a/b/c guards one occurrence's y and all three meet d.
//
// A z vertex carries {2,3} for a positive occurrence and {1,3} for a negative
// one, so y = 3 forces x to the occurrence's satisfying color. The instance
// has exactly n + 10m vertices, and it is colorable iff the formula is
// satisfiable; decoding reads x_i = 1 as "true".

namespace olc {
namespace jj1 {

struct Occurrence {
  int var = 0;     // 1-based variable
  int clause = 0;  // 0-based clause index
  bool positive = true;
  Vertex y = -1;
  Vertex z = -1;
};

struct ClauseVertices {
  Vertex a = -1, b = -1, c = -1, d = -1;
};

struct Layout {
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<Vertex> x;               // per variable, 1-based variable i at x[i-1]
  std::vector<Occurrence> occurrences; // sorted by (var, clause)
  std::vector<ClauseVertices> clauses;
  int z_end = 0, y_end = 0, c_end = 0; // block boundaries; X occupies [c_end, n)
};

inline std::pair<Instance, Layout> build_instance(const Cnf3& f) {
  f.validate();
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());

  Layout lay;
  lay.num_vars = n;
  lay.num_clauses = m;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < m; ++j)
      for (int lit : f.clauses[j])
        if (std::abs(lit) == i)
          lay.occurrences.push_back({i, j, lit > 0, -1, -1});
  const int occ = static_cast<int>(lay.occurrences.size());

  const int total = 2 * occ + 4 * m + n;  // occ == 3m for valid Cnf3
  std::vector<ColorList> lists(total);
  OrderedGraph g(total);

  // Z block, sorted by (variable, clause).
  for (int o = 0; o < occ; ++o) {
    lay.occurrences[o].z = o;
    lists[o] = lay.occurrences[o].positive ? ColorList{2, 3} : ColorList{1, 3};
  }
  lay.z_end = occ;
  // Y block, same order.
  for (int o = 0; o < occ; ++o) {
    lay.occurrences[o].y = lay.z_end + o;
    lists[lay.occurrences[o].y] = {3, 4};
  }
  lay.y_end = lay.z_end + occ;
  // C block: a_j, b_j, c_j, d_j per clause.
  lay.clauses.resize(m);
  for (int j = 0; j < m; ++j) {
    const Vertex base = lay.y_end + 4 * j;
    lay.clauses[j] = {base, base + 1, base + 2, base + 3};
    lists[base] = {1, 4};
    lists[base + 1] = {2, 4};
    lists[base + 2] = {3, 4};
    lists[base + 3] = {1, 2, 3};
  }
  lay.c_end = lay.y_end + 4 * m;
  // X block.
  lay.x.resize(n);
  for (int i = 0; i < n; ++i) {
    lay.x[i] = lay.c_end + i;
    lists[lay.x[i]] = {1, 2};
  }

  // All edges between X and Y.
  for (int i = 0; i < n; ++i)
    for (int o = 0; o < occ; ++o) g.add_edge(lay.x[i], lay.occurrences[o].y);
  // Occurrence checkers.
  for (const auto& o : lay.occurrences) {
    g.add_edge(o.z, lay.x[o.var - 1]);
    g.add_edge(o.z, o.y);
  }
  // Clause machinery: a/b/c guard the clause's occurrences in literal order.
  std::map<std::pair<int, int>, Vertex> y_of;  // (var, clause) -> y
  for (const auto& o : lay.occurrences) y_of[{o.var, o.clause}] = o.y;
  for (int j = 0; j < m; ++j) {
    const auto& cv = lay.clauses[j];
    g.add_edge(cv.a, cv.d);
    g.add_edge(cv.b, cv.d);
    g.add_edge(cv.c, cv.d);
    const Vertex guards[3] = {cv.a, cv.b, cv.c};
    for (int p = 0; p < 3; ++p)
      g.add_edge(guards[p], y_of.at({std::abs(f.clauses[j][p]), j}));
  }

  Instance inst{std::move(g), std::move(lists), 4};
  inst.validate();
  if (auto w = find_induced(inst.graph, fork_tail()))
    throw InternalError("jj1: construction is not fork_tail-free at (" +
                        std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                        std::to_string((*w)[2]) + "," + std::to_string((*w)[3]) + ")");
  return {std::move(inst), std::move(lay)};
}

// psi(v_i) = true iff the coloring puts color 1 on x_i.
inline Assignment decode_assignment(const Layout& lay, const Coloring& col) {
  Assignment a(lay.num_vars);
  for (int i = 0; i < lay.num_vars; ++i) {
    if (lay.x[i] < 0 || lay.x[i] >= static_cast<int>(col.size()))
      throw InputError("jj1 decode: coloring too short for the layout");
    const Color c = col[lay.x[i]];
    if (c != 1 && c != 2) throw InputError("jj1 decode: x vertex colored outside {1,2}");
    a[i] = c == 1;
  }
  return a;
}

// Checked variant: requires the coloring to be proper on the built instance.
inline Assignment decode_assignment(const Instance& inst, const Layout& lay,
                                    const Coloring& col) {
  if (!is_proper(inst, col))
    throw PreconditionError("jj1 decode: coloring is not proper on the instance");
  return decode_assignment(lay, col);
}

inline nlohmann::ordered_json layout_to_json(const Layout& lay) {
  nlohmann::ordered_json j;
  j["kind"] = "jj1";
  j["num_vars"] = lay.num_vars;
  j["num_clauses"] = lay.num_clauses;
  j["x"] = lay.x;
  auto occs = nlohmann::ordered_json::array();
  for (const auto& o : lay.occurrences)
    occs.push_back({{"var", o.var},
                    {"clause", o.clause},
                    {"positive", o.positive},
                    {"y", o.y},
                    {"z", o.z}});
  j["occurrences"] = std::move(occs);
  auto cls = nlohmann::ordered_json::array();
  for (const auto& c : lay.clauses)
    cls.push_back({{"a", c.a}, {"b", c.b}, {"c", c.c}, {"d", c.d}});
  j["clauses"] = std::move(cls);
  j["blocks"] = {{"z_end", lay.z_end}, {"y_end", lay.y_end}, {"c_end", lay.c_end}};
  return j;
}

template <class J>
Layout layout_from_json(const J& j) {
  if (!j.is_object() || j.value("kind", std::string{}) != "jj1")
    throw InputError("layout JSON: expected kind \"jj1\"");
  Layout lay;
  lay.num_vars = j.at("num_vars").template get<int>();
  lay.num_clauses = j.at("num_clauses").template get<int>();
  lay.x = j.at("x").template get<std::vector<Vertex>>();
  if (static_cast<int>(lay.x.size()) != lay.num_vars)
    throw InputError("layout JSON: x size mismatch");
  for (const auto& o : j.at("occurrences"))
    lay.occurrences.push_back({o.at("var").template get<int>(),
                               o.at("clause").template get<int>(),
                               o.at("positive").template get<bool>(),
                               o.at("y").template get<Vertex>(),
                               o.at("z").template get<Vertex>()});
  for (const auto& c : j.at("clauses"))
    lay.clauses.push_back({c.at("a").template get<Vertex>(), c.at("b").template get<Vertex>(),
                           c.at("c").template get<Vertex>(), c.at("d").template get<Vertex>()});
  if (j.contains("blocks")) {
    lay.z_end = j["blocks"].value("z_end", 0);
    lay.y_end = j["blocks"].value("y_end", 0);
    lay.c_end = j["blocks"].value("c_end", 0);
  }
  return lay;
}

}  // namespace jj1
}  // namespace olc
