#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "olc/core.hpp"
#include "olc/oracle.hpp"
#include "olc/patterns.hpp"

// The link/gadget stack compiling Positive NAE-3-SAT into a nested_pair-free
// List 4-Coloring instance.
//
// A link is an ordered graph with lists whose first l vertices are inputs and
// last l' vertices are outputs; input and output sets are independent, their
// lists are {1,2}, and the graph is nested_pair-free. Links compose by
// identifying outputs with inputs. On top of links: rotation and permutation
// gadgets (shuffle wires), indicator gadgets (flag monochromatic pairs),
// NOT-cc gadgets (forbid monochromatic-c pairs), NOT-ccc gadgets (forbid
// monochromatic-c triples) and NAE gadgets (forbid monochromatic triples in
// both colors). Every construction is certified nested_pair-free, never
// assumed.

namespace olc {
namespace rainbow {

struct Link {
  OrderedGraph graph;
  std::vector<ColorList> lists;
  int in_arity = 0;
  int out_arity = 0;

  Vertex input(int i) const { return i; }
  Vertex output(int i) const { return graph.size() - out_arity + i; }
};

inline void validate_link(const Link& l) {
  const int n = l.graph.size();
  if (l.in_arity < 1 || l.out_arity < 1)
    throw InternalError("link: arities must be positive");
  if (l.in_arity + l.out_arity > n)
    throw InternalError("link: input and output ranges overlap");
  if (static_cast<int>(l.lists.size()) != n) throw InternalError("link: list count mismatch");
  const ColorList wire{1, 2};
  for (int i = 0; i < l.in_arity; ++i) {
    if (l.lists[l.input(i)] != wire) throw InternalError("link: input list must be {1,2}");
    for (int j = i + 1; j < l.in_arity; ++j)
      if (l.graph.has_edge(l.input(i), l.input(j)))
        throw InternalError("link: inputs are not independent");
  }
  for (int i = 0; i < l.out_arity; ++i) {
    if (l.lists[l.output(i)] != wire) throw InternalError("link: output list must be {1,2}");
    for (int j = i + 1; j < l.out_arity; ++j)
      if (l.graph.has_edge(l.output(i), l.output(j)))
        throw InternalError("link: outputs are not independent");
  }
  if (find_nested_pair(l.graph))
    throw InternalError("link: graph contains an induced nested pair");
}

inline Instance link_instance(const Link& l) { return Instance{l.graph, l.lists, 4}; }

// Identifies a's outputs with b's inputs.
inline Link chain(const Link& a, const Link& b) {
  if (a.out_arity != b.in_arity)
    throw PreconditionError("chain: arity mismatch (" + std::to_string(a.out_arity) + " vs " +
                            std::to_string(b.in_arity) + ")");
  for (int i = 0; i < a.out_arity; ++i)
    if (a.lists[a.output(i)] != b.lists[b.input(i)])
      throw PreconditionError("chain: identified vertices carry different lists");
  const int na = a.graph.size();
  const int nb = b.graph.size();
  const int cut = b.in_arity;
  Link out;
  out.in_arity = a.in_arity;
  out.out_arity = b.out_arity;
  out.lists = a.lists;
  for (int v = cut; v < nb; ++v) out.lists.push_back(b.lists[v]);
  OrderedGraph g(na + nb - cut);
  for (const auto& [u, v] : a.graph.edges()) g.add_edge(u, v);
  auto map_b = [&](Vertex v) { return v < cut ? na - cut + v : na + (v - cut); };
  for (const auto& [u, v] : b.graph.edges()) g.add_edge(map_b(u), map_b(v));
  out.graph = std::move(g);
  validate_link(out);
  return out;
}

// l parallel 3-vertex wires; identity semantics.
inline Link identity_link(int l) {
  if (l < 1) throw PreconditionError("identity_link: arity must be positive");
  Link out;
  out.in_arity = out.out_arity = l;
  out.lists.assign(3 * l, ColorList{1, 2});
  OrderedGraph g(3 * l);
  for (int i = 0; i < l; ++i) {
    g.add_edge(i, l + i);
    g.add_edge(l + i, 2 * l + i);
  }
  out.graph = std::move(g);
  validate_link(out);
  return out;
}

// The rotation <l; j,k>: cyclic shift on positions j..k, identity elsewhere.
inline int rotation_apply(int l, int j, int k, int i) {
  (void)l;
  if (i < j || i > k) return i;
  if (i < k) return i + 1;
  return j;
}

// Permutation gadget for the rotation <l; j,k>, j < k: five layers S1..S5 of
// sizes l, l+1, l, l+1, l (5l+2 vertices in total) with special lists around
// the rotated slot.
inline Link rotation_gadget(int l, int j, int k) {
  if (!(1 <= j && j < k && k <= l))
    throw PreconditionError("rotation_gadget: need 1 <= j < k <= l");
  Link out;
  out.in_arity = out.out_arity = l;
  const int n = 5 * l + 2;
  auto s1 = [&](int i) { return i - 1; };
  auto s2 = [&](int i) { return l + i - 1; };
  auto s3 = [&](int i) { return 2 * l + 1 + i - 1; };
  auto s4 = [&](int i) { return 3 * l + 1 + i - 1; };
  auto s5 = [&](int i) { return 4 * l + 2 + i - 1; };

  out.lists.assign(n, ColorList{1, 2});
  out.lists[s2(k)] = {1, 4};
  out.lists[s2(k + 1)] = {2, 3};
  out.lists[s3(k)] = {3, 4};
  out.lists[s4(j)] = {1, 4};
  out.lists[s4(j + 1)] = {2, 3};

  OrderedGraph g(n);
  for (int i = 1; i <= k; ++i) g.add_edge(s1(i), s2(i));
  for (int i = k; i <= l; ++i) g.add_edge(s1(i), s2(i + 1));
  for (int i = 1; i <= k; ++i) g.add_edge(s2(i), s3(i));
  for (int i = k + 1; i <= l + 1; ++i) g.add_edge(s2(i), s3(i - 1));
  for (int i = 1; i <= l; ++i)
    if (i != k) g.add_edge(s3(k), s3(i));
  for (int i = 1; i <= j - 1; ++i) g.add_edge(s3(i), s4(i));
  for (int i = j; i <= k - 1; ++i) g.add_edge(s3(i), s4(i + 2));
  g.add_edge(s3(k), s4(j));
  g.add_edge(s3(k), s4(j + 1));
  for (int i = k + 1; i <= l; ++i) g.add_edge(s3(i), s4(i + 1));
  for (int i = 1; i <= j; ++i) g.add_edge(s4(i), s5(i));
  for (int i = j + 1; i <= l + 1; ++i) g.add_edge(s4(i), s5(i - 1));
  out.graph = std::move(g);
  validate_link(out);
  return out;
}

struct Rotation {
  int l = 0, j = 0, k = 0;  // j == k encodes the identity rotation
};

inline void validate_permutation(const std::vector<int>& sigma) {
  const int l = static_cast<int>(sigma.size());
  if (l < 1) throw InputError("permutation: empty");
  std::vector<char> seen(l + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > l || seen[v]) throw InputError("permutation: not a bijection on [l]");
    seen[v] = 1;
  }
}

// Selection-sort decomposition: exactly l-1 rotations whose composition
// (later applied after earlier) equals sigma. sigma[i-1] = sigma(i).
inline std::vector<Rotation> decompose_rotations(const std::vector<int>& sigma) {
  validate_permutation(sigma);
  const int l = static_cast<int>(sigma.size());
  std::vector<int> pos(l + 1);  // current position of each item
  for (int p = 1; p <= l; ++p) pos[p] = p;
  std::vector<int> inv(l + 1);
  for (int p = 1; p <= l; ++p) inv[sigma[p - 1]] = p;
  std::vector<Rotation> rots;
  for (int i = 1; i <= l - 1; ++i) {
    const int item = inv[i];  // must end at position i
    const int k = pos[item];
    rots.push_back({l, i, k});
    for (int p = 1; p <= l; ++p) pos[p] = rotation_apply(l, i, k, pos[p]);
  }
  return rots;
}

// Chain of rotation gadgets realizing sigma; identity rotations become plain
// wire bundles. Satisfies: every input assignment extends (P2) and every
// coloring copies input i to output sigma(i) (P3).
inline Link permutation_gadget(const std::vector<int>& sigma) {
  validate_permutation(sigma);
  const int l = static_cast<int>(sigma.size());
  auto rots = decompose_rotations(sigma);
  std::optional<Link> acc;
  for (const auto& r : rots) {
    Link piece = r.j == r.k ? identity_link(l) : rotation_gadget(l, r.j, r.k);
    acc = acc ? chain(*acc, piece) : std::move(piece);
  }
  if (!acc) return identity_link(l);  // l == 1
  return *acc;
}

// --- Pair and triple systems ------------------------------------------------

// Pairwise disjoint pairs {i, i+1}, stored by their lower elements, ascending.
using PairSystem = std::vector<int>;
// Pairwise disjoint 3-subsets of [n], each sorted ascending.
using TripleSystem = std::vector<std::array<int, 3>>;

inline void validate_pairs(int n, const PairSystem& I) {
  for (std::size_t t = 0; t < I.size(); ++t) {
    if (I[t] < 1 || I[t] + 1 > n) throw InputError("pair system: pair out of range");
    if (t > 0 && I[t] < I[t - 1] + 2) throw InputError("pair system: pairs overlap");
  }
}

inline void validate_triples(int n, const TripleSystem& I) {
  std::vector<char> seen(n + 1, 0);
  for (const auto& t : I) {
    if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= n))
      throw InputError("triple system: triple must be sorted within [n]");
    for (int v : t) {
      if (seen[v]) throw InputError("triple system: triples overlap");
      seen[v] = 1;
    }
  }
}

// gamma: [n] + pairs -> [n+|I|]; indices keep their natural order and each
// pair lands between its endpoints.
struct GammaMap {
  std::vector<int> of_index;   // 1-based; of_index[i] for i in [n]
  std::map<int, int> of_pair;  // lower element -> position
  int range = 0;
};

inline GammaMap gamma_map(int n, const PairSystem& I) {
  validate_pairs(n, I);
  GammaMap g;
  g.of_index.assign(n + 1, 0);
  int pos = 0;
  std::size_t pi = 0;
  for (int i = 1; i <= n; ++i) {
    g.of_index[i] = ++pos;
    if (pi < I.size() && I[pi] == i) {
      g.of_pair[i] = ++pos;
      ++pi;
    }
  }
  g.range = pos;
  return g;
}

// delta: [N-|I|] -> [N], ascending, image = positions that are not a pair's
// lower element (the NOT-cc gadget drops the pair's first wire).
inline std::vector<int> delta_map(int N, const PairSystem& I) {
  validate_pairs(N, I);
  std::vector<int> d{0};  // 1-based
  std::size_t pi = 0;
  for (int i = 1; i <= N; ++i) {
    if (pi < I.size() && I[pi] == i) {
      ++pi;
      continue;
    }
    d.push_back(i);
  }
  return d;
}

namespace rdetail {

inline ColorList swap12(const ColorList& l) {
  ColorList out;
  for (Color c : l) out.push_back(c == 1 ? 2 : (c == 2 ? 1 : c));
  return normalized_list(std::move(out));
}

struct Builder {
  std::vector<ColorList> lists;
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex add(ColorList l) {
    lists.push_back(std::move(l));
    return static_cast<Vertex>(lists.size()) - 1;
  }
  void edge(Vertex u, Vertex v) { edges.emplace_back(u, v); }
  Link finish(int in_arity, int out_arity, bool swap_colors) {
    Link l;
    l.in_arity = in_arity;
    l.out_arity = out_arity;
    l.lists = std::move(lists);
    if (swap_colors)
      for (auto& cl : l.lists) cl = swap12(cl);
    l.graph = OrderedGraph::build(static_cast<int>(l.lists.size()), edges);
    validate_link(l);
    return l;
  }
};

}  // namespace rdetail

// Indicator gadget for color c and pair system I on [n]: wires copy input i
// to output gamma(i); the extra output gamma({i,i+1}) is forced to c exactly
// when both pair inputs are c, and can take the other color otherwise.
// Five layers; 5n + 5|I| vertices.
inline Link indicator_gadget(int c, int n, const PairSystem& I) {
  if (c != 1 && c != 2) throw PreconditionError("indicator_gadget: c must be 1 or 2");
  if (n < 1) throw PreconditionError("indicator_gadget: n must be positive");
  validate_pairs(n, I);
  std::vector<char> lower(n + 1, 0);
  for (int i : I) lower[i] = 1;

  rdetail::Builder b;
  const ColorList wire{1, 2};
  std::vector<Vertex> v1(n + 1), v2(n + 1), v3(n + 1), v4(n + 1), v5(n + 1);
  std::map<int, Vertex> u2, w2, z3, z4, z5;

  for (int i = 1; i <= n; ++i) v1[i] = b.add(wire);
  for (int i = 1; i <= n; ++i) {
    v2[i] = b.add(wire);
    if (lower[i]) {
      u2[i] = b.add({1, 3});
      w2[i] = b.add({1, 4});
    }
  }
  for (int i = 1; i <= n; ++i) {
    v3[i] = b.add(wire);
    if (lower[i]) z3[i] = b.add({1, 3, 4});
  }
  for (int i = 1; i <= n; ++i) {
    v4[i] = b.add(wire);
    if (lower[i]) z4[i] = b.add(wire);
  }
  for (int i = 1; i <= n; ++i) {
    v5[i] = b.add(wire);
    if (lower[i]) z5[i] = b.add(wire);
  }

  for (int i = 1; i <= n; ++i) {
    b.edge(v1[i], v2[i]);
    b.edge(v2[i], v3[i]);
    b.edge(v3[i], v4[i]);
    b.edge(v4[i], v5[i]);
    if (lower[i]) {
      b.edge(v1[i], u2[i]);
      b.edge(v1[i + 1], w2[i]);
      b.edge(u2[i], z3[i]);
      b.edge(w2[i], z3[i]);
      b.edge(z3[i], z4[i]);
      b.edge(z4[i], z5[i]);
    }
  }
  return b.finish(n, n + static_cast<int>(I.size()), c == 2);
}

// NOT-cc gadget for color c and pair system I on [N]: an induced subgraph of
// the indicator gadget. Pairs may not be colored (c,c); surviving wires copy
// input delta(p) to output p.
inline Link notcc_gadget(int c, int N, const PairSystem& I) {
  if (c != 1 && c != 2) throw PreconditionError("notcc_gadget: c must be 1 or 2");
  if (N < 1) throw PreconditionError("notcc_gadget: N must be positive");
  validate_pairs(N, I);
  if (static_cast<int>(I.size()) >= N)
    throw PreconditionError("notcc_gadget: at least one wire must survive");
  std::vector<char> lower(N + 1, 0);
  for (int i : I) lower[i] = 1;

  rdetail::Builder b;
  const ColorList wire{1, 2};
  std::vector<Vertex> v1(N + 1), v2(N + 1, -1), v3(N + 1, -1), v4(N + 1, -1), v5(N + 1, -1);
  std::map<int, Vertex> u2, w2, z3;

  for (int i = 1; i <= N; ++i) v1[i] = b.add(wire);
  for (int i = 1; i <= N; ++i) {
    if (lower[i]) {
      u2[i] = b.add({1, 3});
      w2[i] = b.add({1, 4});
    } else {
      v2[i] = b.add(wire);
    }
  }
  for (int i = 1; i <= N; ++i) {
    if (lower[i]) z3[i] = b.add({3, 4});
    else v3[i] = b.add(wire);
  }
  for (int i = 1; i <= N; ++i)
    if (!lower[i]) v4[i] = b.add(wire);
  for (int i = 1; i <= N; ++i)
    if (!lower[i]) v5[i] = b.add(wire);

  for (int i = 1; i <= N; ++i) {
    if (lower[i]) {
      b.edge(v1[i], u2[i]);
      b.edge(v1[i + 1], w2[i]);
      b.edge(u2[i], z3[i]);
      b.edge(w2[i], z3[i]);
    } else {
      b.edge(v1[i], v2[i]);
      b.edge(v2[i], v3[i]);
      b.edge(v3[i], v4[i]);
      b.edge(v4[i], v5[i]);
    }
  }
  return b.finish(N, N - static_cast<int>(I.size()), c == 2);
}

// The index maps wiring a NOT-ccc gadget: sigma1 juxtaposes each triple's
// first two indices, sigma2 puts each indicator bit immediately before its
// triple's third wire, sigma3 restores the identity.
struct NotcccMaps {
  std::vector<int> sigma1;  // on [n]
  PairSystem iprime;        // pairs {2t-1, 2t} on [n]
  GammaMap gamma;
  std::vector<int> sigma2;  // on [N]
  PairSystem idoubleprime;  // pairs {2t-1, 2t} on [N]
  std::vector<int> delta;   // 1-based
  std::vector<int> sigma3;  // on [n]
};

inline NotcccMaps notccc_maps(int n, TripleSystem triples) {
  validate_triples(n, triples);
  std::sort(triples.begin(), triples.end());
  const int T = static_cast<int>(triples.size());
  const int N = n + T;
  NotcccMaps m;

  m.sigma1.assign(n, 0);
  {
    std::vector<char> assigned(n + 1, 0);
    for (int t = 1; t <= T; ++t) {
      m.sigma1[triples[t - 1][0] - 1] = 2 * t - 1;
      m.sigma1[triples[t - 1][1] - 1] = 2 * t;
      assigned[triples[t - 1][0]] = assigned[triples[t - 1][1]] = 1;
    }
    int next = 2 * T + 1;
    for (int v = 1; v <= n; ++v)
      if (!assigned[v]) m.sigma1[v - 1] = next++;
  }

  for (int t = 1; t <= T; ++t) m.iprime.push_back(2 * t - 1);
  m.gamma = gamma_map(n, m.iprime);

  m.sigma2.assign(N, 0);
  {
    std::vector<char> taken(N + 1, 0);
    for (int t = 1; t <= T; ++t) {
      const int bit_pos = m.gamma.of_pair.at(2 * t - 1);
      const int third_pos = m.gamma.of_index[m.sigma1[triples[t - 1][2] - 1]];
      m.sigma2[bit_pos - 1] = 2 * t - 1;
      m.sigma2[third_pos - 1] = 2 * t;
      taken[bit_pos] = taken[third_pos] = 1;
    }
    int next = 2 * T + 1;
    for (int p = 1; p <= N; ++p)
      if (!taken[p]) m.sigma2[p - 1] = next++;
  }

  for (int t = 1; t <= T; ++t) m.idoubleprime.push_back(2 * t - 1);
  m.delta = delta_map(N, m.idoubleprime);

  std::vector<int> delta_inv(N + 1, 0);
  for (std::size_t p = 1; p < m.delta.size(); ++p) delta_inv[m.delta[p]] = static_cast<int>(p);
  m.sigma3.assign(n, 0);
  for (int v = 1; v <= n; ++v) {
    const int through = delta_inv[m.sigma2[m.gamma.of_index[m.sigma1[v - 1]] - 1]];
    if (through == 0) throw InternalError("notccc_maps: wire dropped by delta");
    m.sigma3[through - 1] = v;
  }
  return m;
}

// NOT-ccc gadget: no triple of I may be monochromatic in color c; wires copy
// input i to output i. Chain: P_sigma1, Ind_c, P_sigma2, B_c, P_sigma3.
inline Link notccc_gadget(int c, int n, const TripleSystem& triples) {
  if (c != 1 && c != 2) throw PreconditionError("notccc_gadget: c must be 1 or 2");
  if (n < 1) throw PreconditionError("notccc_gadget: n must be positive");
  auto m = notccc_maps(n, triples);
  Link out = permutation_gadget(m.sigma1);
  out = chain(out, indicator_gadget(c, n, m.iprime));
  out = chain(out, permutation_gadget(m.sigma2));
  out = chain(out, notcc_gadget(c, n + static_cast<int>(m.iprime.size()), m.idoubleprime));
  out = chain(out, permutation_gadget(m.sigma3));
  return out;
}

// NAE gadget: chaining NOT-111 and NOT-222.
inline Link nae_gadget(int n, const TripleSystem& triples) {
  return chain(notccc_gadget(1, n, triples), notccc_gadget(2, n, triples));
}

// --- Full reduction ---------------------------------------------------------

struct NaeReduction {
  Instance instance;
  std::vector<Vertex> inputs;      // input vertex of variable i at inputs[i-1]
  int num_vars = 0;
  std::vector<int> clause_class;   // 1-based greedy class per clause
};

// Greedy clause partition (clauses sharing a variable conflict, at most 9
// conflicts each, so 10 classes suffice), one NAE gadget per nonempty class,
// chained in class order.
inline NaeReduction reduce_nae3sat(const NaeFormula& f) {
  f.validate();
  std::vector<int> occurrences(f.num_vars + 1, 0);
  for (const auto& cl : f.clauses)
    for (int v : cl) ++occurrences[v];
  for (int v = 1; v <= f.num_vars; ++v)
    if (occurrences[v] > 4)
      throw InputError("reduce_nae3sat: variable " + std::to_string(v) +
                       " appears more than four times; preprocess the formula first");

  const int m = static_cast<int>(f.clauses.size());
  NaeReduction out;
  out.num_vars = f.num_vars;
  out.clause_class.assign(m, 0);
  for (int j = 0; j < m; ++j) {
    std::set<int> blocked;
    for (int j2 = 0; j2 < j; ++j2) {
      bool shares = false;
      for (int a : f.clauses[j])
        for (int b : f.clauses[j2])
          if (a == b) shares = true;
      if (shares) blocked.insert(out.clause_class[j2]);
    }
    int cls = 1;
    while (blocked.count(cls)) ++cls;
    if (cls > 10) throw InternalError("reduce_nae3sat: greedy partition needed more than 10 classes");
    out.clause_class[j] = cls;
  }

  std::map<int, TripleSystem> classes;
  for (int j = 0; j < m; ++j) {
    auto cl = f.clauses[j];
    std::sort(cl.begin(), cl.end());
    classes[out.clause_class[j]].push_back(cl);
  }

  std::optional<Link> acc;
  for (auto& [cls, triples] : classes) {
    std::sort(triples.begin(), triples.end());
    Link g = nae_gadget(f.num_vars, triples);
    acc = acc ? chain(*acc, g) : std::move(g);
  }

  if (acc) {
    if (find_nested_pair(acc->graph))
      throw InternalError("reduce_nae3sat: instance contains a nested pair");
    out.instance = link_instance(*acc);
  } else {
    out.instance =
        Instance{OrderedGraph(f.num_vars), std::vector<ColorList>(f.num_vars, {1, 2}), 4};
  }
  for (int i = 0; i < f.num_vars; ++i) out.inputs.push_back(i);
  return out;
}

inline Assignment decode_nae_assignment(const NaeReduction& red, const Coloring& col) {
  Assignment a(red.num_vars);
  for (int i = 0; i < red.num_vars; ++i) {
    const Color c = col.at(red.inputs[i]);
    if (c != 1 && c != 2) throw InputError("nae decode: input vertex colored outside {1,2}");
    a[i] = c == 1;
  }
  return a;
}

// --- Semantics verification -------------------------------------------------

// Expected behavior of a link: which input assignments are feasible, and
// which output tuples each feasible input can reach.
struct LinkSemanticsSpec {
  std::function<bool(const std::vector<Color>&)> input_feasible;
  std::function<bool(const std::vector<Color>&, const std::vector<Color>&)> output_achievable;
};

struct LinkMismatch {
  std::vector<Color> input;
  std::optional<std::vector<Color>> output;  // empty: feasibility-level mismatch
  bool expected = false;
  bool actual = false;
};

struct LinkReport {
  int inputs_checked = 0;
  long long output_checks = 0;
  std::vector<LinkMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

namespace rdetail {

inline Instance pinned(const Link& l, const std::vector<Color>& in,
                       const std::vector<Color>* out = nullptr) {
  Instance inst = link_instance(l);
  for (int i = 0; i < l.in_arity; ++i) inst.lists[l.input(i)] = {in[i]};
  if (out)
    for (int i = 0; i < l.out_arity; ++i) inst.lists[l.output(i)] = {(*out)[i]};
  return inst;
}

inline std::vector<Color> tuple_from_mask(std::uint32_t mask, int arity) {
  std::vector<Color> t(arity);
  for (int i = 0; i < arity; ++i) t[i] = ((mask >> i) & 1) ? 2 : 1;
  return t;
}

inline LinkReport verify_range(const Link& l, const LinkSemanticsSpec& spec, std::uint32_t lo,
                               std::uint32_t hi) {
  LinkReport rep;
  for (std::uint32_t mask = lo; mask < hi; ++mask) {
    const auto in = tuple_from_mask(mask, l.in_arity);
    const bool expected = spec.input_feasible(in);
    const bool actual = solve_exact(pinned(l, in)).has_value();
    ++rep.inputs_checked;
    if (expected != actual) {
      rep.mismatches.push_back({in, std::nullopt, expected, actual});
      continue;
    }
    if (!actual) continue;
    for (std::uint32_t omask = 0; omask < (std::uint32_t{1} << l.out_arity); ++omask) {
      const auto out = tuple_from_mask(omask, l.out_arity);
      const bool oexp = spec.output_achievable(in, out);
      const bool oact = solve_exact(pinned(l, in, &out)).has_value();
      ++rep.output_checks;
      if (oexp != oact) rep.mismatches.push_back({in, out, oexp, oact});
    }
  }
  return rep;
}

}  // namespace rdetail

// Pins every input assignment (and, for feasible ones, every output tuple)
// and compares oracle feasibility against the spec. Mismatches are reported,
// not thrown.
inline LinkReport verify_link_semantics(const Link& l, const LinkSemanticsSpec& spec,
                                        int threads = 1) {
  if (l.in_arity > 16 || l.out_arity > 16)
    throw PreconditionError("verify_link_semantics: arity too large to enumerate");
  const std::uint32_t total = std::uint32_t{1} << l.in_arity;
  if (threads <= 1 || total < 4) return rdetail::verify_range(l, spec, 0, total);

  const std::uint32_t chunks = std::min<std::uint32_t>(threads, total);
  std::vector<std::future<LinkReport>> futs;
  for (std::uint32_t c = 0; c < chunks; ++c) {
    const std::uint32_t lo = total * c / chunks;
    const std::uint32_t hi = total * (c + 1) / chunks;
    futs.push_back(std::async(std::launch::async, [&l, &spec, lo, hi] {
      return rdetail::verify_range(l, spec, lo, hi);
    }));
  }
  LinkReport rep;
  for (auto& fu : futs) {
    LinkReport part = fu.get();
    rep.inputs_checked += part.inputs_checked;
    rep.output_checks += part.output_checks;
    rep.mismatches.insert(rep.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
  }
  return rep;
}

// --- Expected-semantics builders (the specs the gadgets are tested against) --

inline LinkSemanticsSpec permutation_spec(const std::vector<int>& sigma) {
  validate_permutation(sigma);
  return {[](const std::vector<Color>&) { return true; },
          [sigma](const std::vector<Color>& in, const std::vector<Color>& out) {
            for (std::size_t i = 0; i < sigma.size(); ++i)
              if (out[sigma[i] - 1] != in[i]) return false;
            return true;
          }};
}

inline LinkSemanticsSpec identity_spec(int l) {
  std::vector<int> id(l);
  for (int i = 0; i < l; ++i) id[i] = i + 1;
  return permutation_spec(id);
}

inline LinkSemanticsSpec indicator_spec(int c, int n, const PairSystem& I) {
  auto gamma = gamma_map(n, I);
  return {[](const std::vector<Color>&) { return true; },
          [gamma, c, I](const std::vector<Color>& in, const std::vector<Color>& out) {
            for (std::size_t i = 1; i < gamma.of_index.size(); ++i)
              if (out[gamma.of_index[i] - 1] != in[i - 1]) return false;
            for (int i : I) {
              const bool both = in[i - 1] == c && in[i] == c;
              if (both && out[gamma.of_pair.at(i) - 1] != c) return false;
            }
            return true;
          }};
}

inline LinkSemanticsSpec notcc_spec(int c, int N, const PairSystem& I) {
  auto delta = delta_map(N, I);
  return {[I, c](const std::vector<Color>& in) {
            for (int i : I)
              if (in[i - 1] == c && in[i] == c) return false;
            return true;
          },
          [delta](const std::vector<Color>& in, const std::vector<Color>& out) {
            for (std::size_t p = 1; p < delta.size(); ++p)
              if (out[p - 1] != in[delta[p] - 1]) return false;
            return true;
          }};
}

inline LinkSemanticsSpec notccc_spec(int c, int n, const TripleSystem& I) {
  (void)n;
  return {[I, c](const std::vector<Color>& in) {
            for (const auto& t : I)
              if (in[t[0] - 1] == c && in[t[1] - 1] == c && in[t[2] - 1] == c) return false;
            return true;
          },
          [](const std::vector<Color>& in, const std::vector<Color>& out) { return in == out; }};
}

inline LinkSemanticsSpec nae_spec(int n, const TripleSystem& I) {
  (void)n;
  return {[I](const std::vector<Color>& in) {
            for (const auto& t : I)
              if (in[t[0] - 1] == in[t[1] - 1] && in[t[1] - 1] == in[t[2] - 1]) return false;
            return true;
          },
          [](const std::vector<Color>& in, const std::vector<Color>& out) { return in == out; }};
}

}  // namespace rainbow
}  // namespace olc
