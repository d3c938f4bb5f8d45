#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "olc/core.hpp"

// Ground-truth exact solvers: list-coloring backtracking with singleton
// propagation at every search node, exact coloring counting, and brute-force
// SAT / NAE-SAT evaluation. Deterministic: vertices are branched in index
// order, colors in ascending order, so returned witnesses are reproducible.

namespace olc {

using Deadline = std::chrono::steady_clock::time_point;

namespace detail {

struct SearchState {
  const OrderedGraph* g = nullptr;
  std::vector<ColorList> lists;
  std::vector<char> alive;
  Coloring fixed;
  int alive_count = 0;
};

// (R1)/(R2) propagation, FIFO by index. Fills fixed colors of removed
// vertices; returns false on an empty list.
inline bool propagate(SearchState& s, std::deque<Vertex> q) {
  std::vector<char> queued(s.lists.size(), 0);
  for (Vertex v : q) queued[v] = 1;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop_front();
    if (!s.alive[v]) continue;
    const Color a = s.lists[v].front();
    s.alive[v] = 0;
    --s.alive_count;
    s.fixed[v] = a;
    for (Vertex u : s.g->neighbors(v)) {
      if (!s.alive[u]) continue;
      if (!list_erase(s.lists[u], a)) continue;
      if (s.lists[u].empty()) return false;
      if (s.lists[u].size() == 1 && !queued[u]) {
        q.push_back(u);
        queued[u] = 1;
      }
    }
  }
  return true;
}

inline bool initial_propagate(SearchState& s) {
  std::deque<Vertex> q;
  for (Vertex v = 0; v < static_cast<int>(s.lists.size()); ++v) {
    if (!s.alive[v]) continue;
    if (s.lists[v].empty()) return false;
    if (s.lists[v].size() == 1) q.push_back(v);
  }
  return propagate(s, std::move(q));
}

inline bool search(SearchState& s, const std::optional<Deadline>& dl) {
  if (dl && std::chrono::steady_clock::now() > *dl)
    throw TimeoutError("solve_exact: deadline expired");
  if (s.alive_count == 0) return true;
  Vertex v = 0;
  while (!s.alive[v]) ++v;
  for (Color c : s.lists[v]) {
    SearchState child = s;
    child.lists[v] = {c};
    std::deque<Vertex> q{v};
    if (!propagate(child, std::move(q))) continue;
    if (search(child, dl)) {
      s = std::move(child);
      return true;
    }
  }
  return false;
}

inline std::uint64_t count_rec(SearchState& s) {
  if (s.alive_count == 0) return 1;
  Vertex v = 0;
  while (!s.alive[v]) ++v;
  std::uint64_t total = 0;
  for (Color c : s.lists[v]) {
    SearchState child = s;
    child.lists[v] = {c};
    std::deque<Vertex> q{v};
    if (!propagate(child, std::move(q))) continue;
    total += count_rec(child);
  }
  return total;
}

}  // namespace detail

// Proper list coloring, or nothing iff none exists.
inline std::optional<Coloring> solve_exact(const Instance& inst,
                                           std::optional<Deadline> deadline = std::nullopt) {
  inst.validate();
  detail::SearchState s;
  s.g = &inst.graph;
  s.lists = inst.lists;
  s.alive.assign(inst.size(), 1);
  s.fixed.assign(inst.size(), 0);
  s.alive_count = inst.size();
  if (!detail::initial_propagate(s)) return std::nullopt;
  if (!detail::search(s, deadline)) return std::nullopt;
  if (!is_proper(inst, s.fixed)) throw InternalError("solve_exact: improper witness");
  return s.fixed;
}

// Exact number of proper list colorings. Intended for small instances.
inline std::uint64_t count_colorings(const Instance& inst) {
  inst.validate();
  detail::SearchState s;
  s.g = &inst.graph;
  s.lists = inst.lists;
  s.alive.assign(inst.size(), 1);
  s.fixed.assign(inst.size(), 0);
  s.alive_count = inst.size();
  if (!detail::initial_propagate(s)) return 0;
  return detail::count_rec(s);
}

// --- Formulas -------------------------------------------------------------

// 3-CNF: each clause has exactly three signed literals over distinct
// variables. Variables are 1-based; a negative literal negates.
struct Cnf3 {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  void validate() const {
    if (num_vars < 0) throw InputError("cnf: negative variable count");
    for (const auto& cl : clauses) {
      for (int lit : cl) {
        if (lit == 0 || std::abs(lit) > num_vars)
          throw InputError("cnf: literal out of range");
      }
      const int a = std::abs(cl[0]), b = std::abs(cl[1]), c = std::abs(cl[2]);
      if (a == b || a == c || b == c)
        throw InputError("cnf: clause variables must be distinct");
    }
  }
};

// Positive NAE-3-SAT: three distinct unnegated variables per clause; a clause
// is satisfied when its variables are not all equal.
struct NaeFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  void validate() const {
    if (num_vars < 0) throw InputError("nae: negative variable count");
    for (const auto& cl : clauses) {
      for (int v : cl)
        if (v < 1 || v > num_vars) throw InputError("nae: variable out of range");
      if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
        throw InputError("nae: clause variables must be distinct");
    }
  }
};

// assignment[i] is the value of variable i+1.
using Assignment = std::vector<bool>;

inline bool evaluate(const Cnf3& f, const Assignment& a) {
  for (const auto& cl : f.clauses) {
    bool sat = false;
    for (int lit : cl) {
      const bool val = a[std::abs(lit) - 1];
      if ((lit > 0) == val) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

inline bool nae_evaluate(const NaeFormula& f, const Assignment& a) {
  for (const auto& cl : f.clauses) {
    const bool x = a[cl[0] - 1], y = a[cl[1] - 1], z = a[cl[2] - 1];
    if (x == y && y == z) return false;
  }
  return true;
}

namespace detail {
// Assignments are enumerated in binary counting order: mask 0,1,2,...,
// variable i true iff bit i-1 of the mask is set.
inline Assignment assignment_from_mask(std::uint64_t mask, int num_vars) {
  Assignment a(num_vars);
  for (int i = 0; i < num_vars; ++i) a[i] = (mask >> i) & 1;
  return a;
}
}  // namespace detail

inline std::optional<Assignment> sat_brute(const Cnf3& f) {
  f.validate();
  if (f.num_vars > 30) throw PreconditionError("sat_brute: too many variables");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
    Assignment a = detail::assignment_from_mask(mask, f.num_vars);
    if (evaluate(f, a)) return a;
  }
  return std::nullopt;
}

inline std::optional<Assignment> nae_brute(const NaeFormula& f) {
  f.validate();
  if (f.num_vars > 30) throw PreconditionError("nae_brute: too many variables");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
    Assignment a = detail::assignment_from_mask(mask, f.num_vars);
    if (nae_evaluate(f, a)) return a;
  }
  return std::nullopt;
}

// --- DIMACS ----------------------------------------------------------------

// `p cnf <vars> <clauses>` header, zero-terminated clauses, `c` comments.
inline Cnf3 parse_dimacs_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  int vars = -1, count = -1;
  Cnf3 f;
  std::vector<int> current;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string kind;
      if (!(in >> kind >> vars >> count) || kind != "cnf")
        throw InputError("dimacs: malformed header, expected 'p cnf <vars> <clauses>'");
      f.num_vars = vars;
      continue;
    }
    int lit = 0;
    try {
      std::size_t used = 0;
      lit = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("dimacs: bad token '" + tok + "'");
    } catch (const std::logic_error&) {
      throw InputError("dimacs: bad token '" + tok + "'");
    }
    if (vars < 0) throw InputError("dimacs: clause before header");
    if (lit == 0) {
      if (current.size() != 3) throw InputError("dimacs: each clause must have exactly 3 literals");
      f.clauses.push_back({current[0], current[1], current[2]});
      current.clear();
    } else {
      current.push_back(lit);
    }
  }
  if (!current.empty()) throw InputError("dimacs: unterminated clause");
  if (vars < 0) throw InputError("dimacs: missing header");
  if (count >= 0 && static_cast<int>(f.clauses.size()) != count)
    throw InputError("dimacs: clause count does not match header");
  f.validate();
  return f;
}

inline std::string write_dimacs_cnf(const Cnf3& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& cl : f.clauses) out << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
  return out.str();
}

// DIMACS-like variant: `p nae <vars> <clauses>` header, all-positive
// 3-literal zero-terminated clauses.
inline NaeFormula parse_nae(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  int vars = -1, count = -1;
  NaeFormula f;
  std::vector<int> current;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string kind;
      if (!(in >> kind >> vars >> count) || kind != "nae")
        throw InputError("nae: malformed header, expected 'p nae <vars> <clauses>'");
      f.num_vars = vars;
      continue;
    }
    int lit = 0;
    try {
      std::size_t used = 0;
      lit = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("nae: bad token '" + tok + "'");
    } catch (const std::logic_error&) {
      throw InputError("nae: bad token '" + tok + "'");
    }
    if (vars < 0) throw InputError("nae: clause before header");
    if (lit == 0) {
      if (current.size() != 3) throw InputError("nae: each clause must have exactly 3 variables");
      f.clauses.push_back({current[0], current[1], current[2]});
      current.clear();
    } else {
      if (lit < 0) throw InputError("nae: literals must be positive");
      current.push_back(lit);
    }
  }
  if (!current.empty()) throw InputError("nae: unterminated clause");
  if (vars < 0) throw InputError("nae: missing header");
  if (count >= 0 && static_cast<int>(f.clauses.size()) != count)
    throw InputError("nae: clause count does not match header");
  f.validate();
  return f;
}

inline std::string write_nae(const NaeFormula& f) {
  std::ostringstream out;
  out << "p nae " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& cl : f.clauses) out << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
  return out.str();
}

}  // namespace olc
