#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "olc/core.hpp"

// Canonical interchange formats.
//
// Instance JSON ("olc-instance-v1"):
//   {"n": int, "edges": [[u,v],...] with u<v, "lists": [[int,...],...]}
// Coloring JSON:
//   {"status":"sat","colors":[int,...]}  or  {"status":"unsat"}
// Field order on output is fixed so gadget outputs round-trip bit-exactly.

namespace olc {

using Json = nlohmann::ordered_json;

inline Json instance_to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.size();
  Json edges = Json::array();
  for (const auto& [u, v] : inst.graph.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  Json lists = Json::array();
  for (const auto& l : inst.lists) lists.push_back(l);
  j["lists"] = std::move(lists);
  return j;
}

template <class J>
Instance instance_from_json(const J& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j.contains("lists"))
    throw InputError("instance JSON: expected object with n, edges, lists");
  if (!j["n"].is_number_integer()) throw InputError("instance JSON: n must be an integer");
  const int n = j["n"].template get<int>();
  if (n < 0) throw InputError("instance JSON: n must be non-negative");
  OrderedGraph g(n);
  if (!j["edges"].is_array()) throw InputError("instance JSON: edges must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("instance JSON: each edge must be a pair of integers");
    const int u = e[0].template get<int>();
    const int v = e[1].template get<int>();
    if (u >= v) throw InputError("instance JSON: edges must satisfy u < v");
    g.add_edge(u, v);
  }
  if (!j["lists"].is_array() || static_cast<int>(j["lists"].size()) != n)
    throw InputError("instance JSON: lists must be an array of length n");
  std::vector<ColorList> lists;
  lists.reserve(n);
  for (const auto& l : j["lists"]) {
    if (!l.is_array()) throw InputError("instance JSON: each list must be an array");
    ColorList cl;
    for (const auto& c : l) {
      if (!c.is_number_integer()) throw InputError("instance JSON: colors must be integers");
      cl.push_back(c.template get<int>());
    }
    lists.push_back(normalized_list(std::move(cl)));
  }
  Instance inst{std::move(g), std::move(lists), std::nullopt};
  inst.validate();
  return inst;
}

inline Json coloring_to_json(const std::optional<Coloring>& col) {
  Json j;
  if (col) {
    j["status"] = "sat";
    j["colors"] = *col;
  } else {
    j["status"] = "unsat";
  }
  return j;
}

template <class J>
std::optional<Coloring> coloring_from_json(const J& j) {
  if (!j.is_object() || !j.contains("status"))
    throw InputError("coloring JSON: expected object with status");
  const std::string status = j["status"].template get<std::string>();
  if (status == "unsat") return std::nullopt;
  if (status != "sat") throw InputError("coloring JSON: status must be sat or unsat");
  if (!j.contains("colors") || !j["colors"].is_array())
    throw InputError("coloring JSON: sat document needs a colors array");
  Coloring col;
  for (const auto& c : j["colors"]) col.push_back(c.template get<int>());
  return col;
}

}  // namespace olc
