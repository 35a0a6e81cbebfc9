#pragma once

#include <vector>

#include "oracles.hpp"
#include "xroute/graph.hpp"
#include "xroute/simulate.hpp"

namespace testutil {

inline std::vector<ref::Pair> ref_edges(const xroute::Graph& g) {
  std::vector<ref::Pair> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline std::vector<std::vector<ref::Pair>> ref_rounds(const xroute::Schedule& s) {
  std::vector<std::vector<ref::Pair>> out;
  for (const auto& m : s.rounds) {
    out.emplace_back();
    for (const auto& e : m.edges) out.back().emplace_back(e.u, e.v);
  }
  return out;
}

inline xroute::Graph graph_of(std::size_t n, std::vector<xroute::Edge> edges) {
  return xroute::Graph::from_edge_list(n, edges);
}

}  // namespace testutil
