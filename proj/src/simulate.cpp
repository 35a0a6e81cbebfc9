#include "xroute/simulate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace xroute {

PebbleConfig PebbleConfig::identity(std::size_t n) {
  PebbleConfig c;
  c.at.resize(n);
  std::iota(c.at.begin(), c.at.end(), Vertex{0});
  return c;
}

bool PebbleConfig::is_bijection() const {
  std::vector<char> seen(at.size(), 0);
  for (Vertex p : at) {
    if (p >= at.size() || seen[p]) return false;
    seen[p] = 1;
  }
  return true;
}

Matching Matching::from_pairs(std::vector<Edge> pairs) {
  for (Edge& e : pairs) e = make_edge(e.u, e.v);
  std::sort(pairs.begin(), pairs.end());
  return Matching{std::move(pairs)};
}

void Schedule::append(const Schedule& other) {
  rounds.insert(rounds.end(), other.rounds.begin(), other.rounds.end());
}

Schedule Schedule::reversed() const {
  Schedule out{rounds};
  std::reverse(out.rounds.begin(), out.rounds.end());
  return out;
}

std::string MatchingFault::describe() const {
  if (kind == Kind::EdgeNotInGraph) return "edge " + to_string(edge) + " is not in the graph";
  return "vertex " + std::to_string(vertex) + " is used twice (at edge " + to_string(edge) + ")";
}

std::optional<MatchingFault> check_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.n(), 0);
  for (const Edge& e : m.edges) {
    if (e.u == e.v || !g.has_edge(e.u, e.v)) {
      return MatchingFault{MatchingFault::Kind::EdgeNotInGraph, e, 0};
    }
    for (Vertex x : {e.u, e.v}) {
      if (used[x]) return MatchingFault{MatchingFault::Kind::VertexReused, e, x};
      used[x] = 1;
    }
  }
  return std::nullopt;
}

void validate_matching(const Graph& g, const Matching& m) {
  if (auto fault = check_matching(g, m)) {
    throw Error(fault->kind == MatchingFault::Kind::EdgeNotInGraph ? Errc::EdgeNotInGraph
                                                                   : Errc::VertexReused,
                fault->describe());
  }
}

ScheduleError::ScheduleError(std::size_t round, const MatchingFault& fault)
    : Error(fault.kind == MatchingFault::Kind::EdgeNotInGraph ? Errc::EdgeNotInGraph
                                                              : Errc::VertexReused,
            "round " + std::to_string(round) + ": " + fault.describe()),
      round_(round),
      fault_(fault) {}

void apply_matching_in_place(PebbleConfig& c, const Matching& m) {
  for (const Edge& e : m.edges) std::swap(c.at[e.u], c.at[e.v]);
}

PebbleConfig apply_matching(PebbleConfig c, const Matching& m) {
  apply_matching_in_place(c, m);
  return c;
}

PebbleConfig run_schedule(const Graph& g, const PebbleConfig& start, const Schedule& s) {
  if (start.at.size() != g.n()) {
    throw Error(Errc::LengthMismatch, "configuration size does not match graph");
  }
  PebbleConfig c = start;
  for (std::size_t r = 0; r < s.rounds.size(); ++r) {
    if (auto fault = check_matching(g, s.rounds[r])) throw ScheduleError(r + 1, *fault);
    apply_matching_in_place(c, s.rounds[r]);
    assert(c.is_bijection());
  }
  return c;
}

VerifyResult verify_achieves(const Graph& g, const Permutation& pi, const Schedule& s) {
  if (pi.size() != g.n()) {
    throw Error(Errc::LengthMismatch, "permutation size does not match graph");
  }
  const PebbleConfig end = run_schedule(g, PebbleConfig::identity(g.n()), s);
  VerifyResult out;
  out.rounds_used = s.size();
  out.ok = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (end.at[pi(v)] != v) {
      out.ok = false;
      break;
    }
  }
  return out;
}

Permutation realized_permutation(const Graph& g, const Schedule& s) {
  const PebbleConfig end = run_schedule(g, PebbleConfig::identity(g.n()), s);
  std::vector<Vertex> where(g.n());
  for (Vertex v = 0; v < g.n(); ++v) where[end.at[v]] = v;
  return Permutation(std::move(where));
}

}  // namespace xroute
