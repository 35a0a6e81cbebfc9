#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xroute/common.hpp"
#include "xroute/graph.hpp"
#include "xroute/perm.hpp"

namespace xroute {

/// at[v] is the label of the pebble on vertex v; pebble p_v has label v.
struct PebbleConfig {
  std::vector<Vertex> at;

  static PebbleConfig identity(std::size_t n);
  bool is_bijection() const;

  friend bool operator==(const PebbleConfig&, const PebbleConfig&) = default;
};

/// A set of canonical edges. Need not be maximal.
struct Matching {
  std::vector<Edge> edges;

  /// Canonicalizes every pair and sorts.
  static Matching from_pairs(std::vector<Edge> pairs);
  bool empty() const { return edges.empty(); }

  friend bool operator==(const Matching&, const Matching&) = default;
};

struct Schedule {
  std::vector<Matching> rounds;

  std::size_t size() const { return rounds.size(); }
  void append(const Schedule& other);
  Schedule reversed() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct MatchingFault {
  enum class Kind { EdgeNotInGraph, VertexReused };
  Kind kind;
  Edge edge;      // offending edge
  Vertex vertex;  // reused vertex (VertexReused only)

  std::string describe() const;
};

/// First fault in edge order, or nothing when m is a matching of g.
std::optional<MatchingFault> check_matching(const Graph& g, const Matching& m);

/// Throws EdgeNotInGraph / VertexReused.
void validate_matching(const Graph& g, const Matching& m);

/// Thrown by run_schedule; round is 1-based.
class ScheduleError : public Error {
 public:
  ScheduleError(std::size_t round, const MatchingFault& fault);
  std::size_t round() const { return round_; }
  const MatchingFault& fault() const { return fault_; }

 private:
  std::size_t round_;
  MatchingFault fault_;
};

/// Swaps the pebbles across every edge of m; m is assumed validated.
PebbleConfig apply_matching(PebbleConfig c, const Matching& m);
void apply_matching_in_place(PebbleConfig& c, const Matching& m);

PebbleConfig run_schedule(const Graph& g, const PebbleConfig& start, const Schedule& s);

struct VerifyResult {
  bool ok = false;
  std::size_t rounds_used = 0;
};

/// ok iff running s from the identity leaves pebble p_v on vertex π(v).
VerifyResult verify_achieves(const Graph& g, const Permutation& pi, const Schedule& s);

/// The permutation s realizes: result[v] is where pebble p_v ends up.
Permutation realized_permutation(const Graph& g, const Schedule& s);

}  // namespace xroute
