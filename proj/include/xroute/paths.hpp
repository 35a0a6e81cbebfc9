#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xroute/graph.hpp"
#include "xroute/partition.hpp"
#include "xroute/rng.hpp"
#include "xroute/simulate.hpp"

namespace xroute {

/// Knobs of the layered path construction. Zero means "derive a default"
/// for every integer field; resolve() fills them in for a given graph.
struct BuilderParams {
  double epsilon = 1.0 / 72.0;    // batch fraction: |W| <= epsilon n
  std::size_t growth = 0;         // per-parent frontier fan-out, default max(2, floor(d / lambda))
  std::size_t k = 0;              // layer count, default ceil(log_growth(frontier_target))
  std::size_t frontier_target = 0;  // default max(floor(epsilon n), ceil(sqrt(4 n / d)))
  std::size_t capacity = 0;       // retained edges per layer, default max(2, floor(3 epsilon n))
  std::size_t path_retries = 4;   // attempts per path before deferring it
  bool randomize = true;          // seeded shuffle of neighbour scan order
  bool strict_frontiers = false;  // FrontierStuck on any shortfall, not just an empty frontier
};

/// BuilderParams with every default resolved.
struct ResolvedParams {
  double epsilon = 0.0;
  std::size_t growth = 2;
  std::size_t k = 1;
  std::size_t frontier_target = 1;
  std::size_t batch_limit = 1;
  std::size_t capacity = 2;
  std::size_t path_retries = 4;
  bool randomize = true;
  bool strict_frontiers = false;
};

/// lambda_hat <= 0 means "unknown" and yields growth 2.
ResolvedParams resolve(const BuilderParams& params, std::size_t n, std::size_t d,
                       double lambda_hat);

/// Smallest k >= 1 with growth^k >= target.
std::size_t layers_for(std::size_t target, std::size_t growth);

struct LayerSides {
  Side a;
  Side b;
};

/// Layer z (1-based) has A_z = start_side for odd z and B_z its complement.
std::vector<LayerSides> plan_layers(Side start_side, std::size_t k);

/// Retained edges of the committed paths, one safe state per layer.
class LayerState {
 public:
  LayerState(std::size_t n, std::size_t k, std::size_t capacity);

  std::size_t layers() const { return retained_.size(); }
  std::size_t capacity() const { return capacity_; }

  /// Edges (a, b) with a in A_z and b in B_z, for 1 <= z <= k.
  const std::vector<std::pair<Vertex, Vertex>>& retained(std::size_t z) const {
    return retained_[z - 1];
  }
  bool b_used(std::size_t z, Vertex b) const { return used_b_[z - 1][b] != 0; }
  bool has_room() const;

  /// Adds the z-th and (l+1-z)-th edges of a path to every layer.
  void commit(const std::vector<Vertex>& path);

 private:
  std::size_t capacity_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> retained_;
  std::vector<std::vector<char>> used_b_;
};

/// One layer of a growing frontier; parent[i] indexes the previous layer.
struct FrontierLayer {
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> parent;
};

/// Frontiers rooted at w (S) and w' (S'); index 0 is the root layer.
struct FrontierPair {
  std::vector<FrontierLayer> s;
  std::vector<FrontierLayer> s_prime;
};

class FrontierStuck : public Error {
 public:
  FrontierStuck(std::size_t layer, std::size_t achieved);
  std::size_t layer() const { return layer_; }
  std::size_t achieved() const { return achieved_; }

 private:
  std::size_t layer_;
  std::size_t achieved_;
};

FrontierPair grow_frontiers(const Graph& g, const Partition& partition,
                            const std::vector<LayerSides>& layers, const LayerState& state,
                            Vertex w, Vertex w_prime, const ResolvedParams& params, Rng& rng);

/// First canonical edge between the last layers of S and S'. Throws
/// NoCrossingEdge when there is none.
Edge connect_frontiers(const Graph& g, const FrontierPair& f);

/// Walks parents back from both ends of the crossing edge; returns
/// w, v_1, ..., v_k, v'_k, ..., v'_1, w'.
std::vector<Vertex> extract_path(const FrontierPair& f, const Edge& crossing);

/// Paths of common length 2k+1 whose z-th and (2k+2-z)-th edges form a
/// matching for every z.
struct SwitchablePathFamily {
  std::size_t k = 0;
  std::vector<std::vector<Vertex>> paths;

  std::size_t length() const { return 2 * k + 1; }
  /// E_z for 1 <= z <= k.
  Matching slice(std::size_t z) const;
  /// The (k+1)-st edges.
  Matching middle() const;
};

struct FamilyViolation {
  enum class Kind { Length, EndpointReuse, NotAdjacent, SliceNotMatching, MiddleNotMatching };
  Kind kind;
  std::size_t path = 0;   // path index, or slice index for SliceNotMatching
  std::string detail;
};

struct FamilyAudit {
  std::vector<FamilyViolation> violations;
  bool ok() const { return violations.empty(); }
};

FamilyAudit verify_switchable(const Graph& g, const SwitchablePathFamily& fam);

/// E_1, ..., E_k, middle, E_k, ..., E_1. Throws InvalidFamily on a
/// structurally broken family.
Schedule family_schedule(const SwitchablePathFamily& fam);

struct FamilyBuild {
  SwitchablePathFamily family;
  std::vector<std::pair<Vertex, Vertex>> routed;    // pairs with a committed path
  std::vector<std::pair<Vertex, Vertex>> residual;  // pairs deferred to a later batch
};

/// Builds a path w -> partner for each pair in order, committing only each
/// path's own edges into the layer state. Pairs that fail path_retries
/// attempts are deferred into residual. Throws BatchFailed if no pair at all
/// could be routed.
FamilyBuild build_family(const Graph& g, const Partition& partition,
                         const std::vector<std::pair<Vertex, Vertex>>& pairs,
                         const ResolvedParams& params, std::uint64_t seed);

/// Debug dump: each path's vertex sequence, then every slice matching.
std::string family_dump(const SwitchablePathFamily& fam);

enum class CheckMode { Exhaustive, Sampled };

struct NonblockingReport {
  bool ok = true;
  std::size_t subsets_checked = 0;
  std::vector<Vertex> witness;          // first failing X
  std::size_t witness_neighbourhood = 0;
};

/// Checks that every X ⊆ A with 1 <= |X| <= 2a has at least 2 dd |X|
/// neighbours in B. Exhaustive mode needs |A| <= 20.
NonblockingReport nonblocking_hypothesis_check(const Graph& g, const std::vector<Vertex>& a_side,
                                               const std::vector<Vertex>& b_side,
                                               std::size_t dd, std::size_t a, CheckMode mode,
                                               std::size_t samples = 10000,
                                               std::uint64_t seed = 0);

}  // namespace xroute
