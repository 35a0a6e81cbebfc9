#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "xroute/common.hpp"

namespace xroute {

/// Immutable simple undirected graph with sorted adjacency (CSR layout).
///
/// Instances built by from_edge_list are validated to be d-regular and
/// connected; the routing pipeline relies on both. The oracle-only fixture
/// constructor keeps simplicity and connectivity but drops regularity.
class Graph {
 public:
  Graph() = default;

  /// Validates simplicity, regularity and connectivity.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  /// Simple connected graph of any degree sequence, for exact-oracle fixtures
  /// such as paths and stars.
  static Graph irregular_fixture(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

  /// Common degree of a regular graph, 0 for irregular fixtures.
  std::size_t degree() const { return degree_; }
  bool regular() const { return regular_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree_of(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Canonical edges (u < v), sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;

 private:
  static Graph build(std::size_t n, std::span<const Edge> edges, bool require_regular);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
  std::size_t degree_ = 0;
  bool regular_ = false;
};

bool is_connected(std::size_t n, std::span<const Edge> edges);

// Generators. All are deterministic; only the random one consumes a seed.

/// Random simple connected d-regular graph from configuration-model pairings.
Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_hypercube(std::size_t dim);

struct SpectralProfile {
  double lambda_hat = 0.0;
  double tol = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Estimates the second largest absolute adjacency eigenvalue by power
/// iteration with the all-ones direction projected out. max_iter == 0 selects
/// the default budget of 10 n ln n iterations.
SpectralProfile estimate_lambda(const Graph& g, double tol = 1e-8,
                                std::size_t max_iter = 0, std::uint64_t seed = 0);

struct MixingSample {
  std::size_t e_count = 0;  // ordered (s, t) adjacent pairs; S∩T edges twice
  double main_term = 0.0;   // |S||T| d / n
  double slack = 0.0;       // lambda sqrt(|S||T|) - |e_count - main_term|

  double deviation() const;
  bool holds() const { return slack >= 0.0; }
};

MixingSample mixing_discrepancy(const Graph& g, double lambda,
                                std::span<const Vertex> s, std::span<const Vertex> t);

/// Single-source BFS distances; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

std::size_t diameter(const Graph& g);

}  // namespace xroute
