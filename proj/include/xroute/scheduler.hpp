#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xroute/graph.hpp"
#include "xroute/paths.hpp"
#include "xroute/perm.hpp"
#include "xroute/simulate.hpp"

namespace xroute {

struct RouteOptions {
  BuilderParams builder;
  double beta = 1.0 / 3.0;
  std::size_t max_resamples = 0;  // 0: 100 n
  std::uint64_t seed = 0;
  /// Known lambda(G); estimated when absent.
  std::optional<double> lambda_hat;
  /// Route pairs that are already graph edges in one extra round (a family
  /// of single-edge paths, k = 0) before the layered construction.
  bool direct_swaps = true;
};

struct InvolutionRoute {
  Schedule schedule;
  std::size_t batches = 0;
  std::vector<std::size_t> batch_k;  // k of each appended family, in order
};

struct RouteReport {
  Schedule schedule;
  std::size_t rounds = 0;
  std::size_t batches_sigma = 0;
  std::size_t batches_tau = 0;
  std::vector<std::size_t> batch_k;
  std::size_t k = 0;
  double epsilon = 0.0;
  std::size_t growth = 0;
  double lambda_hat = 0.0;
  std::optional<std::size_t> theoretical_bound;
  bool verified = false;
};

class RoutingFailed : public Error {
 public:
  explicit RoutingFailed(std::vector<std::pair<Vertex, Vertex>> residual);
  const std::vector<std::pair<Vertex, Vertex>>& residual() const { return residual_; }

 private:
  std::vector<std::pair<Vertex, Vertex>> residual_;
};

/// One endpoint per pair, pairs taken in ascending order of their smaller
/// endpoint until limit pairs are chosen. Returned pairs are (w, pi(w)) with
/// w the smaller endpoint, so no w's partner is itself in W.
std::vector<std::pair<Vertex, Vertex>> select_batch(
    std::vector<std::pair<Vertex, Vertex>> pending, std::size_t limit);

/// Closed-form round count 2 (2k+1) 2 ceil(1/eps), k = ceil(log_{d/lambda}(eps n)),
/// available only when lambda < d/72 and eps = 1/72.
std::optional<std::size_t> theoretical_round_bound(std::size_t n, std::size_t d, double lambda,
                                                   double epsilon);

/// Routes a single involution. stream names the seed sub-stream.
InvolutionRoute route_involution(const Graph& g, const Involution& pi,
                                 const RouteOptions& options, const ResolvedParams& params,
                                 std::uint64_t stream);

/// Full pipeline: pi = tau∘sigma, sigma's rounds first. The returned schedule
/// has been verified by simulation.
RouteReport route(const Graph& g, const Permutation& pi, const RouteOptions& options);

/// Text serialization: key/value header followed by the schedule rounds.
std::string report_text(const RouteReport& report);

}  // namespace xroute
