#include "xroute/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xroute/io.hpp"
#include "xroute/partition.hpp"

namespace xroute {

namespace {

// Zero-progress batches tolerated with fresh seeds before escalating.
constexpr std::size_t kFreshSeedRetries = 3;

std::string describe_pairs(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::ostringstream os;
  os << pairs.size() << " pair(s) unrouted";
  const std::size_t shown = std::min<std::size_t>(pairs.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) os << (i ? ", " : ": ") << pairs[i].first << "<->" << pairs[i].second;
  if (shown < pairs.size()) os << ", ...";
  return os.str();
}

}  // namespace

RoutingFailed::RoutingFailed(std::vector<std::pair<Vertex, Vertex>> residual)
    : Error(Errc::RoutingFailed, describe_pairs(residual)), residual_(std::move(residual)) {}

std::vector<std::pair<Vertex, Vertex>> select_batch(
    std::vector<std::pair<Vertex, Vertex>> pending, std::size_t limit) {
  for (auto& [a, b] : pending) {
    if (a == b) throw Error(Errc::InvalidArgument, "pending pair with equal endpoints");
    if (b < a) std::swap(a, b);
  }
  std::sort(pending.begin(), pending.end());
  if (pending.size() > limit) pending.resize(limit);
  return pending;
}

std::optional<std::size_t> theoretical_round_bound(std::size_t n, std::size_t d, double lambda,
                                                   double epsilon) {
  const double dd = static_cast<double>(d);
  if (!(lambda < dd / 72.0)) return std::nullopt;
  if (std::abs(epsilon - 1.0 / 72.0) > 1e-12) return std::nullopt;
  const double eps_n = epsilon * static_cast<double>(n);
  std::size_t k = 1;
  if (lambda > 0.0 && eps_n > 1.0) {
    const double raw = std::log(eps_n) / std::log(dd / lambda);
    k = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw - 1e-12)));
  }
  const auto inv_eps = static_cast<std::size_t>(std::ceil(1.0 / epsilon - 1e-9));
  return 2 * (2 * k + 1) * 2 * inv_eps;
}

InvolutionRoute route_involution(const Graph& g, const Involution& pi,
                                 const RouteOptions& options, const ResolvedParams& params,
                                 std::uint64_t stream) {
  InvolutionRoute out;
  auto pending_all = pi.pairs();
  if (pending_all.empty()) return out;

  if (options.direct_swaps) {
    SwitchablePathFamily direct;
    direct.k = 0;
    std::vector<std::pair<Vertex, Vertex>> rest;
    for (const auto& pr : pending_all) {
      if (g.has_edge(pr.first, pr.second)) {
        direct.paths.push_back({pr.first, pr.second});
      } else {
        rest.push_back(pr);
      }
    }
    if (!direct.paths.empty()) {
      out.schedule.append(family_schedule(direct));
      ++out.batches;
      out.batch_k.push_back(0);
    }
    pending_all = std::move(rest);
    if (pending_all.empty()) return out;
  }

  Partition partition;
  try {
    partition = find_partition(g, pi, options.beta, options.max_resamples,
                               derive_seed(options.seed, "partition", stream));
  } catch (const Error& e) {
    if (e.code() != Errc::ResamplesExhausted) throw;
    throw Error(Errc::PartitionFailed, e.what());
  }

  const std::uint64_t builder_seed = derive_seed(options.seed, "builder", stream);
  std::uint64_t batch_index = 0;
  for (Side side : {Side::One, Side::Two}) {
    std::vector<std::pair<Vertex, Vertex>> pending;
    for (const auto& pr : pending_all) {
      if (partition.side[pr.first] == side) pending.push_back(pr);
    }

    std::size_t limit = params.batch_limit;
    std::size_t k_extra = 0;
    std::size_t stalls = 0;
    while (!pending.empty()) {
      const auto batch = select_batch(pending, limit);
      ResolvedParams p = params;
      p.k += k_extra;
      const std::uint64_t seed = derive_seed(builder_seed, "batch", batch_index++);
      FamilyBuild built;
      try {
        built = build_family(g, partition, batch, p, seed);
      } catch (const Error& e) {
        if (e.code() != Errc::BatchFailed) throw;
        // Retry ladder: fresh seeds, then one extra layer, then halve the batch.
        ++stalls;
        if (stalls <= kFreshSeedRetries) continue;
        if (k_extra == 0) {
          k_extra = 1;
          continue;
        }
        if (limit > 1) {
          limit = (limit + 1) / 2;
          k_extra = 0;
          stalls = 0;
          continue;
        }
        throw RoutingFailed(pending);
      }
      out.schedule.append(family_schedule(built.family));
      ++out.batches;
      out.batch_k.push_back(p.k);
      std::sort(built.routed.begin(), built.routed.end());
      std::erase_if(pending, [&](const auto& pr) {
        return std::binary_search(built.routed.begin(), built.routed.end(), pr);
      });
      limit = params.batch_limit;
      k_extra = 0;
      stalls = 0;
    }
  }
  return out;
}

RouteReport route(const Graph& g, const Permutation& pi, const RouteOptions& options) {
  if (!g.regular()) throw Error(Errc::InvalidArgument, "routing needs a regular graph");
  if (pi.size() != g.n()) throw Error(Errc::LengthMismatch, "permutation size does not match graph");

  RouteReport report;
  report.lambda_hat = options.lambda_hat
                          ? *options.lambda_hat
                          : estimate_lambda(g, 1e-6, 0, derive_seed(options.seed, "lambda")).lambda_hat;
  const ResolvedParams params = resolve(options.builder, g.n(), g.degree(), report.lambda_hat);
  report.k = params.k;
  report.epsilon = params.epsilon;
  report.growth = params.growth;
  report.theoretical_bound =
      theoretical_round_bound(g.n(), g.degree(), report.lambda_hat, params.epsilon);

  const InvolutionPair parts = decompose_into_involutions(pi);
  InvolutionRoute first = route_involution(g, parts.sigma, options, params, 0);
  InvolutionRoute second = route_involution(g, parts.tau, options, params, 1);

  report.schedule = std::move(first.schedule);
  report.schedule.append(second.schedule);
  report.rounds = report.schedule.size();
  report.batches_sigma = first.batches;
  report.batches_tau = second.batches;
  report.batch_k = std::move(first.batch_k);
  report.batch_k.insert(report.batch_k.end(), second.batch_k.begin(), second.batch_k.end());

  const VerifyResult check = verify_achieves(g, pi, report.schedule);
  if (!check.ok) {
    throw Error(Errc::RoutingFailed, "constructed schedule does not realize the permutation");
  }
  report.verified = true;
  return report;
}

std::string report_text(const RouteReport& report) {
  std::ostringstream os;
  os << "rounds: " << report.rounds << '\n';
  os << "batches: " << report.batches_sigma << ' ' << report.batches_tau << '\n';
  os << "k: " << report.k << '\n';
  os << "batch_k:";
  for (std::size_t k : report.batch_k) os << ' ' << k;
  os << '\n';
  os << "epsilon: " << format_fixed(report.epsilon, 8) << '\n';
  os << "growth: " << report.growth << '\n';
  os << "lambda_hat: " << format_fixed(report.lambda_hat, 6) << '\n';
  os << "theoretical_bound: "
     << (report.theoretical_bound ? std::to_string(*report.theoretical_bound) : "infeasible") << '\n';
  os << "verified: " << (report.verified ? "true" : "false") << '\n';
  os << "schedule:\n" << schedule_text(report.schedule);
  return os.str();
}

}  // namespace xroute
