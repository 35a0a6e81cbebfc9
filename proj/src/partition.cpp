#include "xroute/partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>

#include "xroute/rng.hpp"

namespace xroute {

std::vector<Vertex> Partition::members(Side s) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < side.size(); ++v) {
    if (side[v] == s) out.push_back(v);
  }
  return out;
}

std::size_t side_threshold(std::size_t d, double beta) {
  // Guard against beta * d landing a hair above an integer.
  const double raw = beta * static_cast<double>(d);
  return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 0.5)) {
    throw Error(Errc::InvalidArgument, "beta must lie in (0, 1/2)");
  }
}

void check_sizes(const Graph& g, const Involution& pi) {
  if (pi.size() != g.n()) {
    throw Error(Errc::LengthMismatch, "involution size does not match graph");
  }
}

}  // namespace

PartitionAudit check_partition(const Graph& g, const Involution& pi, const Partition& p,
                               double beta) {
  check_sizes(g, pi);
  if (p.size() != g.n()) throw Error(Errc::LengthMismatch, "partition size does not match graph");
  PartitionAudit audit;
  audit.threshold = side_threshold(g.degree(), beta);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v < pi(v) && p.side[v] != p.side[pi(v)]) audit.split_pairs.push_back({v, pi(v)});
    std::size_t one = 0;
    for (Vertex w : g.neighbors(v)) one += p.side[w] == Side::One ? 1 : 0;
    const std::size_t two = g.degree_of(v) - one;
    if (one < audit.threshold || two < audit.threshold) {
      audit.low_degree.push_back({v, one, two});
    }
  }
  return audit;
}

Partition find_partition(const Graph& g, const Involution& pi, double beta,
                         std::size_t max_resamples, std::uint64_t seed, RepairRule rule) {
  check_beta(beta);
  check_sizes(g, pi);
  const std::size_t n = g.n();
  if (max_resamples == 0) max_resamples = 100 * n;
  const std::size_t threshold = side_threshold(g.degree(), beta);
  Rng rng(derive_seed(seed, "find-partition"));

  // A cycle is named by its smaller vertex; both its vertices share one coin.
  Partition p;
  p.side.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v <= pi(v)) {
      const Side s = rng.coin() ? Side::One : Side::Two;
      p.side[v] = s;
      p.side[pi(v)] = s;
    }
  }

  std::vector<std::size_t> on_one(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) on_one[v] += p.side[w] == Side::One ? 1 : 0;
  }
  auto count_on = [&](Vertex v, Side s) {
    return s == Side::One ? on_one[v] : g.degree_of(v) - on_one[v];
  };
  auto violates = [&](Vertex v) {
    return count_on(v, Side::One) < threshold || count_on(v, Side::Two) < threshold;
  };
  std::set<Vertex> violators;
  for (Vertex v = 0; v < n; ++v) {
    if (violates(v)) violators.insert(v);
  }

  auto set_side = [&](Vertex x, Side s) {
    if (p.side[x] == s) return;
    p.side[x] = s;
    for (Vertex w : g.neighbors(x)) {
      if (s == Side::One) {
        ++on_one[w];
      } else {
        --on_one[w];
      }
      if (violates(w)) {
        violators.insert(w);
      } else {
        violators.erase(w);
      }
    }
  };
  auto colour_cycle = [&](Vertex c, Side s) {
    set_side(c, s);
    set_side(pi(c), s);
  };

  std::vector<Vertex> scope;
  std::vector<std::size_t> loss(n, 0);
  std::vector<Vertex> touched;
  // Vertices a recolouring of cycle c to side s would push below threshold.
  auto breakage = [&](Vertex c, Side s) {
    const Side from = other(s);
    touched.clear();
    const Vertex members[2] = {c, pi(c)};
    for (std::size_t i = 0; i < (c == pi(c) ? 1u : 2u); ++i) {
      for (Vertex u : g.neighbors(members[i])) {
        if (loss[u]++ == 0) touched.push_back(u);
      }
    }
    std::size_t broken = 0;
    for (Vertex u : touched) {
      if (!violates(u) && count_on(u, from) < threshold + loss[u]) ++broken;
      loss[u] = 0;
    }
    return broken;
  };

  std::size_t steps = 0;
  while (!violators.empty()) {
    if (steps >= max_resamples) {
      throw Error(Errc::ResamplesExhausted,
                  std::to_string(violators.size()) + " vertices still below threshold " +
                      std::to_string(threshold) + " after " + std::to_string(steps) +
                      " repair steps");
    }
    ++steps;
    const Vertex v = *violators.begin();
    scope.clear();

    if (rule == RepairRule::MoserTardos) {
      scope.push_back(std::min(v, pi(v)));
      for (Vertex w : g.neighbors(v)) scope.push_back(std::min(w, pi(w)));
      std::sort(scope.begin(), scope.end());
      scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
      for (Vertex c : scope) colour_cycle(c, rng.coin() ? Side::One : Side::Two);
      continue;
    }

    const Side deficient = count_on(v, Side::One) < threshold ? Side::One : Side::Two;
    for (Vertex w : g.neighbors(v)) {
      if (p.side[w] != deficient) scope.push_back(std::min(w, pi(w)));
    }
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
    if (scope.empty()) continue;  // degree below threshold; runs out the budget

    Vertex pick = scope[rng.below(scope.size())];
    if (rng.below(8) != 0) {
      std::size_t best = SIZE_MAX, ties = 0;
      for (Vertex c : scope) {
        const std::size_t cost = breakage(c, deficient);
        if (cost < best) {
          best = cost;
          ties = 1;
          pick = c;
        } else if (cost == best && rng.below(++ties) == 0) {
          pick = c;
        }
      }
    }
    colour_cycle(pick, deficient);
  }
  return p;
}

}  // namespace xroute
