// Reference implementations used only by the tests. None of them call into
// the library, so agreement with it is evidence rather than tautology.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ref {

using Pair = std::pair<unsigned, unsigned>;

// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a[r][p], arq = a[r][q];
          a[r][p] = c * arp - s * arq;
          a[r][q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a[p][r], aqr = a[q][r];
          a[p][r] = c * apr - s * aqr;
          a[q][r] = s * apr + c * aqr;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

// Second largest absolute adjacency eigenvalue of a connected d-regular graph:
// drop the top eigenvalue d once, take the largest magnitude of the rest.
inline double dense_lambda(std::size_t n, const std::vector<Pair>& edges) {
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = 1.0;
  auto eig = jacobi_eigenvalues(a);
  eig.pop_back();
  double best = 0.0;
  for (double x : eig) best = std::max(best, std::abs(x));
  return best;
}

// All nonempty matchings as lists of edge indices, by bitmask over edges.
inline std::vector<std::vector<Pair>> matchings_by_mask(const std::vector<Pair>& edges) {
  std::vector<std::vector<Pair>> out;
  const std::size_t m = edges.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    std::vector<Pair> chosen;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const std::uint64_t bits = (std::uint64_t{1} << edges[i].first) | (std::uint64_t{1} << edges[i].second);
      if (used & bits) ok = false;
      used |= bits;
      chosen.push_back(edges[i]);
    }
    if (ok) out.push_back(std::move(chosen));
  }
  return out;
}

// Minimum rounds to move pebble v to pi[v], by BFS over configurations
// packed four bits per vertex. Returns -1 if unreachable within cap.
inline int brute_rt(std::size_t n, const std::vector<Pair>& edges, const std::vector<unsigned>& pi,
                    int cap = 64) {
  auto pack = [&](const std::vector<unsigned>& at) {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < n; ++v) key |= std::uint64_t{at[v]} << (4 * v);
    return key;
  };
  std::vector<unsigned> start(n), goal(n);
  std::iota(start.begin(), start.end(), 0u);
  for (std::size_t v = 0; v < n; ++v) goal[pi[v]] = static_cast<unsigned>(v);
  const std::uint64_t goal_key = pack(goal);
  if (pack(start) == goal_key) return 0;
  const auto moves = matchings_by_mask(edges);
  std::unordered_map<std::uint64_t, int> dist{{pack(start), 0}};
  std::deque<std::vector<unsigned>> queue{start};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    const int d = dist[pack(cur)];
    if (d >= cap) continue;
    for (const auto& m : moves) {
      auto next = cur;
      for (auto [u, v] : m) std::swap(next[u], next[v]);
      const auto key = pack(next);
      if (dist.count(key)) continue;
      if (key == goal_key) return d + 1;
      dist[key] = d + 1;
      queue.push_back(std::move(next));
    }
  }
  return -1;
}

// Plain array simulation: at[v] is the pebble on v.
inline std::vector<unsigned> simulate(std::vector<unsigned> at,
                                      const std::vector<std::vector<Pair>>& rounds) {
  for (const auto& r : rounds)
    for (auto [u, v] : r) std::swap(at[u], at[v]);
  return at;
}

}  // namespace ref
