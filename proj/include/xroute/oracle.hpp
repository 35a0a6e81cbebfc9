#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xroute/graph.hpp"
#include "xroute/paths.hpp"
#include "xroute/perm.hpp"

namespace xroute {

/// Largest graph the exact oracle accepts (n! configurations).
inline constexpr std::size_t kExactOracleMaxN = 8;

/// Every nonempty matching of g (not only maximal ones).
std::vector<Matching> all_matchings(const Graph& g);

/// Exact routing number rt(G, pi) by breadth-first search over pebble
/// configurations. Throws TooLarge for n > 8 and ExceedsCap when no schedule
/// of at most cap rounds exists.
std::size_t rt_exact(const Graph& g, const Permutation& pi, std::size_t cap = 64);

/// max_v dist(v, pi(v)): a pebble moves at most one edge per round.
std::size_t rt_lower_bound(const Graph& g, const Permutation& pi);

struct BenchSpec {
  std::size_t d = 0;
  std::vector<std::size_t> n_values;
  std::vector<std::uint64_t> seeds;
  BuilderParams params;
  double beta = 1.0 / 3.0;
  double lambda_tol = 1e-8;
  std::size_t lambda_max_iter = 0;
};

/// JSON bench spec: {"d": 32, "n": [128, 256], "seeds": [1, 2] | "seeds_per_n": 10,
/// "epsilon", "growth", "k", "frontier_target", "capacity", "beta", "lambda_tol"}.
BenchSpec parse_bench_spec(const std::string& text);

struct BenchRow {
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  double lambda_hat = 0.0;
  std::size_t rounds = 0;
  std::size_t diameter = 0;
  std::size_t lower_bound = 0;  // rt_lower_bound of the sampled permutation
  double log2n_ratio = 0.0;
  double wall_ms = 0.0;
  bool verified = false;
  std::string error;
};

/// One row per (n, seed), ordered by (n, seed). Failures are recorded in
/// the row and the sweep continues. jobs > 1 runs rows on worker threads.
std::vector<BenchRow> bench_sweep(const BenchSpec& spec, unsigned jobs = 1);

BenchRow bench_one(std::size_t n, std::size_t d, std::uint64_t seed, const BenchSpec& spec);

/// CSV with header n,d,seed,lambda_hat,rounds,diameter,log2n_ratio,wall_ms,verified.
/// With timing disabled wall_ms is written as 0.000 so output is byte-stable.
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows, bool timing = true);

}  // namespace xroute
