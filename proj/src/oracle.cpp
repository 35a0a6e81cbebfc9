#include "xroute/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "xroute/io.hpp"
#include "xroute/rng.hpp"
#include "xroute/scheduler.hpp"
#include "xroute/simulate.hpp"

namespace xroute {

namespace {

void collect_matchings(const Graph& g, std::size_t next, std::vector<char>& used,
                       std::vector<Edge>& current, std::vector<Matching>& out) {
  const auto& edges = g.edges();
  if (next == edges.size()) {
    if (!current.empty()) out.push_back(Matching{current});
    return;
  }
  collect_matchings(g, next + 1, used, current, out);
  const Edge e = edges[next];
  if (!used[e.u] && !used[e.v]) {
    used[e.u] = used[e.v] = 1;
    current.push_back(e);
    collect_matchings(g, next + 1, used, current, out);
    current.pop_back();
    used[e.u] = used[e.v] = 0;
  }
}

// Lehmer rank of a permutation of {0..n-1}, n <= 8.
std::uint32_t rank_of(const std::vector<Vertex>& at) {
  std::uint32_t rank = 0;
  const std::size_t n = at.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += at[j] < at[i] ? 1 : 0;
    rank = rank * static_cast<std::uint32_t>(n - i) + smaller;
  }
  return rank;
}

}  // namespace

std::vector<Matching> all_matchings(const Graph& g) {
  std::vector<Matching> out;
  std::vector<char> used(g.n(), 0);
  std::vector<Edge> current;
  collect_matchings(g, 0, used, current, out);
  return out;
}

std::size_t rt_exact(const Graph& g, const Permutation& pi, std::size_t cap) {
  const std::size_t n = g.n();
  if (n > kExactOracleMaxN) {
    throw Error(Errc::TooLarge, "exact oracle supports n <= " + std::to_string(kExactOracleMaxN) +
                                    ", got n=" + std::to_string(n));
  }
  if (pi.size() != n) throw Error(Errc::LengthMismatch, "permutation size does not match graph");

  PebbleConfig target;
  target.at.resize(n);
  for (Vertex v = 0; v < n; ++v) target.at[pi(v)] = v;
  const PebbleConfig start = PebbleConfig::identity(n);
  if (start == target) return 0;
  const std::uint32_t goal = rank_of(target.at);

  const auto moves = all_matchings(g);
  std::size_t states = 1;
  for (std::size_t i = 2; i <= n; ++i) states *= i;
  std::vector<char> seen(states, 0);
  seen[rank_of(start.at)] = 1;

  std::vector<PebbleConfig> frontier{start}, next;
  for (std::size_t depth = 1; depth <= cap && !frontier.empty(); ++depth) {
    next.clear();
    for (const PebbleConfig& c : frontier) {
      for (const Matching& m : moves) {
        PebbleConfig moved = apply_matching(c, m);
        const std::uint32_t r = rank_of(moved.at);
        if (seen[r]) continue;
        if (r == goal) return depth;
        seen[r] = 1;
        next.push_back(std::move(moved));
      }
    }
    frontier.swap(next);
  }
  throw Error(Errc::ExceedsCap, "no schedule within " + std::to_string(cap) + " rounds");
}

std::size_t rt_lower_bound(const Graph& g, const Permutation& pi) {
  if (pi.size() != g.n()) throw Error(Errc::LengthMismatch, "permutation size does not match graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (pi(v) == v) continue;
    const std::size_t d = bfs_distances(g, v)[pi(v)];
    if (d == std::numeric_limits<std::size_t>::max()) {
      throw Error(Errc::Disconnected, "pebble " + std::to_string(v) + " cannot reach its destination");
    }
    best = std::max(best, d);
  }
  return best;
}

BenchSpec parse_bench_spec(const std::string& text) {
  BenchSpec spec;
  try {
    const auto doc = nlohmann::json::parse(text);
    spec.d = doc.at("d").get<std::size_t>();
    spec.n_values = doc.at("n").get<std::vector<std::size_t>>();
    if (doc.contains("seeds")) {
      spec.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    } else {
      const auto count = doc.value("seeds_per_n", std::uint64_t{1});
      for (std::uint64_t s = 1; s <= count; ++s) spec.seeds.push_back(s);
    }
    spec.params.epsilon = doc.value("epsilon", spec.params.epsilon);
    spec.params.growth = doc.value("growth", spec.params.growth);
    spec.params.k = doc.value("k", spec.params.k);
    spec.params.frontier_target = doc.value("frontier_target", spec.params.frontier_target);
    spec.params.capacity = doc.value("capacity", spec.params.capacity);
    spec.beta = doc.value("beta", spec.beta);
    spec.lambda_tol = doc.value("lambda_tol", spec.lambda_tol);
    spec.lambda_max_iter = doc.value("lambda_max_iter", spec.lambda_max_iter);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("bench spec: ") + e.what());
  }
  return spec;
}

BenchRow bench_one(std::size_t n, std::size_t d, std::uint64_t seed, const BenchSpec& spec) {
  BenchRow row;
  row.n = n;
  row.d = d;
  row.seed = seed;
  try {
    const Graph g = gen_random_regular(n, d, seed);
    row.lambda_hat =
        estimate_lambda(g, spec.lambda_tol, spec.lambda_max_iter, derive_seed(seed, "lambda")).lambda_hat;
    row.diameter = diameter(g);
    Rng perm_rng(derive_seed(seed, "permutation"));
    const Permutation pi = Permutation::random(n, perm_rng);
    row.lower_bound = rt_lower_bound(g, pi);

    RouteOptions options;
    options.builder = spec.params;
    options.beta = spec.beta;
    options.seed = derive_seed(seed, "route");
    options.lambda_hat = row.lambda_hat;
    const auto t0 = std::chrono::steady_clock::now();
    const RouteReport report = route(g, pi, options);
    const auto t1 = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.rounds = report.rounds;
    row.verified = verify_achieves(g, pi, report.schedule).ok;
  } catch (const Error& e) {
    row.error = e.what();
    row.verified = false;
  }
  row.log2n_ratio = n > 1 ? static_cast<double>(row.rounds) / std::log2(static_cast<double>(n)) : 0.0;
  return row;
}

std::vector<BenchRow> bench_sweep(const BenchSpec& spec, unsigned jobs) {
  std::vector<std::size_t> ns = spec.n_values;
  std::vector<std::uint64_t> seeds = spec.seeds;
  std::sort(ns.begin(), ns.end());
  std::sort(seeds.begin(), seeds.end());
  std::vector<std::pair<std::size_t, std::uint64_t>> cells;
  for (std::size_t n : ns) {
    for (std::uint64_t s : seeds) cells.emplace_back(n, s);
  }
  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      rows[i] = bench_one(cells[i].first, spec.d, cells[i].second, spec);
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows, bool timing) {
  os << "n,d,seed,lambda_hat,rounds,diameter,log2n_ratio,wall_ms,verified\n";
  for (const BenchRow& r : rows) {
    os << r.n << ',' << r.d << ',' << r.seed << ',' << format_fixed(r.lambda_hat, 6) << ','
       << r.rounds << ',' << r.diameter << ',' << format_fixed(r.log2n_ratio, 4) << ','
       << format_fixed(timing ? r.wall_ms : 0.0, 3) << ',' << (r.verified ? "true" : "false")
       << '\n';
  }
}

}  // namespace xroute
