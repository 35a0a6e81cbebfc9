#include <doctest.h>

#include <cmath>

#include "support/helpers.hpp"
#include "xroute/rng.hpp"
#include "xroute/scheduler.hpp"

using namespace xroute;

TEST_SUITE("scheduler") {

TEST_CASE("select_batch") {
  using V = std::vector<std::pair<Vertex, Vertex>>;
  CHECK(select_batch(V{{0, 5}, {2, 7}}, 1) == V{{0, 5}});
  CHECK(select_batch(V{}, 3).empty());
  CHECK(select_batch(V{{7, 2}, {5, 0}, {3, 9}}, 10) == V{{0, 5}, {2, 7}, {3, 9}});
  CHECK_THROWS_AS(select_batch(V{{1, 1}}, 1), Error);
}

TEST_CASE("theoretical_round_bound") {
  // D = n, eps = 1/72: k = 1, bound 2 * 3 * 144.
  CHECK(theoretical_round_bound(1000, 1000, 1.0, 1.0 / 72.0) == 864u);
  CHECK_FALSE(theoretical_round_bound(256, 32, 8.0, 1.0 / 72.0));
  CHECK_FALSE(theoretical_round_bound(256, 72, 1.0, 1.0 / 72.0));  // lambda = d/72 exactly
  CHECK_FALSE(theoretical_round_bound(1000, 1000, 1.0, 1.0 / 8.0));
  // n = 10^6, d = 10^4, lambda = 100: eps n = 13888.9, log_100 = 2.07 -> k = 3.
  CHECK(theoretical_round_bound(1000000, 10000, 100.0, 1.0 / 72.0) == 2u * 7u * 144u);
  // eps n = 100 = D exactly: k = 1.
  CHECK(theoretical_round_bound(7200, 10000, 100.0, 1.0 / 72.0) == 864u);
  std::size_t prev = SIZE_MAX;
  for (double lambda : {130.0, 100.0, 50.0, 10.0, 2.0, 1.0}) {
    const auto b = theoretical_round_bound(1000000, 10000, lambda, 1.0 / 72.0);
    REQUIRE(b);
    CHECK(*b <= prev);
    prev = *b;
  }
}

TEST_CASE("identity routes in zero rounds") {
  const Graph g = gen_random_regular(64, 16, 1);
  const RouteReport r = route(g, Permutation::identity(64), RouteOptions{});
  CHECK(r.rounds == 0);
  CHECK(r.schedule.size() == 0);
  CHECK(r.verified);
}

TEST_CASE("K_2 swap routes in one round") {
  const RouteReport r = route(gen_complete(2), Permutation(std::vector<Vertex>{1, 0}), RouteOptions{});
  CHECK(r.rounds == 1);
  CHECK(r.verified);
  CHECK(r.batch_k == std::vector<std::size_t>{0});
}

TEST_CASE("random 32-regular graphs, n = 256, default parameters") {
  Rng rng(99);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = gen_random_regular(256, 32, seed);
    const Permutation pi = Permutation::random(256, rng);
    RouteOptions opt;
    opt.seed = seed;
    const RouteReport r = route(g, pi, opt);
    CHECK(r.verified);
    CHECK(verify_achieves(g, pi, r.schedule).ok);
    CHECK(r.rounds == r.schedule.size());
    // Round accounting: one (2k+1)-round block per batch.
    std::size_t total = 0;
    for (std::size_t k : r.batch_k) total += 2 * k + 1;
    CHECK(total == r.rounds);
    CHECK(r.batch_k.size() == r.batches_sigma + r.batches_tau);
  }
}

TEST_CASE("sigma checkpoint: first block realizes sigma") {
  const Graph g = gen_random_regular(128, 32, 4);
  Rng rng(4);
  const Permutation pi = Permutation::random(128, rng);
  const auto parts = decompose_into_involutions(pi);
  RouteOptions opt;
  opt.seed = 4;
  const double lambda = estimate_lambda(g, 1e-6, 0, 1).lambda_hat;
  const ResolvedParams params = resolve(opt.builder, 128, 32, lambda);
  const auto first = route_involution(g, parts.sigma, opt, params, 0);
  const auto second = route_involution(g, parts.tau, opt, params, 1);
  CHECK(realized_permutation(g, first.schedule) == parts.sigma.permutation());
  CHECK(realized_permutation(g, second.schedule) == parts.tau.permutation());
  Schedule both = first.schedule;
  both.append(second.schedule);
  CHECK(verify_achieves(g, pi, both).ok);
}

TEST_CASE("route is deterministic for a fixed seed") {
  const Graph g = gen_random_regular(128, 16, 2);
  Rng rng(12);
  const Permutation pi = Permutation::random(128, rng);
  RouteOptions opt;
  opt.seed = 5;
  CHECK(route(g, pi, opt).schedule == route(g, pi, opt).schedule);
  CHECK(report_text(route(g, pi, opt)) == report_text(route(g, pi, opt)));
}

TEST_CASE("partition failure surfaces as PartitionFailed") {
  // On C_6 the threshold is one neighbour per side, and pairing 0 with 2
  // puts both neighbours of 1 on one side.
  const Graph c6 = gen_cycle(6);
  const Permutation pi(std::vector<Vertex>{2, 1, 0, 3, 4, 5});
  RouteOptions opt;
  opt.max_resamples = 20;
  try {
    route(c6, pi, opt);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PartitionFailed);
  }
}

TEST_CASE("report text") {
  const RouteReport r = route(gen_complete(2), Permutation(std::vector<Vertex>{1, 0}), RouteOptions{});
  const std::string text = report_text(r);
  CHECK(text.find("rounds: 1\n") == 0);
  CHECK(text.find("verified: true\n") != std::string::npos);
  CHECK(text.find("theoretical_bound: infeasible\n") != std::string::npos);
  CHECK(text.find("schedule:\nround 1: 0-1\n") != std::string::npos);
}

TEST_CASE("rejects mismatched input") {
  CHECK_THROWS_AS(route(gen_complete(4), Permutation::identity(3), RouteOptions{}), Error);
  std::vector<Edge> path{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(route(Graph::irregular_fixture(3, path), Permutation::identity(3), RouteOptions{}),
                  Error);
}

}  // TEST_SUITE
