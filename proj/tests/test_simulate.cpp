#include <doctest.h>

#include "support/helpers.hpp"
#include "xroute/rng.hpp"
#include "xroute/simulate.hpp"

using namespace xroute;

namespace {

Matching M(std::vector<Edge> e) { return Matching::from_pairs(std::move(e)); }

// A random maximal-ish matching of g.
Matching random_matching(const Graph& g, Rng& rng) {
  std::vector<Edge> edges = g.edges();
  rng.shuffle(std::span<Edge>(edges));
  std::vector<char> used(g.n(), 0);
  std::vector<Edge> pick;
  for (const Edge& e : edges) {
    if (used[e.u] || used[e.v] || rng.below(3) == 0) continue;
    used[e.u] = used[e.v] = 1;
    pick.push_back(e);
  }
  return M(pick);
}

Schedule random_schedule(const Graph& g, Rng& rng, std::size_t rounds) {
  Schedule s;
  for (std::size_t i = 0; i < rounds; ++i) s.rounds.push_back(random_matching(g, rng));
  return s;
}

}  // namespace

TEST_SUITE("simulate") {

TEST_CASE("validate_matching on C_4") {
  const Graph c4 = gen_cycle(4);
  CHECK_NOTHROW(validate_matching(c4, M({{0, 1}, {2, 3}})));

  auto fault = check_matching(c4, M({{0, 1}, {1, 2}}));
  REQUIRE(fault);
  CHECK(fault->kind == MatchingFault::Kind::VertexReused);
  CHECK(fault->vertex == 1);

  fault = check_matching(c4, M({{0, 2}}));
  REQUIRE(fault);
  CHECK(fault->kind == MatchingFault::Kind::EdgeNotInGraph);
  CHECK(fault->edge == Edge{0, 2});

  try {
    validate_matching(c4, M({{0, 2}}));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EdgeNotInGraph);
  }
}

TEST_CASE("apply_matching") {
  const PebbleConfig id = PebbleConfig::identity(4);
  const Matching m = M({{0, 1}, {2, 3}});
  CHECK(apply_matching(id, m).at == std::vector<Vertex>{1, 0, 3, 2});
  CHECK(apply_matching(apply_matching(id, m), m) == id);
  CHECK(apply_matching(id, Matching{}) == id);
}

TEST_CASE("run_schedule") {
  const Graph k2 = gen_complete(2);
  const PebbleConfig id = PebbleConfig::identity(2);
  CHECK(run_schedule(k2, id, Schedule{}) == id);
  Schedule one;
  one.rounds.push_back(M({{0, 1}}));
  CHECK(run_schedule(k2, id, one).at == std::vector<Vertex>{1, 0});

  const Graph c4 = gen_cycle(4);
  Schedule bad;
  bad.rounds.push_back(M({{0, 1}}));
  bad.rounds.push_back(M({{0, 2}}));
  try {
    run_schedule(c4, PebbleConfig::identity(4), bad);
    FAIL("no throw");
  } catch (const ScheduleError& e) {
    CHECK(e.round() == 2);
    CHECK(e.code() == Errc::EdgeNotInGraph);
  }
}

TEST_CASE("verify_achieves") {
  const Graph k2 = gen_complete(2);
  const Permutation swap(std::vector<Vertex>{1, 0});
  Schedule one;
  one.rounds.push_back(M({{0, 1}}));
  auto r = verify_achieves(k2, Permutation::identity(2), Schedule{});
  CHECK(r.ok);
  CHECK(r.rounds_used == 0);
  r = verify_achieves(k2, swap, one);
  CHECK(r.ok);
  CHECK(r.rounds_used == 1);
  CHECK_FALSE(verify_achieves(k2, swap, Schedule{}).ok);
}

TEST_CASE("destination convention: pebble v ends on pi(v)") {
  // Path 0-1-2 inside C_3: swap (0 1) then (1 2) sends pebble 0 to vertex 2.
  const Graph c3 = gen_cycle(3);
  Schedule s;
  s.rounds.push_back(M({{0, 1}}));
  s.rounds.push_back(M({{1, 2}}));
  const PebbleConfig end = run_schedule(c3, PebbleConfig::identity(3), s);
  CHECK(end.at == std::vector<Vertex>{1, 2, 0});
  const Permutation pi(std::vector<Vertex>{2, 0, 1});
  CHECK(verify_achieves(c3, pi, s).ok);
  CHECK(realized_permutation(c3, s) == pi);
}

TEST_CASE("schedule properties") {
  Rng rng(11);
  const Graph g = gen_random_regular(40, 5, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const Schedule s1 = random_schedule(g, rng, 1 + rng.below(6));
    const Schedule s2 = random_schedule(g, rng, 1 + rng.below(6));
    const PebbleConfig id = PebbleConfig::identity(g.n());

    Schedule both = s1;
    both.append(s2);
    CHECK(run_schedule(g, id, both) == run_schedule(g, run_schedule(g, id, s1), s2));

    Schedule there_and_back = s1;
    there_and_back.append(s1.reversed());
    CHECK(run_schedule(g, id, there_and_back) == id);

    const Permutation pi = realized_permutation(g, s1);
    CHECK(verify_achieves(g, pi, s1).ok);
    CHECK(verify_achieves(g, pi.inverse(), s1.reversed()).ok);

    // Cross-check against the plain array simulator.
    std::vector<unsigned> start(g.n());
    for (unsigned v = 0; v < g.n(); ++v) start[v] = v;
    const auto expect = ref::simulate(start, testutil::ref_rounds(both));
    const auto got = run_schedule(g, id, both).at;
    CHECK(std::equal(expect.begin(), expect.end(), got.begin(), got.end()));
    CHECK(run_schedule(g, id, both).is_bijection());
  }
}

}  // TEST_SUITE
